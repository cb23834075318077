#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "nearcurve/arcs.hpp"
#include "nearcurve/bracket.hpp"
#include "nearcurve/diophantine.hpp"
#include "nearcurve/exact.hpp"
#include "nearcurve/fit.hpp"
#include "nearcurve/strip.hpp"

namespace nearcurve {

/// delta^(2/(n(n+1))) * X; exactly 0 for delta = 0.
Bracket theorem_rhs(std::size_t n, const BigRational& X, const BigRational& delta,
                    const BigRational& width = default_width());

/// The X^eps term: symbolic, shown at a display epsilon and never used in a
/// ratio. For n = 1 it is the constant 1, which does enter ratios.
struct EpsilonTerm {
  bool constant_one = false;
  BigRational epsilon;
  Bracket display;
};

EpsilonTerm epsilon_term(std::size_t n, const BigRational& X, const BigRational& epsilon,
                         const BigRational& width = default_width());

struct Corollary1Terms {
  Bracket main;
  /// X / s^(1/n)
  Bracket approximation;
  EpsilonTerm third;
};

Corollary1Terms corollary1_rhs(std::size_t n, const BigRational& X, const BigRational& delta, const BigInteger& s,
                               const BigRational& epsilon = BigRational(1, 10),
                               const BigRational& width = default_width());

struct Corollary2Terms {
  Bracket main;
  EpsilonTerm second;
};

Corollary2Terms corollary2_rhs(std::size_t n, const BigRational& X, const BigRational& delta,
                               const BigRational& epsilon = BigRational(1, 10),
                               const BigRational& width = default_width());

struct DecompositionStats {
  std::size_t arcs = 0;
  std::size_t max_arc = 0;
  BigInteger max_Q = 0;
  std::size_t separated = 0;
  std::size_t tail = 0;
  /// Size threshold separating small arcs: n^2+n, or 3 for n = 1.
  std::size_t V = 0;
  std::size_t arcs_above_V = 0;
};

DecompositionStats summarize(const Decomposition& d);

struct VerifyOptions {
  unsigned jobs = 1;
  ROptions r;
  BigRational epsilon = BigRational(1, 10);
};

struct BoundReport {
  std::size_t n = 0;
  BigRational X;
  BigRational delta;
  CoefficientMode mode = CoefficientMode::rational;

  std::size_t S = 0;
  RResult R;
  Decomposition decomposition;
  DecompositionStats stats;

  Bracket theorem_term;
  /// S / (theorem_term + R) over the whole bracket.
  Bracket ratio;
  /// Upper end of the ratio rounded up to 12 decimals.
  std::string ratio_display;

  /// Absent when no approximation could be certified.
  std::optional<Approximation> chosen;
  std::optional<Corollary1Terms> corollary1;
  std::optional<Bracket> corollary1_ratio;
  Corollary2Terms corollary2;
  std::optional<Bracket> corollary2_ratio;
  std::string notes;
};

/// Counts, decomposes and computes R for one strip, and pairs S with the
/// right-hand sides. Separated windows are checked against the Lambda gap.
BoundReport verify_theorem(const StripSpec& spec, const VerifyOptions& options = {});

struct SweepCell {
  std::optional<BoundReport> report;
  std::string error;
};

struct SweepReport {
  std::vector<SweepCell> cells;
  /// Largest ratio upper end per degree over the successful cells.
  std::map<std::size_t, BigRational> max_ratio;
};

/// verify_theorem on every cell; cells run on `options.jobs` threads and are
/// reported in grid order. Errors are recorded per cell.
SweepReport sweep(const std::vector<StripSpec>& grid, const VerifyOptions& options = {});

/// n,X,delta_num,delta_den,S,R,rhs_lo,rhs_hi,ratio,arcs,max_arc,max_Q
std::string sweep_csv(const std::vector<StripSpec>& grid, const SweepReport& report);

}  // namespace nearcurve
