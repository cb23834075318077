#pragma once

#include <cstdint>
#include <vector>

#include "nearcurve/bracket.hpp"
#include "nearcurve/exact.hpp"
#include "nearcurve/real.hpp"

namespace nearcurve {

/// r/s in lowest terms with an enclosure of |alpha - r/s|.
struct Approximation {
  BigInteger r;
  BigInteger s = 1;
  Bracket error;
};

struct ConvergentExpansion {
  std::vector<Approximation> convergents;
  std::vector<BigInteger> partial_quotients;
  /// Set when an enclosure could not certify the next partial quotient.
  bool truncated = false;
  /// Set when the expansion of a rational alpha ran to its end.
  bool terminated = false;
};

/// Convergents p_k/q_k with q_k <= s_max. Rational and quadratic alpha are
/// expanded exactly; a fixed enclosure is expanded while its partial
/// quotients stay certified.
ConvergentExpansion convergents(const RealNumber& alpha, const BigInteger& s_max);

/// Three-valued comparison of |alpha - r/s| against a bound: exact for
/// rational and quadratic alpha.
Certified compare_distance(const RealNumber& alpha, const BigInteger& r, const BigInteger& s, const BigRational& bound);

/// The convergent with the largest s <= s_max whose error is certified to be
/// at most 1/s^2.
Approximation best_approx_in_range(const RealNumber& alpha, const BigInteger& s_max);

struct BadlyApproxEntry {
  std::int64_t s = 0;
  /// Nearest numerator; the closest candidate when the test fails.
  BigInteger r;
  bool pass = true;
};

struct BadlyApproxReport {
  std::vector<BadlyApproxEntry> entries;
  bool pass = true;
};

/// For each s in [s_lo, s_hi] tests |alpha - r/s| >= c1 / s^((n+3)/2) for
/// the two integers r nearest s*alpha. A finite-range check only: it cannot
/// decide the hypothesis for all s. An empty range passes vacuously.
BadlyApproxReport check_badly_approximable(const RealNumber& alpha, const BigRational& c1, std::size_t n,
                                           std::int64_t s_lo, std::int64_t s_hi);

}  // namespace nearcurve
