#pragma once

#include <cstddef>
#include <span>

#include "nearcurve/exact.hpp"
#include "nearcurve/polynomial.hpp"
#include "nearcurve/strip.hpp"

namespace nearcurve {

/// The unique polynomial of degree < points.size() through the points, by
/// exact elimination on the Vandermonde system. Requires
/// 1 <= points.size() <= cap + 1 and distinct abscissae.
RationalPolynomial interpolate(std::span<const LatticePoint> points, std::size_t cap);

/// ceil(X)^(n(n+1)/2): every interpolant through nodes in [X, 2X] has a
/// denominator dividing a Vandermonde determinant no larger than this.
BigInteger denominator_bound(std::size_t n, const BigRational& X);

/// Tests y == P(x) exactly using q*P in Z[x].
class CurveMembership {
 public:
  explicit CurveMembership(const RationalPolynomial& p);
  bool contains(const LatticePoint& point) const;

 private:
  std::vector<BigInteger> coeffs_;
  BigInteger denominator_;
};

std::size_t on_curve_count(std::span<const LatticePoint> points, const RationalPolynomial& p);

enum class RSearch {
  exhaustive,
  /// Only curves through n+1 consecutive points; a lower bound on R.
  consecutive_windows,
};

struct ROptions {
  RSearch search = RSearch::exhaustive;
  /// Maximum number of (base subset, candidate) pairs examined.
  std::size_t budget = 50'000'000;
  unsigned jobs = 1;
};

struct RResult {
  std::size_t R = 0;
  /// Lexicographically smallest coefficient vector among the maximizers.
  RationalPolynomial witness;
  bool exhaustive = true;
};

/// Maximum number of the points on a single polynomial of degree <= n.
RResult compute_R(std::span<const LatticePoint> points, std::size_t n, const ROptions& options = {});

}  // namespace nearcurve
