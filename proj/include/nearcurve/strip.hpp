#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nearcurve/bracket.hpp"
#include "nearcurve/exact.hpp"
#include "nearcurve/polynomial.hpp"

namespace nearcurve {

struct LatticePoint {
  std::int64_t x = 0;
  BigInteger y;

  friend bool operator==(const LatticePoint&, const LatticePoint&) = default;
};

/// Integer points ordered by x (then y).
using PointSet = std::vector<LatticePoint>;

/// The strip {(x, y) : X <= x <= 2X, |y - f(x)| <= delta}.
class StripSpec {
 public:
  /// Throws DomainError unless X >= 2 and 0 <= delta <= 1/4.
  StripSpec(RealPolynomial f, BigRational X, BigRational delta);

  const RealPolynomial& curve() const { return f_; }
  std::size_t degree() const { return f_.degree(); }
  const BigRational& X() const { return X_; }
  const BigRational& delta() const { return delta_; }
  /// ceil(X) and floor(2X): the integer abscissae of the strip.
  std::int64_t x_min() const { return x_min_; }
  std::int64_t x_max() const { return x_max_; }

 private:
  RealPolynomial f_;
  BigRational X_;
  BigRational delta_;
  std::int64_t x_min_ = 0;
  std::int64_t x_max_ = 0;
};

struct StripCount {
  std::size_t S = 0;
  PointSet points;
  /// ||f(x)|| per point: exact in rational mode, an enclosure otherwise.
  std::vector<Bracket> distances;
};

/// Brute force over every integer x in [X, 2X]. The range is split into
/// `jobs` contiguous chunks evaluated concurrently; output is in x order
/// regardless of scheduling.
StripCount count_points(const StripSpec& spec, unsigned jobs = 1);

/// ||f(x)||: exact in rational mode; in interval mode an enclosure of width
/// <= 2^-precision when the coefficients can be refined that far.
Bracket nearest_integer_distance(const RealPolynomial& f, std::int64_t x);

}  // namespace nearcurve
