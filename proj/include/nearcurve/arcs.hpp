#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nearcurve/bracket.hpp"
#include "nearcurve/exact.hpp"
#include "nearcurve/polynomial.hpp"
#include "nearcurve/strip.hpp"

namespace nearcurve {

struct LambdaResult {
  BigInteger value;
  PointSet points;
};

/// Determinant of the (n+2)x(n+2) matrix with rows (1, x, ..., x^n, y).
/// Vanishes exactly when the points lie on one polynomial of degree <= n.
LambdaResult lambda_det(std::span<const LatticePoint> points);

/// Lower bound (1/((n+2) delta))^(2/(n(n+1))) on the x-extent of n+2 strip
/// points with nonzero Lambda. Infinite for delta = 0.
struct GapBound {
  bool infinite = false;
  Bracket value;
};

GapBound lambda_gap_bound(std::size_t n, const BigRational& delta, const BigRational& width = default_width());

/// True when the integer gap certainly satisfies gap >= bound. Refines the
/// bracket as needed; an irrational bound is never hit exactly.
bool gap_satisfies(const BigInteger& gap, std::size_t n, const BigRational& delta);

struct MajorArc {
  RationalPolynomial equation;
  PointSet points;
  /// Indices of the first and last point in the parent point set.
  std::size_t first = 0;
  std::size_t last = 0;

  const BigInteger& denominator() const { return equation.denominator(); }
  std::int64_t length() const { return points.back().x - points.front().x; }
};

enum class GroupKind { major_arc, separated, tail };

struct Group {
  GroupKind kind = GroupKind::tail;
  std::size_t first = 0;
  std::size_t last = 0;
  std::optional<MajorArc> arc;
  /// Lambda of a separated window.
  BigInteger lambda;

  std::size_t size() const { return last - first + 1; }
};

/// Consecutive groups share their boundary point: the scan restarts on the
/// last point of the previous window. The tail, if any, is last.
struct Decomposition {
  std::size_t degree = 0;
  std::vector<Group> groups;

  std::size_t count(GroupKind kind) const;
};

/// Left-to-right scan. Take n+2 points; if Lambda != 0 the window is
/// separated and the scan restarts at its last point. Otherwise fit the curve
/// through the first n+1 and extend while the next point stays on it; the arc
/// ends at the last such point, where the scan restarts. For delta > 0 every
/// separated window is checked against lambda_gap_bound and a violation
/// throws InvariantViolation.
Decomposition decompose(std::span<const LatticePoint> points, std::size_t n, const BigRational& delta);

/// A major arc cut along the connected components of
/// {x in [X, 2X] : |f(x) - P(x)| <= delta}. Pieces with fewer than n+2 points
/// are no longer major arcs and are reported as index ranges.
struct ProperSplit {
  std::vector<MajorArc> arcs;
  std::vector<std::pair<std::size_t, std::size_t>> fragments;
};

ProperSplit split_proper(const MajorArc& arc, const StripSpec& spec);

const char* to_string(GroupKind kind);

}  // namespace nearcurve
