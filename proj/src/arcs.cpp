#include "nearcurve/arcs.hpp"

#include <functional>
#include <string>

#include "nearcurve/errors.hpp"
#include "nearcurve/fit.hpp"

namespace nearcurve {

LambdaResult lambda_det(std::span<const LatticePoint> points) {
  if (points.size() < 3) throw PreconditionError("Lambda needs n+2 >= 3 points");
  const std::size_t k = points.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (points[i].x == points[j].x) throw DegenerateInputError("Lambda points must have distinct x");
    }
  }
  IntegerMatrix m(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    BigInteger power = 1;
    const BigInteger x(static_cast<long>(points[r].x));
    for (std::size_t c = 0; c + 1 < k; ++c) {
      m(r, c) = power;
      power *= x;
    }
    m(r, k - 1) = points[r].y;
  }
  return {det(m), PointSet(points.begin(), points.end())};
}

GapBound lambda_gap_bound(std::size_t n, const BigRational& delta, const BigRational& width) {
  if (n == 0) throw PreconditionError("degree must be at least 1");
  if (delta < 0) throw DomainError("delta must be non-negative");
  if (delta == 0) return {true, {}};
  const BigRational base = 1 / (BigRational(static_cast<unsigned long>(n + 2)) * delta);
  return {false, pow_bracket(base, 2, n * (n + 1), width)};
}

bool gap_satisfies(const BigInteger& gap, std::size_t n, const BigRational& delta) {
  BigRational width = default_width();
  for (int round = 0; round < 16; ++round) {
    const GapBound bound = lambda_gap_bound(n, delta, width);
    if (bound.infinite) return false;
    if (BigRational(gap) >= bound.value.hi) return true;
    if (BigRational(gap) < bound.value.lo) return false;
    width *= power_of_two(-64);
  }
  throw CertificationError("cannot compare Lambda gap " + to_string(gap) + " with its bound");
}

std::size_t Decomposition::count(GroupKind kind) const {
  std::size_t total = 0;
  for (const Group& g : groups) total += g.kind == kind;
  return total;
}

const char* to_string(GroupKind kind) {
  switch (kind) {
    case GroupKind::major_arc:
      return "MAJOR_ARC";
    case GroupKind::separated:
      return "SEPARATED";
    case GroupKind::tail:
      return "TAIL";
  }
  return "?";
}

Decomposition decompose(std::span<const LatticePoint> points, std::size_t n, const BigRational& delta) {
  if (n == 0) throw PreconditionError("degree must be at least 1");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].x == points[i - 1].x) throw DegenerateInputError("points must have distinct x");
    if (points[i].x < points[i - 1].x) throw PreconditionError("points must be sorted by x");
  }
  Decomposition out;
  out.degree = n;
  const std::size_t N = points.size();
  std::size_t start = 0;
  while (N - start >= n + 2) {
    const std::size_t end = start + n + 1;
    LambdaResult lambda = lambda_det(points.subspan(start, n + 2));
    if (lambda.value != 0) {
      if (delta > 0) {
        const BigInteger gap(static_cast<long>(points[end].x - points[start].x));
        if (!gap_satisfies(gap, n, delta)) {
          throw InvariantViolation("separated window at x = " + std::to_string(points[start].x) +
                                   " is narrower than the Lambda gap bound");
        }
      }
      out.groups.push_back({GroupKind::separated, start, end, std::nullopt, std::move(lambda.value)});
      start = end;
      continue;
    }

    // Lambda(M_1..M_{n+1}, M) = V(x_1..x_{n+1}) * (y - P(x)), so extending
    // while that determinant vanishes is a membership test on P.
    const RationalPolynomial P = interpolate(points.subspan(start, n + 1), n);
    const CurveMembership curve(P);
    std::size_t j = end;
    while (j + 1 < N && curve.contains(points[j + 1])) ++j;

    MajorArc arc{P, PointSet(points.begin() + start, points.begin() + j + 1), start, j};
    for (const LatticePoint& p : arc.points) {
      if (!curve.contains(p)) throw InvariantViolation("major arc point off its equation");
    }
    out.groups.push_back({GroupKind::major_arc, start, j, std::move(arc), 0});
    start = j;
  }
  if (start < N) out.groups.push_back({GroupKind::tail, start, N - 1, std::nullopt, 0});
  return out;
}

namespace {

// |phi| <= delta on all of [a, b], certified by interval subdivision.
// Returns false once some sample point is certified outside the band.
bool covers_interval_mode(const RealPolynomial& f, const RationalPolynomial& P, const BigRational& delta,
                          const BigRational& a, const BigRational& b) {
  const Bracket band(-delta, delta);
  unsigned long bits = f.precision_bits();
  while (true) {
    std::vector<Bracket> stack{Bracket(a, b)};
    std::size_t budget = 1 << 16;
    bool undecided = false;
    while (!stack.empty()) {
      const Bracket piece = stack.back();
      stack.pop_back();
      const Bracket phi = f.enclose(piece, bits) - eval(P, piece);
      if (band.lo <= phi.lo && phi.hi <= band.hi) continue;
      if (phi.lo > band.hi || phi.hi < band.lo) return false;
      const BigRational mid = piece.midpoint();
      const Bracket at_mid = f.enclose(Bracket::exact(mid), bits) - eval(P, Bracket::exact(mid));
      if (at_mid.lo > band.hi || at_mid.hi < band.lo) return false;
      if (budget == 0 || piece.width() < power_of_two(-static_cast<long>(bits) / 2)) {
        undecided = true;
        break;
      }
      budget -= 2;
      stack.emplace_back(piece.lo, mid);
      stack.emplace_back(mid, piece.hi);
    }
    if (!undecided) return true;
    if (bits * 2 > f.max_precision_bits()) break;
    bits *= 2;
  }
  throw CertificationError("cannot certify the band between x = " + to_string(a) + " and x = " + to_string(b) +
                           " within " + std::to_string(f.max_precision_bits()) + " bits");
}

}  // namespace

ProperSplit split_proper(const MajorArc& arc, const StripSpec& spec) {
  const RealPolynomial& f = spec.curve();
  const BigRational& delta = spec.delta();
  const std::size_t n = spec.degree();

  std::function<bool(const LatticePoint&, const LatticePoint&)> same_component;
  RationalPolynomial phi;
  if (f.mode() == CoefficientMode::rational) {
    phi = f.exact() - arc.equation;
    same_component = [&](const LatticePoint& l, const LatticePoint& r) {
      // every arc point is in the band, so a constant phi keeps them together
      if (phi.is_zero() || *phi.degree() == 0) return true;
      return sublevel_covers(phi, delta, Bracket(BigRational(l.x), BigRational(r.x)));
    };
  } else {
    same_component = [&](const LatticePoint& l, const LatticePoint& r) {
      return covers_interval_mode(f, arc.equation, delta, BigRational(l.x), BigRational(r.x));
    };
  }

  ProperSplit out;
  auto emit = [&](std::size_t lo, std::size_t hi) {
    if (hi - lo + 1 >= n + 2) {
      out.arcs.push_back({arc.equation, PointSet(arc.points.begin() + lo, arc.points.begin() + hi + 1),
                          arc.first + lo, arc.first + hi});
    } else {
      out.fragments.emplace_back(arc.first + lo, arc.first + hi);
    }
  };
  std::size_t piece_start = 0;
  for (std::size_t i = 0; i + 1 < arc.points.size(); ++i) {
    if (!same_component(arc.points[i], arc.points[i + 1])) {
      emit(piece_start, i);
      piece_start = i + 1;
    }
  }
  emit(piece_start, arc.points.size() - 1);
  return out;
}

}  // namespace nearcurve
