#include "nearcurve/fit.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

#include "nearcurve/errors.hpp"

namespace nearcurve {

RationalPolynomial interpolate(std::span<const LatticePoint> points, std::size_t cap) {
  const std::size_t m = points.size();
  if (m == 0) throw PreconditionError("interpolation needs at least one point");
  if (m > cap + 1) throw PreconditionError("more interpolation points than degree cap + 1");
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      if (points[i].x == points[j].x) throw DegenerateInputError("interpolation nodes must have distinct x");
    }
  }

  // augmented Vandermonde system [V | y]
  std::vector<std::vector<BigRational>> a(m, std::vector<BigRational>(m + 1));
  for (std::size_t r = 0; r < m; ++r) {
    BigRational power = 1;
    const BigRational x(BigInteger(static_cast<long>(points[r].x)));
    for (std::size_t c = 0; c < m; ++c) {
      a[r][c] = power;
      power *= x;
    }
    a[r][m] = BigRational(points[r].y);
  }
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t pivot = k;
    while (a[pivot][k] == 0) ++pivot;  // nonsingular: distinct nodes
    std::swap(a[k], a[pivot]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == k || a[r][k] == 0) continue;
      const BigRational factor = a[r][k] / a[k][k];
      for (std::size_t c = k; c <= m; ++c) a[r][c] -= factor * a[k][c];
    }
  }
  std::vector<BigRational> coeffs(m);
  for (std::size_t k = 0; k < m; ++k) coeffs[k] = a[k][m] / a[k][k];
  return RationalPolynomial(std::move(coeffs));
}

BigInteger denominator_bound(std::size_t n, const BigRational& X) {
  BigInteger out;
  const BigInteger base = ceil(X);
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), n * (n + 1) / 2);
  return out;
}

CurveMembership::CurveMembership(const RationalPolynomial& p)
    : coeffs_(p.integer_coefficients()), denominator_(p.denominator()) {}

bool CurveMembership::contains(const LatticePoint& point) const {
  BigInteger acc = 0;
  const BigInteger x(static_cast<long>(point.x));
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc == denominator_ * point.y;
}

std::size_t on_curve_count(std::span<const LatticePoint> points, const RationalPolynomial& p) {
  const CurveMembership curve(p);
  return static_cast<std::size_t>(
      std::count_if(points.begin(), points.end(), [&](const LatticePoint& pt) { return curve.contains(pt); }));
}

namespace {

struct Best {
  std::size_t count = 0;
  RationalPolynomial witness;

  void offer(std::size_t c, const RationalPolynomial& p) {
    if (c > count || (c == count && lexicographically_less(p, witness))) {
      count = c;
      witness = p;
    }
  }
  void merge(const Best& other) {
    if (other.count > 0) offer(other.count, other.witness);
  }
};

BigInteger binomial(std::size_t n, std::size_t k) {
  BigInteger out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

// Every curve of degree <= n through at least n+1 of the points is found
// from its first n points: the remaining points on it are exactly the later
// points sharing the same top Newton coefficient
//   c_k = (y_k - B(x_k)) / prod_j (x_k - x_j)
// where B interpolates the n base points.
void scan_bases(std::span<const LatticePoint> points, std::size_t n, std::size_t first_index, std::size_t stride,
                Best& best) {
  const std::size_t S = points.size();
  std::vector<std::size_t> idx(n);
  std::vector<LatticePoint> base(n);
  std::vector<std::pair<BigRational, std::size_t>> tops;

  auto visit = [&]() {
    for (std::size_t j = 0; j < n; ++j) base[j] = points[idx[j]];
    const RationalPolynomial b = interpolate(base, n);
    RationalPolynomial nodal = RationalPolynomial::constant(1);
    for (const LatticePoint& p : base) nodal = nodal * RationalPolynomial({BigRational(-p.x), 1});
    tops.clear();
    for (std::size_t k = idx.back() + 1; k < S; ++k) {
      const BigRational x(BigInteger(static_cast<long>(points[k].x)));
      tops.emplace_back((BigRational(points[k].y) - eval(b, x)) / eval(nodal, x), k);
    }
    std::sort(tops.begin(), tops.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    std::size_t i = 0;
    while (i < tops.size()) {
      std::size_t j = i;
      while (j + 1 < tops.size() && tops[j + 1].first == tops[i].first) ++j;
      const std::size_t count = n + (j - i + 1);
      if (count >= best.count) best.offer(count, b + nodal * tops[i].first);
      i = j + 1;
    }
  };

  // idx[0] runs over first_index, first_index + stride, ...
  for (std::size_t i0 = first_index; i0 + n < S; i0 += stride) {
    idx[0] = i0;
    if (n == 1) {
      visit();
      continue;
    }
    for (std::size_t j = 1; j < n; ++j) idx[j] = i0 + j;
    while (true) {
      if (idx.back() + 1 < S) visit();
      std::size_t pos = n - 1;
      while (pos >= 1 && idx[pos] == S - 1 - (n - 1 - pos) - 1) --pos;
      if (pos == 0) break;
      ++idx[pos];
      for (std::size_t j = pos + 1; j < n; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

}  // namespace

RResult compute_R(std::span<const LatticePoint> points, std::size_t n, const ROptions& options) {
  if (n == 0) throw PreconditionError("degree cap must be at least 1");
  RResult out;
  const std::size_t S = points.size();
  if (S == 0) return out;
  if (S <= n + 1) {
    out.R = S;
    out.witness = interpolate(points, n);
    return out;
  }

  Best best;
  if (options.search == RSearch::consecutive_windows) {
    out.exhaustive = false;
    for (std::size_t i = 0; i + n < S; ++i) {
      const RationalPolynomial p = interpolate(points.subspan(i, n + 1), n);
      best.offer(on_curve_count(points, p), p);
    }
    out.R = best.count;
    out.witness = best.witness;
    return out;
  }

  if (binomial(S, n + 1) > BigInteger(static_cast<unsigned long>(options.budget))) {
    throw WorkLimitError("exhaustive R search over " + std::to_string(S) + " points exceeds the subset budget");
  }
  const std::size_t workers = std::clamp<std::size_t>(options.jobs, 1, S - n);
  std::vector<Best> partial(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    try {
      scan_bases(points, n, w, workers, partial[w]);
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (std::thread& t : threads) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (const Best& b : partial) best.merge(b);
  out.R = best.count;
  out.witness = best.witness;
  return out;
}

}  // namespace nearcurve
