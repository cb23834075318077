#include "nearcurve/congruence.hpp"

#include <vector>

#include "nearcurve/errors.hpp"

namespace nearcurve {

namespace {

// Residues x mod q (0 <= x < q, x in [lo, lo + span)) solving N(x) = 0 mod q.
template <typename Visit>
void solve_residues(const std::vector<BigInteger>& coeffs, const BigInteger& q, std::int64_t lo, std::int64_t count,
                    Visit visit) {
  if (q <= BigInteger(1) << 32) {
    const unsigned long m = q.get_ui();
    std::vector<unsigned long> c;
    for (const BigInteger& a : coeffs) {
      BigInteger r;
      mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t());
      c.push_back(r.get_ui());
    }
    for (std::int64_t i = 0; i < count; ++i) {
      const std::int64_t x = lo + i;
      const unsigned long xm = static_cast<unsigned long>(((x % static_cast<std::int64_t>(m)) + m) % m);
      unsigned long acc = 0;
      for (auto it = c.rbegin(); it != c.rend(); ++it) acc = (acc * xm + *it) % m;
      if (acc == 0) visit(x);
    }
    return;
  }
  for (std::int64_t i = 0; i < count; ++i) {
    const std::int64_t x = lo + i;
    BigInteger acc = 0;
    const BigInteger bx(static_cast<long>(x));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * bx + *it;
    if (mpz_divisible_p(acc.get_mpz_t(), q.get_mpz_t())) visit(x);
  }
}

// Number of integers in [lo, hi] congruent to r mod q, for 0 <= r < q.
std::int64_t class_frequency(std::int64_t lo, std::int64_t hi, std::int64_t r, std::int64_t q) {
  auto upto = [&](std::int64_t x) {  // count of t <= x with t = r mod q, t >= lo
    const std::int64_t first = lo + ((r - lo) % q + q) % q;
    return x < first ? 0 : (x - first) / q + 1;
  };
  return upto(hi);
}

}  // namespace

CongruenceCount count_congruence_solutions(const RationalPolynomial& p, const IntegerInterval& interval) {
  if (interval.hi < interval.lo) throw DomainError("interval must have non-negative length");
  CongruenceCount out;
  out.interval = interval;
  out.polynomial = p;
  out.q = p.denominator();
  const std::vector<BigInteger> coeffs = p.integer_coefficients();
  const std::int64_t span = interval.length() + 1;
  if (coeffs.empty() || out.q == 1) {
    out.W = static_cast<std::uint64_t>(span);
    return out;
  }
  if (BigInteger(static_cast<long>(span)) <= out.q) {
    solve_residues(coeffs, out.q, interval.lo, span, [&](std::int64_t) { ++out.W; });
    return out;
  }
  const std::int64_t q = out.q.get_si();
  solve_residues(coeffs, out.q, 0, q, [&](std::int64_t r) {
    out.W += static_cast<std::uint64_t>(class_frequency(interval.lo, interval.hi, r, q));
  });
  return out;
}

Bracket qsol_bound(std::size_t n, const BigInteger& L, const BigInteger& q, const BigRational& width) {
  if (n == 0) throw PreconditionError("degree must be at least 1");
  if (q < 1) throw DomainError("q must be positive");
  if (L < 0) throw DomainError("L must be non-negative");
  BigInteger tail;
  mpz_ui_pow_ui(tail.get_mpz_t(), n, omega(q));
  const BigRational scale(BigInteger(static_cast<unsigned long>(n)) * L);
  const Bracket root = root_bracket(BigRational(q), n, width / (1 + abs(scale)));
  return Bracket::exact(scale) / root + Bracket::exact(BigRational(tail));
}

Bracket qdensity_bound(std::size_t n, std::size_t k, const BigInteger& L, const BigInteger& q,
                       const BigRational& width) {
  if (n < 2) throw PreconditionError("density bound needs n >= 2");
  if (k <= n) throw PreconditionError("density bound needs k >= n+1");
  if (q < 1) throw DomainError("q must be positive");
  if (L < 0) throw DomainError("L must be non-negative");
  // e = (k - n) / (n (k - 1))
  const Bracket qe = pow_bracket(BigRational(q), k - n, n * (k - 1), width / (1 + BigRational(L) * k));
  const Bracket kk = Bracket::exact(BigRational(static_cast<unsigned long>(k)));
  return kk * (Bracket::exact(BigRational(L)) / qe + Bracket::exact(BigRational(1)));
}

}  // namespace nearcurve
