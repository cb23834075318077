#include "nearcurve/bracket.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <utility>

#include "nearcurve/errors.hpp"

namespace nearcurve {

Bracket::Bracket(BigRational lower, BigRational upper) : lo(std::move(lower)), hi(std::move(upper)) {
  if (hi < lo) throw DomainError("bracket with lo > hi");
}

Bracket operator+(const Bracket& a, const Bracket& b) { return Bracket(a.lo + b.lo, a.hi + b.hi); }

Bracket operator-(const Bracket& a, const Bracket& b) { return Bracket(a.lo - b.hi, a.hi - b.lo); }

Bracket operator-(const Bracket& a) { return Bracket(-a.hi, -a.lo); }

Bracket operator*(const Bracket& a, const Bracket& b) {
  if (a.is_exact() && b.is_exact()) return Bracket::exact(a.lo * b.lo);
  std::array<BigRational, 4> p{a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  auto [mn, mx] = std::minmax_element(p.begin(), p.end());
  return Bracket(*mn, *mx);
}

Bracket operator/(const Bracket& a, const Bracket& b) {
  if (b.contains_zero()) throw DomainError("division by a bracket containing zero");
  return a * Bracket(1 / b.hi, 1 / b.lo);
}

Bracket abs(const Bracket& a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return -a;
  return Bracket(0, std::max(BigRational(-a.lo), a.hi));
}

Bracket min(const Bracket& a, const Bracket& b) {
  return Bracket(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
}

Bracket max(const Bracket& a, const Bracket& b) {
  return Bracket(std::max(a.lo, b.lo), std::max(a.hi, b.hi));
}

Bracket hull(const Bracket& a, const Bracket& b) {
  return Bracket(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

Certified compare(const Bracket& a, const BigRational& value) {
  if (a.hi < value) return Certified::less;
  if (a.lo > value) return Certified::greater;
  if (a.is_exact()) return Certified::equal;
  return Certified::undecided;
}

BigRational default_width() { return power_of_two(-40); }

Bracket root_bracket(const BigRational& value, unsigned long k, const BigRational& width) {
  if (value < 0) throw DomainError("root of a negative value");
  if (k == 0) throw DomainError("zeroth root");
  if (width <= 0) throw DomainError("bracket width must be positive");
  if (value == 0) return Bracket::exact(0);
  if (k == 1) return Bracket::exact(value);

  // value^(1/k) = (num * den^(k-1))^(1/k) / den
  const BigInteger& num = value.get_num();
  const BigInteger& den = value.get_den();
  BigInteger radicand;
  mpz_pow_ui(radicand.get_mpz_t(), den.get_mpz_t(), k - 1);
  radicand *= num;

  // scale by 2^(k*s) so the integer root resolves to 1/(den * 2^s) <= width
  const unsigned long s = bit_length(ceil(1 / (BigRational(den) * width)));
  BigInteger scaled = radicand;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), k * s);
  BigInteger root;
  const bool exact = mpz_root(root.get_mpz_t(), scaled.get_mpz_t(), k) != 0;
  BigInteger scale = den;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), s);
  if (exact) return Bracket::exact(make_rational(root, scale));
  return Bracket(make_rational(root, scale), make_rational(root + 1, scale));
}

Bracket pow_bracket(const BigRational& base, unsigned long p, unsigned long q, const BigRational& width) {
  if (q == 0) throw DomainError("exponent with zero denominator");
  const unsigned long g = std::gcd(p, q);
  if (p == 0) return Bracket::exact(1);
  return root_bracket(pow(base, p / g), q / g, width);
}

std::string to_string(const Bracket& b) {
  if (b.is_exact()) return to_string(b.lo);
  return "[" + to_string(b.lo) + ", " + to_string(b.hi) + "]";
}

}  // namespace nearcurve
