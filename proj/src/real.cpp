#include "nearcurve/real.hpp"

#include <utility>

#include "nearcurve/errors.hpp"

namespace nearcurve {

namespace {

bool is_perfect_square(const BigInteger& d) { return mpz_perfect_square_p(d.get_mpz_t()) != 0; }

int sgn(const BigRational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

}  // namespace

QuadraticNumber::QuadraticNumber(BigRational a, BigRational b, BigInteger d)
    : a_(std::move(a)), b_(std::move(b)), d_(std::move(d)) {
  if (d_ <= 0) throw DomainError("quadratic radicand must be positive");
  if (is_perfect_square(d_)) {
    BigInteger root;
    mpz_sqrt(root.get_mpz_t(), d_.get_mpz_t());
    a_ += b_ * root;
    b_ = 0;
    d_ = 1;
  }
}

int QuadraticNumber::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  const BigRational lhs = a_ * a_;
  const BigRational rhs = b_ * b_ * BigRational(d_);
  if (lhs > rhs) return sa;
  if (lhs < rhs) return sb;
  return 0;
}

BigInteger QuadraticNumber::floor() const {
  if (is_rational()) return nearcurve::floor(a_);
  BigInteger m = nearcurve::floor(enclose(8).lo);
  while (compare(*this, BigRational(m + 1)) >= 0) ++m;
  while (compare(*this, BigRational(m)) < 0) --m;
  return m;
}

Bracket QuadraticNumber::enclose(unsigned long bits) const {
  if (is_rational()) return Bracket::exact(a_);
  // sqrt(d) in [s, s+1] / 2^k with s = isqrt(d * 4^k)
  const BigRational bmag = nearcurve::abs(b_);
  const unsigned long k = bits + bit_length(ceil(bmag)) + 1;
  BigInteger scaled = d_;
  mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), 2 * k);
  BigInteger s;
  mpz_sqrt(s.get_mpz_t(), scaled.get_mpz_t());
  BigInteger scale = 1;
  mpz_mul_2exp(scale.get_mpz_t(), scale.get_mpz_t(), k);
  const Bracket root(make_rational(s, scale), make_rational(s + 1, scale));
  return Bracket::exact(a_) + Bracket::exact(b_) * root;
}

BigInteger QuadraticNumber::common_radicand(const QuadraticNumber& other) const {
  if (b_ == 0) return other.d_;
  if (other.b_ == 0 || other.d_ == d_) return d_;
  throw DomainError("quadratic arithmetic across different radicands");
}

QuadraticNumber QuadraticNumber::operator+(const QuadraticNumber& other) const {
  return QuadraticNumber(a_ + other.a_, b_ + other.b_, common_radicand(other));
}

QuadraticNumber QuadraticNumber::operator-(const QuadraticNumber& other) const {
  return QuadraticNumber(a_ - other.a_, b_ - other.b_, common_radicand(other));
}

QuadraticNumber QuadraticNumber::operator*(const QuadraticNumber& other) const {
  const BigInteger d = common_radicand(other);
  return QuadraticNumber(a_ * other.a_ + b_ * other.b_ * BigRational(d), a_ * other.b_ + b_ * other.a_, d);
}

QuadraticNumber QuadraticNumber::operator-() const { return QuadraticNumber(-a_, -b_, d_); }

int compare(const QuadraticNumber& x, const BigRational& r) {
  return (x - QuadraticNumber(r)).sign();
}

RealNumber RealNumber::quadratic(const QuadraticNumber& q) {
  RealNumber r;
  if (q.is_rational()) {
    r.value_ = q.rational_part();
  } else {
    r.value_ = q;
  }
  return r;
}

RealNumber RealNumber::interval(const Bracket& enclosure) {
  RealNumber r;
  if (enclosure.is_exact()) {
    r.value_ = enclosure.lo;
  } else {
    r.value_ = enclosure;
  }
  return r;
}

RealNumber RealNumber::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.starts_with("sqrt:")) {
    return quadratic(QuadraticNumber(0, 1, parse_integer(text.substr(5))));
  }
  if (text.starts_with("quad:")) {
    std::string_view rest = text.substr(5);
    const auto c1 = rest.find(':');
    const auto c2 = c1 == std::string_view::npos ? c1 : rest.find(':', c1 + 1);
    if (c2 == std::string_view::npos) throw InputError("expected quad:a:b:d, got '" + std::string(text) + "'");
    return quadratic(QuadraticNumber(parse_rational(rest.substr(0, c1)),
                                     parse_rational(rest.substr(c1 + 1, c2 - c1 - 1)),
                                     parse_integer(rest.substr(c2 + 1))));
  }
  if (text.starts_with("[")) {
    if (!text.ends_with("]")) throw InputError("unterminated interval '" + std::string(text) + "'");
    std::string_view body = text.substr(1, text.size() - 2);
    const auto comma = body.find(',');
    if (comma == std::string_view::npos) throw InputError("expected [lo,hi], got '" + std::string(text) + "'");
    const BigRational lo = parse_rational(body.substr(0, comma));
    const BigRational hi = parse_rational(body.substr(comma + 1));
    if (hi < lo) throw InputError("interval with lo > hi: '" + std::string(text) + "'");
    return interval(Bracket(lo, hi));
  }
  return RealNumber(parse_rational(text));
}

std::string RealNumber::to_string() const {
  if (const auto* r = std::get_if<BigRational>(&value_)) return nearcurve::to_string(*r);
  if (const auto* q = std::get_if<QuadraticNumber>(&value_)) {
    return "quad:" + nearcurve::to_string(q->rational_part()) + ":" +
           nearcurve::to_string(q->radical_coefficient()) + ":" + nearcurve::to_string(q->radicand());
  }
  const auto& b = std::get<Bracket>(value_);
  return "[" + nearcurve::to_string(b.lo) + "," + nearcurve::to_string(b.hi) + "]";
}

const BigRational& RealNumber::rational() const {
  if (const auto* r = std::get_if<BigRational>(&value_)) return *r;
  throw DomainError("real number is not an exact rational");
}

Bracket RealNumber::enclose(unsigned long bits) const {
  if (const auto* r = std::get_if<BigRational>(&value_)) return Bracket::exact(*r);
  if (const auto* q = std::get_if<QuadraticNumber>(&value_)) return q->enclose(bits);
  return std::get<Bracket>(value_);
}

std::optional<QuadraticNumber> RealNumber::exact_form() const {
  if (const auto* r = std::get_if<BigRational>(&value_)) return QuadraticNumber(*r);
  if (const auto* q = std::get_if<QuadraticNumber>(&value_)) return *q;
  return std::nullopt;
}

bool RealNumber::certified_irrational() const {
  const auto* q = std::get_if<QuadraticNumber>(&value_);
  return q != nullptr && !q->is_rational();
}

std::optional<int> RealNumber::sign() const {
  if (auto exact = exact_form()) return exact->sign();
  const auto& b = std::get<Bracket>(value_);
  if (b.lo > 0) return 1;
  if (b.hi < 0) return -1;
  return std::nullopt;
}

}  // namespace nearcurve
