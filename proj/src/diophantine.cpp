#include "nearcurve/diophantine.hpp"

#include <optional>
#include <string>

#include "nearcurve/errors.hpp"

namespace nearcurve {

namespace {

constexpr unsigned long kErrorBits = 128;

QuadraticNumber reciprocal(const QuadraticNumber& x) {
  // 1/(u + v sqrt d) = (u - v sqrt d) / (u^2 - v^2 d)
  const BigRational& u = x.rational_part();
  const BigRational& v = x.radical_coefficient();
  const BigRational norm = u * u - v * v * BigRational(x.radicand());
  return QuadraticNumber(u / norm, -v / norm, x.radicand());
}

Bracket error_bracket(const RealNumber& alpha, const BigInteger& r, const BigInteger& s) {
  const BigRational target = make_rational(r, s);
  if (auto exact = alpha.exact_form()) {
    const QuadraticNumber diff = *exact - QuadraticNumber(target);
    if (diff.is_rational()) return Bracket::exact(abs(diff.rational_part()));
    return abs(diff.enclose(kErrorBits));
  }
  return abs(alpha.enclose(kErrorBits) - Bracket::exact(target));
}

// Partial-quotient generator: exact on quadratic fields, certified on
// enclosures.
class QuotientStream {
 public:
  explicit QuotientStream(const RealNumber& alpha) {
    if (auto exact = alpha.exact_form()) {
      exact_ = *exact;
    } else {
      enclosure_ = alpha.enclose(kErrorBits);
    }
  }

  // nullopt: finished (exact) or undecided (enclosure; see undecided()).
  std::optional<BigInteger> next() {
    if (done_) return std::nullopt;
    if (exact_) {
      const BigInteger a = exact_->floor();
      const QuadraticNumber rest = *exact_ - QuadraticNumber(BigRational(a));
      if (rest.sign() == 0) {
        done_ = true;
      } else {
        exact_ = reciprocal(rest);
      }
      return a;
    }
    const BigInteger a = nearcurve::floor(enclosure_.lo);
    // certified only if the whole enclosure sits in (a, a+1)
    if (nearcurve::floor(enclosure_.hi) != a || enclosure_.lo == BigRational(a)) {
      undecided_ = true;
      done_ = true;
      return std::nullopt;
    }
    enclosure_ = Bracket::exact(BigRational(1)) / (enclosure_ - Bracket::exact(BigRational(a)));
    return a;
  }

  bool undecided() const { return undecided_; }
  bool exact() const { return exact_.has_value(); }

 private:
  std::optional<QuadraticNumber> exact_;
  Bracket enclosure_;
  bool done_ = false;
  bool undecided_ = false;
};

}  // namespace

ConvergentExpansion convergents(const RealNumber& alpha, const BigInteger& s_max) {
  if (s_max < 1) throw DomainError("s_max must be at least 1");
  ConvergentExpansion out;
  QuotientStream stream(alpha);
  BigInteger p_prev = 1, q_prev = 0, p = 0, q = 1;
  bool first = true;
  while (true) {
    std::optional<BigInteger> a = stream.next();
    if (!a) {
      if (stream.undecided()) {
        if (first) throw CertificationError("enclosure too wide to certify the first partial quotient");
        out.truncated = true;
      } else {
        out.terminated = true;
      }
      break;
    }
    BigInteger p_next = first ? *a : BigInteger(*a * p + p_prev);
    BigInteger q_next = first ? BigInteger(1) : BigInteger(*a * q + q_prev);
    if (q_next > s_max) break;
    if (!first) {
      p_prev = p;
      q_prev = q;
    }
    p = std::move(p_next);
    q = std::move(q_next);
    first = false;
    out.partial_quotients.push_back(*a);
    Approximation approx{p, q, error_bracket(alpha, p, q)};
    if (!stream.exact() && compare_distance(alpha, p, q, make_rational(1, q * q)) != Certified::less) {
      // a truncated enclosure can still produce a non-convergent last term
      out.truncated = true;
      out.partial_quotients.pop_back();
      break;
    }
    out.convergents.push_back(std::move(approx));
  }
  return out;
}

Certified compare_distance(const RealNumber& alpha, const BigInteger& r, const BigInteger& s, const BigRational& bound) {
  const BigRational target = make_rational(r, s);
  if (auto exact = alpha.exact_form()) {
    const QuadraticNumber diff = *exact - QuadraticNumber(target);
    // |diff| vs bound  <=>  diff^2 vs bound^2
    const int sign = (diff * diff - QuadraticNumber(bound * bound)).sign();
    return sign < 0 ? Certified::less : (sign == 0 ? Certified::equal : Certified::greater);
  }
  return compare(abs(alpha.enclose(kErrorBits) - Bracket::exact(target)), bound);
}

Approximation best_approx_in_range(const RealNumber& alpha, const BigInteger& s_max) {
  const ConvergentExpansion expansion = convergents(alpha, s_max);
  for (auto it = expansion.convergents.rbegin(); it != expansion.convergents.rend(); ++it) {
    const Certified c = compare_distance(alpha, it->r, it->s, make_rational(1, it->s * it->s));
    if (c == Certified::less || c == Certified::equal) return *it;
  }
  throw CertificationError("no convergent with a certified 1/s^2 error");
}

BadlyApproxReport check_badly_approximable(const RealNumber& alpha, const BigRational& c1, std::size_t n,
                                           std::int64_t s_lo, std::int64_t s_hi) {
  if (c1 <= 0) throw DomainError("c1 must be positive");
  if (s_lo < 1 && s_lo <= s_hi) throw DomainError("s must be positive");
  BadlyApproxReport out;
  const std::optional<QuadraticNumber> exact = alpha.exact_form();
  const Bracket enclosure = exact ? Bracket() : alpha.enclose(kErrorBits);
  for (std::int64_t s = s_lo; s <= s_hi; ++s) {
    const BigInteger bs(static_cast<long>(s));
    // threshold^2 = c1^2 / s^(n+3)
    const BigRational threshold_sq = c1 * c1 / pow(BigRational(bs), n + 3);
    BigInteger lo_r, hi_r;
    if (exact) {
      lo_r = (*exact * QuadraticNumber(BigRational(bs))).floor();
      hi_r = lo_r + 1;
    } else {
      const Bracket scaled = enclosure * Bracket::exact(BigRational(bs));
      lo_r = nearcurve::floor(scaled.lo);
      hi_r = nearcurve::floor(scaled.hi) + 1;
    }
    const BigInteger nearest = exact ? (*exact * QuadraticNumber(BigRational(bs)) + QuadraticNumber(BigRational(1, 2))).floor()
                                     : round_nearest((enclosure * Bracket::exact(BigRational(bs))).midpoint());
    BadlyApproxEntry entry{s, nearest, true};
    for (BigInteger r = lo_r; r <= hi_r; ++r) {
      bool ok;
      const BigRational target = make_rational(r, bs);
      if (exact) {
        const QuadraticNumber diff = *exact - QuadraticNumber(target);
        ok = (diff * diff - QuadraticNumber(threshold_sq)).sign() >= 0;
      } else {
        const Bracket d = abs(enclosure - Bracket::exact(target));
        const Bracket sq = d * d;
        if (sq.lo >= threshold_sq) {
          ok = true;
        } else if (sq.hi < threshold_sq) {
          ok = false;
        } else {
          throw CertificationError("cannot decide the approximation bound at s = " + std::to_string(s));
        }
      }
      if (!ok && entry.pass) {
        entry.pass = false;
        entry.r = r;
      }
    }
    out.pass = out.pass && entry.pass;
    out.entries.push_back(std::move(entry));
  }
  return out;
}

}  // namespace nearcurve
