#include "nearcurve/exact.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "nearcurve/errors.hpp"

namespace nearcurve {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

BigInteger pow10(unsigned long e) {
  BigInteger r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

BigRational make_rational(const BigInteger& num, const BigInteger& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  BigRational r(num, den);
  r.canonicalize();
  return r;
}

BigInteger parse_integer(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  if (!all_digits(body)) throw InputError("malformed integer: '" + std::string(text) + "'");
  BigInteger value(std::string(body), 10);
  return negative ? BigInteger(-value) : value;
}

BigRational parse_rational(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = trim(text);
  if (text.empty()) throw InputError("empty number");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    BigInteger num = parse_integer(trim(text.substr(0, slash)));
    BigInteger den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
    return make_rational(num, den);
  }

  std::string_view body = text;
  bool negative = false;
  if (body.front() == '-' || body.front() == '+') {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = body.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = body.substr(e + 1);
    BigInteger exp_value = parse_integer(exp_part);
    if (!exp_value.fits_slong_p() || abs(exp_value) > 100000) {
      throw InputError("exponent out of range in '" + std::string(text) + "'");
    }
    exponent = exp_value.get_si();
    body = body.substr(0, e);
  }
  std::string digits;
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = body.substr(0, dot);
    std::string_view frac_part = body.substr(dot + 1);
    if ((!int_part.empty() && !all_digits(int_part)) || (!frac_part.empty() && !all_digits(frac_part)) ||
        (int_part.empty() && frac_part.empty())) {
      throw InputError("malformed decimal: '" + std::string(text) + "'");
    }
    digits = std::string(int_part) + std::string(frac_part);
    exponent -= static_cast<long>(frac_part.size());
  } else {
    if (!all_digits(body)) throw InputError("malformed number: '" + std::string(text) + "'");
    digits = std::string(body);
  }
  BigInteger mantissa(digits, 10);
  if (negative) mantissa = -mantissa;
  if (exponent >= 0) return BigRational(mantissa * pow10(static_cast<unsigned long>(exponent)));
  return make_rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
}

std::string to_string(const BigInteger& value) { return value.get_str(); }

std::string to_string(const BigRational& value) { return value.get_str(); }

BigInteger floor(const BigRational& value) {
  BigInteger r;
  mpz_fdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

BigInteger ceil(const BigRational& value) {
  BigInteger r;
  mpz_cdiv_q(r.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return r;
}

BigInteger round_nearest(const BigRational& value) { return floor(value + BigRational(1, 2)); }

BigRational abs(const BigRational& value) { return value < 0 ? BigRational(-value) : value; }

BigRational pow(const BigRational& base, unsigned long exponent) {
  BigInteger num;
  BigInteger den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
  return make_rational(num, den);
}

BigRational power_of_two(long exponent) {
  BigInteger p = 1;
  if (exponent >= 0) {
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(exponent));
    return BigRational(p);
  }
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-exponent));
  return make_rational(BigInteger(1), p);
}

std::string to_decimal(const BigRational& value, int digits, Rounding rounding) {
  const BigRational scaled = value * BigRational(pow10(static_cast<unsigned long>(digits)));
  BigInteger units = rounding == Rounding::down ? floor(scaled) : ceil(scaled);
  const bool negative = units < 0;
  if (negative) units = -units;
  std::string text = units.get_str();
  if (digits > 0) {
    if (text.size() <= static_cast<std::size_t>(digits)) {
      text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    }
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  }
  return negative ? "-" + text : text;
}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntegerMatrix::IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInteger> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix entry count does not match rows*cols");
  }
}

void IntegerMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

BigInteger det(const IntegerMatrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) throw DimensionError("determinant of an empty matrix");

  IntegerMatrix a = m;
  BigInteger previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t pivot = k + 1;
      while (pivot < n && a(pivot, k) == 0) ++pivot;
      if (pivot == n) return 0;
      a.swap_rows(k, pivot);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInteger t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), t.get_mpz_t(), previous.get_mpz_t());
      }
      a(i, k) = 0;
    }
    previous = a(k, k);
  }
  return sign > 0 ? a(n - 1, n - 1) : BigInteger(-a(n - 1, n - 1));
}

IntegerMatrix vandermonde_matrix(std::span<const BigInteger> nodes) {
  const std::size_t k = nodes.size();
  IntegerMatrix m(k, k);
  for (std::size_t r = 0; r < k; ++r) {
    BigInteger power = 1;
    for (std::size_t c = 0; c < k; ++c) {
      m(r, c) = power;
      power *= nodes[r];
    }
  }
  return m;
}

BigInteger vandermonde_det(std::span<const BigInteger> nodes) {
  BigInteger product = 1;
  for (std::size_t j = 1; j < nodes.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) product *= nodes[j] - nodes[i];
  }
  return product;
}

namespace {

constexpr unsigned long kTrialDivisionLimit = 1'000'000;

BigInteger pollard_brent(const BigInteger& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    BigInteger y = 2;
    BigInteger x;
    BigInteger ys;
    BigInteger q = 1;
    BigInteger g = 1;
    const unsigned long m = 128;
    unsigned long r = 1;
    auto step = [&](BigInteger& v) {
      v = v * v + c;
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && g == 1) {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          step(y);
          q *= abs(BigInteger(x - y));
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        k += m;
      }
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        step(ys);
        BigInteger diff = abs(BigInteger(x - ys));
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_remaining(const BigInteger& n, std::vector<BigInteger>& primes) {
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    primes.push_back(n);
    return;
  }
  BigInteger d = pollard_brent(n);
  BigInteger rest = n / d;
  split_remaining(d, primes);
  split_remaining(rest, primes);
}

}  // namespace

std::vector<BigInteger> distinct_prime_factors(const BigInteger& q) {
  if (q <= 0) throw DomainError("prime factorization needs a positive integer");
  std::vector<BigInteger> primes;
  BigInteger rest = q;
  for (unsigned long p = 2; p <= kTrialDivisionLimit; p += (p == 2 ? 1 : 2)) {
    if (BigInteger(p) * p > rest) break;
    if (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0) {
      primes.emplace_back(p);
      do {
        mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      } while (mpz_divisible_ui_p(rest.get_mpz_t(), p) != 0);
    }
  }
  split_remaining(rest, primes);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  return primes;
}

std::size_t omega(const BigInteger& q) {
  if (q <= 0) throw DomainError("omega(q) needs q >= 1");
  return distinct_prime_factors(q).size();
}

BigInteger lcm_list(std::span<const BigInteger> values) {
  BigInteger result = 1;
  for (const BigInteger& v : values) {
    if (v <= 0) throw DomainError("lcm of a non-positive value");
    mpz_lcm(result.get_mpz_t(), result.get_mpz_t(), v.get_mpz_t());
  }
  return result;
}

std::size_t bit_length(const BigInteger& value) {
  if (value == 0) return 0;
  return mpz_sizeinbase(value.get_mpz_t(), 2);
}

}  // namespace nearcurve
