#pragma once

// Real numbers the library can reason about with certainty: exact rationals,
// exact quadratic irrationals a + b*sqrt(d), and user-supplied fixed
// enclosures [lo, hi] of anything else.

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "nearcurve/bracket.hpp"
#include "nearcurve/exact.hpp"

namespace nearcurve {

/// a + b*sqrt(d) with rational a, b and integer d > 0. A rational value is
/// represented with b = 0; d is then irrelevant and adopts the partner's d in
/// mixed arithmetic.
class QuadraticNumber {
 public:
  QuadraticNumber() : d_(1) {}
  QuadraticNumber(BigRational a, BigRational b, BigInteger d);
  explicit QuadraticNumber(const BigRational& rational) : a_(rational), b_(0), d_(1) {}

  const BigRational& rational_part() const { return a_; }
  const BigRational& radical_coefficient() const { return b_; }
  const BigInteger& radicand() const { return d_; }

  bool is_rational() const { return b_ == 0; }
  int sign() const;
  BigInteger floor() const;
  /// Enclosure of width at most 2^-bits.
  Bracket enclose(unsigned long bits) const;

  QuadraticNumber operator+(const QuadraticNumber& other) const;
  QuadraticNumber operator-(const QuadraticNumber& other) const;
  QuadraticNumber operator*(const QuadraticNumber& other) const;
  QuadraticNumber operator-() const;

  friend bool operator==(const QuadraticNumber& x, const QuadraticNumber& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.d_ == y.d_);
  }

 private:
  BigInteger common_radicand(const QuadraticNumber& other) const;

  BigRational a_;
  BigRational b_;
  BigInteger d_;
};

/// sign(x - r) computed exactly.
int compare(const QuadraticNumber& x, const BigRational& r);

class RealNumber {
 public:
  RealNumber() : value_(BigRational(0)) {}
  RealNumber(const BigRational& rational) : value_(rational) {}  // NOLINT: implicit by design of configs
  static RealNumber quadratic(const QuadraticNumber& q);
  static RealNumber interval(const Bracket& enclosure);

  /// Accepts "p/q" or a decimal, "sqrt:d", "quad:a:b:d" (a + b*sqrt(d)) or
  /// "[lo,hi]".
  static RealNumber parse(std::string_view text);
  std::string to_string() const;

  bool is_rational() const { return std::holds_alternative<BigRational>(value_); }
  const BigRational& rational() const;

  /// Enclosure of width at most 2^-bits, except for fixed enclosures which
  /// cannot be refined and are returned unchanged.
  Bracket enclose(unsigned long bits) const;
  bool refinable() const { return !std::holds_alternative<Bracket>(value_); }

  /// Exact form when the value is rational or quadratic.
  std::optional<QuadraticNumber> exact_form() const;

  /// True when the value is provably irrational (quadratic with b != 0 and
  /// non-square d).
  bool certified_irrational() const;

  /// Certified sign: -1, 0, 1, or nullopt if a fixed enclosure straddles 0.
  std::optional<int> sign() const;

 private:
  std::variant<BigRational, QuadraticNumber, Bracket> value_;
};

}  // namespace nearcurve
