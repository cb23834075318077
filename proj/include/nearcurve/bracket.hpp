#pragma once

// Closed rational intervals [lo, hi]. Used both as certified enclosures of
// irrational quantities (roots, powers) and as interval-arithmetic values.

#include <string>

#include "nearcurve/exact.hpp"

namespace nearcurve {

struct Bracket {
  BigRational lo;
  BigRational hi;

  Bracket() = default;
  Bracket(BigRational lower, BigRational upper);
  static Bracket exact(const BigRational& value) { return Bracket(value, value); }

  bool is_exact() const { return lo == hi; }
  BigRational width() const { return hi - lo; }
  BigRational midpoint() const { return (lo + hi) / 2; }
  bool contains(const BigRational& value) const { return lo <= value && value <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }

  friend bool operator==(const Bracket&, const Bracket&) = default;
};

using RationalInterval = Bracket;

Bracket operator+(const Bracket& a, const Bracket& b);
Bracket operator-(const Bracket& a, const Bracket& b);
Bracket operator-(const Bracket& a);
Bracket operator*(const Bracket& a, const Bracket& b);
/// Throws DomainError when b contains zero.
Bracket operator/(const Bracket& a, const Bracket& b);
Bracket abs(const Bracket& a);
Bracket min(const Bracket& a, const Bracket& b);
Bracket max(const Bracket& a, const Bracket& b);
Bracket hull(const Bracket& a, const Bracket& b);

enum class Certified { less, equal, greater, undecided };

/// Three-valued comparison of an enclosure against an exact value.
Certified compare(const Bracket& a, const BigRational& value);

/// Default width for brackets of irrational quantities: 2^-40.
BigRational default_width();

/// Enclosure of value^(1/k) of width at most `width`, collapsed to an exact
/// point whenever the root is rational. value >= 0, k >= 1.
Bracket root_bracket(const BigRational& value, unsigned long k, const BigRational& width);

/// Enclosure of base^(p/q) for base >= 0.
Bracket pow_bracket(const BigRational& base, unsigned long p, unsigned long q, const BigRational& width);

std::string to_string(const Bracket& b);

}  // namespace nearcurve
