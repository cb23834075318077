#pragma once

// Exact integer/rational arithmetic on top of GMP, fraction-free determinants
// and the handful of number-theoretic helpers the rest of the library needs.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nearcurve {

using BigInteger = mpz_class;
// mpq_class keeps every value in lowest terms with a positive denominator.
using BigRational = mpq_class;

BigRational make_rational(const BigInteger& num, const BigInteger& den);

/// Parses "p/q", "-17", "0.001" or "2.5e-3" into an exact rational.
/// Binary floating point is never involved.
BigRational parse_rational(std::string_view text);
BigInteger parse_integer(std::string_view text);

std::string to_string(const BigInteger& value);
/// "p/q", or just "p" when the denominator is 1.
std::string to_string(const BigRational& value);

BigInteger floor(const BigRational& value);
BigInteger ceil(const BigRational& value);
/// floor(value + 1/2).
BigInteger round_nearest(const BigRational& value);
BigRational abs(const BigRational& value);
BigRational pow(const BigRational& base, unsigned long exponent);
BigRational power_of_two(long exponent);

enum class Rounding { down, up };

/// Fixed-point decimal rendering of an exact rational, rounded in the given
/// direction. Deterministic, used for every report number.
std::string to_decimal(const BigRational& value, int digits, Rounding rounding);

class IntegerMatrix {
 public:
  IntegerMatrix(std::size_t rows, std::size_t cols);
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<BigInteger> entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInteger& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const BigInteger& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  void swap_rows(std::size_t a, std::size_t b);

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<BigInteger> entries_;
};

/// Exact determinant by Bareiss fraction-free elimination.
BigInteger det(const IntegerMatrix& m);

/// Rows (1, x, x^2, ..., x^{k-1}) for each node.
IntegerMatrix vandermonde_matrix(std::span<const BigInteger> nodes);

/// prod_{i<j} (x_j - x_i).
BigInteger vandermonde_det(std::span<const BigInteger> nodes);

/// Distinct prime divisors in increasing order. Trial division to 10^6, then
/// Pollard-Brent splitting of whatever is left.
std::vector<BigInteger> distinct_prime_factors(const BigInteger& q);

/// Number of distinct primes dividing q; omega(1) = 0.
std::size_t omega(const BigInteger& q);

BigInteger lcm_list(std::span<const BigInteger> values);

std::size_t bit_length(const BigInteger& value);

}  // namespace nearcurve
