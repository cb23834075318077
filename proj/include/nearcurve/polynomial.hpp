#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "nearcurve/bracket.hpp"
#include "nearcurve/exact.hpp"
#include "nearcurve/real.hpp"

namespace nearcurve {

/// P(x) = sum a_i/q_i x^i with exact rational coefficients, stored
/// constant-first and trimmed of trailing zeros. The global denominator q is
/// the smallest positive integer with q*P in Z[x].
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coefficients);

  static RationalPolynomial constant(const BigRational& c);
  /// prod (x - r_i)
  static RationalPolynomial from_roots(const std::vector<BigRational>& roots);

  const std::vector<BigRational>& coefficients() const { return coeffs_; }
  /// Coefficient of x^i, zero past the degree.
  BigRational coefficient(std::size_t i) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// nullopt for the zero polynomial.
  std::optional<std::size_t> degree() const;
  const BigRational& leading() const;
  const BigInteger& denominator() const { return denominator_; }
  /// Coefficients of q*P.
  std::vector<BigInteger> integer_coefficients() const;

  RationalPolynomial derivative() const;
  RationalPolynomial monic() const;

  RationalPolynomial operator+(const RationalPolynomial& other) const;
  RationalPolynomial operator-(const RationalPolynomial& other) const;
  RationalPolynomial operator*(const RationalPolynomial& other) const;
  RationalPolynomial operator*(const BigRational& scalar) const;
  RationalPolynomial operator-() const;

  friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<BigRational> coeffs_;
  BigInteger denominator_ = 1;
};

/// Horner evaluation, exact.
BigRational eval(const RationalPolynomial& p, const BigRational& x);
/// Interval Horner evaluation.
Bracket eval(const RationalPolynomial& p, const Bracket& x);
int sign_at(const RationalPolynomial& p, const BigRational& x);

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b);

/// Yun's algorithm: p = c * prod f_i^i with square-free, pairwise coprime
/// monic f_i. Entries with f_i = 1 are omitted.
std::vector<std::pair<RationalPolynomial, unsigned>> squarefree_decomposition(const RationalPolynomial& p);

/// Lexicographic comparison of coefficient vectors padded to equal length.
bool lexicographically_less(const RationalPolynomial& a, const RationalPolynomial& b);

class SturmChain {
 public:
  /// p must be square-free and non-constant.
  explicit SturmChain(const RationalPolynomial& p);

  int variations_at(const BigRational& x) const;
  int variations_at_negative_infinity() const;
  int variations_at_positive_infinity() const;
  /// Distinct roots in (a, b].
  int count_roots(const BigRational& a, const BigRational& b) const;

  const std::vector<RationalPolynomial>& sequence() const { return chain_; }

 private:
  std::vector<RationalPolynomial> chain_;
};

struct IsolatedRoot {
  /// Exact roots have lo == hi. Otherwise the root lies in the open interval
  /// (lo, hi) and the factor changes sign across it.
  Bracket location;
  unsigned multiplicity = 1;
  /// Square-free factor having this root as a simple root.
  RationalPolynomial factor;

  bool exact() const { return location.is_exact(); }
};

/// Narrows the bracket by bisection to width <= `width`, landing on the exact
/// root if a midpoint hits it.
void refine(IsolatedRoot& root, const BigRational& width);

class RootIsolation {
 public:
  RootIsolation() = default;
  explicit RootIsolation(std::vector<IsolatedRoot> roots) : roots_(std::move(roots)) {}

  const std::vector<IsolatedRoot>& roots() const { return roots_; }
  std::vector<IsolatedRoot>& roots() { return roots_; }
  std::size_t size() const { return roots_.size(); }
  std::vector<BigRational> exact_roots() const;
  std::size_t count_with_multiplicity() const;
  /// Refine every bracket to width <= `width`.
  void refine_all(const BigRational& width);

 private:
  std::vector<IsolatedRoot> roots_;
};

/// All real roots, sorted, pairwise disjoint. Rational roots are always
/// reported exactly.
RootIsolation isolate_roots(const RationalPolynomial& p);

/// One connected component [left, right] of a sublevel set; the endpoints
/// are brackets (exact where rational).
struct SublevelComponent {
  Bracket left;
  Bracket right;

  Bracket length() const;
};

/// Components of {x in window : |t(x)| <= delta}, left to right, endpoint
/// brackets of width <= `width`.
std::vector<SublevelComponent> sublevel_components(const RationalPolynomial& t, const BigRational& delta,
                                                   const RationalInterval& window,
                                                   const BigRational& width = default_width());

std::size_t count_sublevel_components(const RationalPolynomial& t, const BigRational& delta,
                                      const RationalInterval& window);

/// Length of the longest component; zero when the set is empty.
Bracket max_sublevel_length(const RationalPolynomial& t, const BigRational& delta, const RationalInterval& window,
                            const BigRational& width = default_width());

/// True if |t(x)| <= delta for every x in the interval.
bool sublevel_covers(const RationalPolynomial& t, const BigRational& delta, const RationalInterval& interval);

/// Enclosure of 2e * (delta / |lead|)^(1/n), the interval-length bound for a
/// sublevel set of a degree-n polynomial.
Bracket sublevel_length_bound(const RationalPolynomial& t, const BigRational& delta,
                              const BigRational& width = default_width());

/// Lower bound on the distance K from x0 to the furthest point of an interval
/// on which |h| <= delta_cap, given |h(x0)| >= sigma > delta_cap. For n >= 2
///   K >= min((sigma n! / (2 (2n)^n))^(1/(n-1)) L / delta_cap^(1/(n-1)),
///            (sigma n! / 2)^(1/n) / |h^(n)|^(1/n))
/// and for n = 1, K >= (sigma - delta_cap) / max|h'|. Both hypotheses are
/// checked exactly.
Bracket rep_loc_min_distance(const RationalPolynomial& h, const RationalInterval& interval, const BigRational& x0,
                             const BigRational& sigma, const BigRational& delta_cap,
                             const BigRational& width = default_width());

enum class CoefficientMode { rational, interval };

/// The curve f. In rational mode every coefficient is an exact rational; in
/// interval mode coefficients are enclosure sources evaluated at a working
/// precision that may be doubled up to a cap.
class RealPolynomial {
 public:
  static RealPolynomial rational(std::vector<BigRational> coefficients);
  static RealPolynomial interval(std::vector<RealNumber> coefficients, unsigned long precision_bits = 64,
                                 unsigned long max_precision_bits = 4096);

  CoefficientMode mode() const { return mode_; }
  std::size_t degree() const { return coeffs_.size() - 1; }
  const std::vector<RealNumber>& coefficients() const { return coeffs_; }
  const RealNumber& leading() const { return coeffs_.back(); }
  /// Only valid in rational mode.
  const RationalPolynomial& exact() const;
  unsigned long precision_bits() const { return precision_bits_; }
  unsigned long max_precision_bits() const { return max_precision_bits_; }

  /// Enclosure of f(x) from coefficient enclosures of width <= 2^-bits.
  Bracket enclose(const BigInteger& x, unsigned long bits) const;
  Bracket enclose(const Bracket& x, unsigned long bits) const;

  /// Exact value when every coefficient is rational or quadratic over one
  /// common radicand.
  std::optional<QuadraticNumber> exact_value(const BigInteger& x) const;
  bool has_exact_values() const { return exact_radicand_.has_value(); }

 private:
  RealPolynomial() = default;

  CoefficientMode mode_ = CoefficientMode::rational;
  std::vector<RealNumber> coeffs_;
  RationalPolynomial rational_;
  std::optional<BigInteger> exact_radicand_;
  unsigned long precision_bits_ = 64;
  unsigned long max_precision_bits_ = 4096;
};

}  // namespace nearcurve
