#pragma once

#include <cstddef>
#include <cstdint>

#include "nearcurve/bracket.hpp"
#include "nearcurve/exact.hpp"
#include "nearcurve/polynomial.hpp"

namespace nearcurve {

/// The integers lo..hi; its length is hi - lo.
struct IntegerInterval {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  std::int64_t length() const { return hi - lo; }
};

struct CongruenceCount {
  /// Number of x in the interval with P(x) in Z.
  std::uint64_t W = 0;
  IntegerInterval interval;
  RationalPolynomial polynomial;
  BigInteger q;
};

/// Counts x in the interval with q*P(x) = 0 mod q. When the interval is
/// longer than q, each residue class is tested once and weighted by its
/// frequency.
CongruenceCount count_congruence_solutions(const RationalPolynomial& p, const IntegerInterval& interval);

/// n*L/q^(1/n) + n^omega(q), without the implied constant.
Bracket qsol_bound(std::size_t n, const BigInteger& L, const BigInteger& q, const BigRational& width = default_width());

/// k*(L/q^e + 1) with e = 1/n - (n-1)/(n(k-1)); a strict upper bound on W for
/// every k >= n+1. Requires n >= 2.
Bracket qdensity_bound(std::size_t n, std::size_t k, const BigInteger& L, const BigInteger& q,
                       const BigRational& width = default_width());

}  // namespace nearcurve
