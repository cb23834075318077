#include "nearcurve/strip.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>
#include <utility>

#include "nearcurve/errors.hpp"

namespace nearcurve {

StripSpec::StripSpec(RealPolynomial f, BigRational X, BigRational delta)
    : f_(std::move(f)), X_(std::move(X)), delta_(std::move(delta)) {
  if (X_ < 2) throw DomainError("strip needs X >= 2");
  if (delta_ < 0 || delta_ > BigRational(1, 4)) throw DomainError("strip needs 0 <= delta <= 1/4");
  const BigInteger lo = ceil(X_);
  const BigInteger hi = floor(2 * X_);
  if (!hi.fits_slong_p()) throw DomainError("X too large for the brute-force range");
  x_min_ = lo.get_si();
  x_max_ = hi.get_si();
}

namespace {

BigRational frac_distance(const BigRational& v) { return abs(v - BigRational(round_nearest(v))); }

// Range of ||t|| over t in the enclosure.
Bracket distance_bracket(const Bracket& value) {
  const BigRational dlo = frac_distance(value.lo);
  const BigRational dhi = frac_distance(value.hi);
  const bool has_integer = floor(value.lo) != floor(value.hi) || floor(value.lo) == value.lo;
  const BigRational half(1, 2);
  const bool has_half = floor(value.lo - half) != floor(value.hi - half) || floor(value.lo - half) == value.lo - half;
  return Bracket(has_integer ? BigRational(0) : std::min(dlo, dhi), has_half ? half : std::max(dlo, dhi));
}

unsigned long evaluation_bits(const RealPolynomial& f, std::int64_t x, unsigned long precision) {
  return precision + f.degree() * bit_length(BigInteger(x < 0 ? -x : x)) + bit_length(BigInteger(f.degree() + 1)) + 2;
}

struct Chunk {
  PointSet points;
  std::vector<Bracket> distances;
};

// Incremental evaluation of N(x) mod D by forward differences: n additions
// per abscissa instead of a Horner pass over big integers.
template <typename Word>
class ResidueStepper;

template <>
class ResidueStepper<unsigned long> {
 public:
  ResidueStepper(const std::vector<BigInteger>& coeffs, const BigInteger& modulus, std::int64_t start)
      : modulus_(modulus.get_ui()) {
    init(coeffs, modulus, start);
  }
  unsigned long value() const { return diffs_[0]; }
  void step() {
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
      unsigned long s = diffs_[k] + diffs_[k + 1];
      if (s >= modulus_) s -= modulus_;
      diffs_[k] = s;
    }
  }

 private:
  void init(const std::vector<BigInteger>& coeffs, const BigInteger& modulus, std::int64_t start) {
    const std::size_t n = coeffs.size() - 1;
    std::vector<BigInteger> table(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      BigInteger acc = 0;
      const BigInteger x = BigInteger(static_cast<long>(start)) + static_cast<unsigned long>(j);
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
      table[j] = acc;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t j = n; j >= k; --j) table[j] -= table[j - 1];
    }
    for (const BigInteger& t : table) {
      BigInteger r;
      mpz_fdiv_r(r.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
      diffs_.push_back(r.get_ui());
    }
  }

  unsigned long modulus_;
  std::vector<unsigned long> diffs_;
};

template <>
class ResidueStepper<BigInteger> {
 public:
  ResidueStepper(const std::vector<BigInteger>& coeffs, const BigInteger& modulus, std::int64_t start)
      : modulus_(modulus) {
    const std::size_t n = coeffs.size() - 1;
    diffs_.resize(n + 1);
    for (std::size_t j = 0; j <= n; ++j) {
      BigInteger acc = 0;
      const BigInteger x = BigInteger(static_cast<long>(start)) + static_cast<unsigned long>(j);
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
      diffs_[j] = acc;
    }
    for (std::size_t k = 1; k <= n; ++k) {
      for (std::size_t j = n; j >= k; --j) diffs_[j] -= diffs_[j - 1];
    }
    for (BigInteger& d : diffs_) mpz_fdiv_r(d.get_mpz_t(), d.get_mpz_t(), modulus_.get_mpz_t());
  }
  const BigInteger& value() const { return diffs_[0]; }
  void step() {
    for (std::size_t k = 0; k + 1 < diffs_.size(); ++k) {
      diffs_[k] += diffs_[k + 1];
      if (diffs_[k] >= modulus_) diffs_[k] -= modulus_;
    }
  }

 private:
  BigInteger modulus_;
  std::vector<BigInteger> diffs_;
};

unsigned long to_word(const BigInteger& v, unsigned long) { return v.get_ui(); }
const BigInteger& to_word(const BigInteger& v, const BigInteger&) { return v; }

template <typename Word>
void scan_rational(const RealPolynomial& f, const BigRational& delta, std::int64_t lo, std::int64_t hi, Chunk& out) {
  const RationalPolynomial& p = f.exact();
  const std::vector<BigInteger> coeffs = p.integer_coefficients();
  const BigInteger& D = p.denominator();
  // ||N(x)/D|| <= delta  <=>  min(r, D - r) <= floor(delta * D)
  const Word threshold = to_word(floor(delta * BigRational(D)), Word{});
  const Word modulus = to_word(D, Word{});
  ResidueStepper<Word> stepper(coeffs, D, lo);
  for (std::int64_t x = lo; x <= hi; ++x) {
    const Word& r = stepper.value();
    const Word complement = modulus - r;
    const bool low_side = r <= complement;
    if ((low_side ? r : complement) <= threshold) {
      const BigInteger residue(r);
      const BigInteger dist = low_side ? residue : BigInteger(D - residue);
      BigInteger value = 0;
      const BigInteger bx(static_cast<long>(x));
      for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) value = value * bx + *it;
      const BigInteger base = low_side ? BigInteger(value - residue) : BigInteger(value + dist);
      out.points.push_back({x, base / D});
      out.distances.push_back(Bracket::exact(make_rational(dist, D)));
    }
    if (x < hi) stepper.step();
  }
}

enum class Verdict { inside, outside, undecided };

struct Classification {
  Verdict verdict = Verdict::undecided;
  BigInteger y;
  Bracket distance;
};

Classification classify_enclosure(const Bracket& value, const BigRational& delta) {
  const BigInteger first = ceil(value.lo - delta);
  const BigInteger last = floor(value.hi + delta);
  if (first > last) return {Verdict::outside, 0, distance_bracket(value)};
  if (first == last) {
    const BigRational y(first);
    if (value.lo >= y - delta && value.hi <= y + delta) {
      return {Verdict::inside, first, abs(value - Bracket::exact(y))};
    }
  }
  return {Verdict::undecided, 0, distance_bracket(value)};
}

Classification classify_exact(const QuadraticNumber& value, const BigRational& delta) {
  const BigInteger y = (value + QuadraticNumber(BigRational(1, 2))).floor();
  const QuadraticNumber diff = value - QuadraticNumber(BigRational(y));
  // |diff| <= delta  <=>  diff - delta <= 0 and diff + delta >= 0
  const bool inside = (diff - QuadraticNumber(delta)).sign() <= 0 && (diff + QuadraticNumber(delta)).sign() >= 0;
  Bracket distance = abs(diff.enclose(64));
  if (diff.is_rational()) distance = Bracket::exact(abs(diff.rational_part()));
  return {inside ? Verdict::inside : Verdict::outside, y, distance};
}

Classification classify_interval(const RealPolynomial& f, const BigRational& delta, std::int64_t x) {
  const BigInteger bx(static_cast<long>(x));
  unsigned long precision = f.precision_bits();
  Classification c = classify_enclosure(f.enclose(bx, evaluation_bits(f, x, precision)), delta);
  if (c.verdict != Verdict::undecided) return c;
  if (auto exact = f.exact_value(bx)) return classify_exact(*exact, delta);
  while (precision * 2 <= f.max_precision_bits()) {
    precision *= 2;
    c = classify_enclosure(f.enclose(bx, evaluation_bits(f, x, precision)), delta);
    if (c.verdict != Verdict::undecided) return c;
  }
  throw CertificationError("cannot decide |y - f(x)| <= delta at x = " + std::to_string(x) + " within " +
                           std::to_string(f.max_precision_bits()) + " bits");
}

void scan_interval(const RealPolynomial& f, const BigRational& delta, std::int64_t lo, std::int64_t hi, Chunk& out) {
  for (std::int64_t x = lo; x <= hi; ++x) {
    Classification c = classify_interval(f, delta, x);
    if (c.verdict == Verdict::inside) {
      out.points.push_back({x, std::move(c.y)});
      out.distances.push_back(std::move(c.distance));
    }
  }
}

void scan(const StripSpec& spec, std::int64_t lo, std::int64_t hi, Chunk& out) {
  const RealPolynomial& f = spec.curve();
  if (f.mode() == CoefficientMode::interval) {
    scan_interval(f, spec.delta(), lo, hi, out);
    return;
  }
  const BigInteger& D = f.exact().denominator();
  if (D < BigInteger(1) << 62) {
    scan_rational<unsigned long>(f, spec.delta(), lo, hi, out);
  } else {
    scan_rational<BigInteger>(f, spec.delta(), lo, hi, out);
  }
}

}  // namespace

StripCount count_points(const StripSpec& spec, unsigned jobs) {
  const std::int64_t lo = spec.x_min();
  const std::int64_t hi = spec.x_max();
  StripCount result;
  if (lo > hi) return result;
  const std::int64_t total = hi - lo + 1;
  const std::int64_t workers = std::clamp<std::int64_t>(jobs, 1, std::max<std::int64_t>(1, total / 64));

  std::vector<Chunk> chunks(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(chunks.size());
  auto bounds = [&](std::int64_t w) {
    const std::int64_t a = lo + total * w / workers;
    const std::int64_t b = lo + total * (w + 1) / workers - 1;
    return std::pair{a, b};
  };
  auto run = [&](std::int64_t w) {
    try {
      const auto [a, b] = bounds(w);
      if (a <= b) scan(spec, a, b, chunks[static_cast<std::size_t>(w)]);
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::int64_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (std::thread& t : threads) t.join();
  }
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  for (Chunk& c : chunks) {
    std::move(c.points.begin(), c.points.end(), std::back_inserter(result.points));
    std::move(c.distances.begin(), c.distances.end(), std::back_inserter(result.distances));
  }
  result.S = result.points.size();
  return result;
}

Bracket nearest_integer_distance(const RealPolynomial& f, std::int64_t x) {
  const BigInteger bx(static_cast<long>(x));
  if (f.mode() == CoefficientMode::rational) {
    return Bracket::exact(frac_distance(eval(f.exact(), BigRational(bx))));
  }
  if (auto exact = f.exact_value(bx); exact && exact->is_rational()) {
    return Bracket::exact(frac_distance(exact->rational_part()));
  }
  return distance_bracket(f.enclose(bx, evaluation_bits(f, x, f.precision_bits())));
}

}  // namespace nearcurve
