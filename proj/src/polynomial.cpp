#include "nearcurve/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <utility>

#include "nearcurve/errors.hpp"

namespace nearcurve {

namespace {

int sgn(const BigRational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

BigRational factorial(unsigned long n) {
  BigInteger f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return BigRational(f);
}

}  // namespace

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  normalize();
}

void RationalPolynomial::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  denominator_ = 1;
  for (const BigRational& c : coeffs_) {
    mpz_lcm(denominator_.get_mpz_t(), denominator_.get_mpz_t(), c.get_den_mpz_t());
  }
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c) { return RationalPolynomial({c}); }

RationalPolynomial RationalPolynomial::from_roots(const std::vector<BigRational>& roots) {
  RationalPolynomial p = constant(1);
  for (const BigRational& r : roots) p = p * RationalPolynomial({-r, 1});
  return p;
}

BigRational RationalPolynomial::coefficient(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : BigRational(0);
}

std::optional<std::size_t> RationalPolynomial::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

const BigRational& RationalPolynomial::leading() const {
  if (coeffs_.empty()) throw DomainError("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

std::vector<BigInteger> RationalPolynomial::integer_coefficients() const {
  std::vector<BigInteger> out;
  out.reserve(coeffs_.size());
  for (const BigRational& c : coeffs_) {
    BigInteger v = denominator_ / c.get_den();
    out.push_back(v * c.get_num());
  }
  return out;
}

RationalPolynomial RationalPolynomial::derivative() const {
  std::vector<BigRational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<unsigned long>(i));
  return RationalPolynomial(std::move(d));
}

RationalPolynomial RationalPolynomial::monic() const {
  if (is_zero()) return *this;
  return *this * BigRational(1 / leading());
}

RationalPolynomial RationalPolynomial::operator+(const RationalPolynomial& other) const {
  std::vector<BigRational> sum(std::max(coeffs_.size(), other.coeffs_.size()));
  for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = coefficient(i) + other.coefficient(i);
  return RationalPolynomial(std::move(sum));
}

RationalPolynomial RationalPolynomial::operator-(const RationalPolynomial& other) const { return *this + (-other); }

RationalPolynomial RationalPolynomial::operator*(const RationalPolynomial& other) const {
  if (is_zero() || other.is_zero()) return {};
  std::vector<BigRational> prod(coeffs_.size() + other.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeffs_.size(); ++j) prod[i + j] += coeffs_[i] * other.coeffs_[j];
  }
  return RationalPolynomial(std::move(prod));
}

RationalPolynomial RationalPolynomial::operator*(const BigRational& scalar) const {
  std::vector<BigRational> out(coeffs_);
  for (BigRational& c : out) c *= scalar;
  return RationalPolynomial(std::move(out));
}

RationalPolynomial RationalPolynomial::operator-() const { return *this * BigRational(-1); }

BigRational eval(const RationalPolynomial& p, const BigRational& x) {
  BigRational acc = 0;
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Bracket eval(const RationalPolynomial& p, const Bracket& x) {
  Bracket acc = Bracket::exact(0);
  const auto& c = p.coefficients();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + Bracket::exact(*it);
  return acc;
}

int sign_at(const RationalPolynomial& p, const BigRational& x) { return sgn(eval(p, x)); }

std::pair<RationalPolynomial, RationalPolynomial> divmod(const RationalPolynomial& a, const RationalPolynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<BigRational> rem = a.coefficients();
  const std::size_t db = *b.degree();
  if (rem.size() <= db) return {RationalPolynomial(), a};
  std::vector<BigRational> quot(rem.size() - db);
  const BigRational& lead = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    const BigRational factor = rem[k] / lead;
    quot[k - db] = factor;
    if (factor == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= factor * b.coefficients()[j];
  }
  rem.resize(db);
  return {RationalPolynomial(std::move(quot)), RationalPolynomial(std::move(rem))};
}

RationalPolynomial gcd(const RationalPolynomial& a, const RationalPolynomial& b) {
  RationalPolynomial x = a;
  RationalPolynomial y = b;
  while (!y.is_zero()) {
    RationalPolynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::vector<std::pair<RationalPolynomial, unsigned>> squarefree_decomposition(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("square-free decomposition of the zero polynomial");
  std::vector<std::pair<RationalPolynomial, unsigned>> out;
  if (*p.degree() == 0) return out;
  const RationalPolynomial a = p.monic();
  const RationalPolynomial b = a.derivative();
  const RationalPolynomial c = gcd(a, b);
  RationalPolynomial w = divmod(a, c).first;
  RationalPolynomial y = divmod(b, c).first;
  RationalPolynomial z = y - w.derivative();
  unsigned i = 1;
  while (*w.degree() > 0) {
    const RationalPolynomial g = gcd(w, z);
    if (*g.degree() > 0) out.emplace_back(g, i);
    w = divmod(w, g).first;
    y = divmod(z, g).first;
    z = y - w.derivative();
    ++i;
  }
  return out;
}

bool lexicographically_less(const RationalPolynomial& a, const RationalPolynomial& b) {
  const std::size_t n = std::max(a.coefficients().size(), b.coefficients().size());
  for (std::size_t i = 0; i < n; ++i) {
    const BigRational x = a.coefficient(i);
    const BigRational y = b.coefficient(i);
    if (x != y) return x < y;
  }
  return false;
}

SturmChain::SturmChain(const RationalPolynomial& p) {
  if (p.is_zero() || *p.degree() == 0) throw DomainError("Sturm chain of a constant polynomial");
  chain_.push_back(p);
  chain_.push_back(p.derivative());
  while (true) {
    RationalPolynomial r = divmod(chain_[chain_.size() - 2], chain_.back()).second;
    if (r.is_zero()) break;
    chain_.push_back(-r);
  }
}

int SturmChain::variations_at(const BigRational& x) const {
  int changes = 0;
  int last = 0;
  for (const RationalPolynomial& q : chain_) {
    const int s = sign_at(q, x);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::variations_at_negative_infinity() const {
  int changes = 0;
  int last = 0;
  for (const RationalPolynomial& q : chain_) {
    int s = sgn(q.leading());
    if (*q.degree() % 2 == 1) s = -s;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::variations_at_positive_infinity() const {
  int changes = 0;
  int last = 0;
  for (const RationalPolynomial& q : chain_) {
    const int s = sgn(q.leading());
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

int SturmChain::count_roots(const BigRational& a, const BigRational& b) const {
  return variations_at(a) - variations_at(b);
}

void refine(IsolatedRoot& root, const BigRational& width) {
  if (root.exact()) return;
  int sign_lo = sign_at(root.factor, root.location.lo);
  while (root.location.width() > width) {
    const BigRational m = root.location.midpoint();
    const int s = sign_at(root.factor, m);
    if (s == 0) {
      root.location = Bracket::exact(m);
      return;
    }
    if (s == sign_lo) {
      root.location.lo = m;
      sign_lo = s;
    } else {
      root.location.hi = m;
    }
  }
}

std::vector<BigRational> RootIsolation::exact_roots() const {
  std::vector<BigRational> out;
  for (const IsolatedRoot& r : roots_) {
    if (r.exact()) out.push_back(r.location.lo);
  }
  return out;
}

std::size_t RootIsolation::count_with_multiplicity() const {
  std::size_t n = 0;
  for (const IsolatedRoot& r : roots_) n += r.multiplicity;
  return n;
}

void RootIsolation::refine_all(const BigRational& width) {
  for (IsolatedRoot& r : roots_) refine(r, width);
}

namespace {

BigRational cauchy_bound(const RationalPolynomial& f) {
  BigRational m = 0;
  const BigRational lead = abs(f.leading());
  for (std::size_t i = 0; i + 1 < f.coefficients().size(); ++i) {
    m = std::max(m, BigRational(abs(f.coefficients()[i]) / lead));
  }
  return m + 1;
}

// Smallest-denominator rational in the closed interval [a, b], a <= b.
BigRational simplest_between(const BigRational& a, const BigRational& b) {
  if (a <= 0 && 0 <= b) return 0;
  if (b < 0) return -simplest_between(-b, -a);
  const BigInteger fl = floor(a);
  if (fl == a) return a;
  if (BigRational(fl + 1) <= b) return BigRational(fl + 1);
  return BigRational(fl) + 1 / simplest_between(1 / (b - fl), 1 / (a - fl));
}

// Any rational root u/v of the primitive integer form of f has v dividing its
// leading coefficient c, and two distinct such rationals differ by at least
// 1/c^2. Once the bracket is narrower than that, the simplest rational inside
// it is the only possible rational root.
void try_exact(IsolatedRoot& root) {
  if (root.exact()) return;
  const std::vector<BigInteger> ints = root.factor.integer_coefficients();
  BigInteger content = 0;
  for (const BigInteger& c : ints) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_mpz_t());
  const BigInteger lead = abs(BigInteger(ints.back() / content));
  const BigRational needed = make_rational(1, lead * lead * 2);
  refine(root, needed);
  if (root.exact()) return;
  const BigRational candidate = simplest_between(root.location.lo, root.location.hi);
  if (sign_at(root.factor, candidate) == 0) root.location = Bracket::exact(candidate);
}

std::vector<IsolatedRoot> isolate_squarefree(const RationalPolynomial& f, unsigned multiplicity) {
  std::vector<IsolatedRoot> out;
  if (*f.degree() == 1) {
    const BigRational r = -f.coefficient(0) / f.coefficient(1);
    out.push_back({Bracket::exact(r), multiplicity, f});
    return out;
  }
  const SturmChain chain(f);
  const BigRational bound = cauchy_bound(f);

  // Invariant: endpoints passed to `split` are never roots of f.
  std::function<void(const BigRational&, const BigRational&, int)> split =
      [&](const BigRational& a, const BigRational& b, int count) {
        if (count <= 0) return;
        if (count == 1) {
          out.push_back({Bracket(a, b), multiplicity, f});
          return;
        }
        const BigRational m = (a + b) / 2;
        if (sign_at(f, m) != 0) {
          split(a, m, chain.count_roots(a, m));
          split(m, b, chain.count_roots(m, b));
          return;
        }
        out.push_back({Bracket::exact(m), multiplicity, f});
        BigRational eps = (b - a) / 4;
        while (sign_at(f, m - eps) == 0 || sign_at(f, m + eps) == 0 || chain.count_roots(m - eps, m + eps) != 1) {
          eps /= 2;
        }
        split(a, m - eps, chain.count_roots(a, m - eps));
        split(m + eps, b, chain.count_roots(m + eps, b));
      };
  split(-bound, bound, chain.count_roots(-bound, bound));
  for (IsolatedRoot& r : out) try_exact(r);
  return out;
}

bool disjoint_ordered(const IsolatedRoot& a, const IsolatedRoot& b) {
  if (a.location.hi < b.location.lo) return true;
  return a.location.hi == b.location.lo && !(a.exact() && b.exact());
}

}  // namespace

RootIsolation isolate_roots(const RationalPolynomial& p) {
  if (p.is_zero()) throw DomainError("root isolation of the zero polynomial");
  std::vector<IsolatedRoot> all;
  for (const auto& [factor, multiplicity] : squarefree_decomposition(p)) {
    auto part = isolate_squarefree(factor, multiplicity);
    all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  auto by_position = [](const IsolatedRoot& a, const IsolatedRoot& b) {
    return a.location.midpoint() < b.location.midpoint();
  };
  while (true) {
    std::sort(all.begin(), all.end(), by_position);
    bool clean = true;
    for (std::size_t i = 0; i + 1 < all.size(); ++i) {
      if (!disjoint_ordered(all[i], all[i + 1])) {
        clean = false;
        refine(all[i], all[i].location.width() / 2);
        refine(all[i + 1], all[i + 1].location.width() / 2);
      }
    }
    if (clean) break;
  }
  return RootIsolation(std::move(all));
}

Bracket SublevelComponent::length() const { return right - left; }

namespace {

// Elements of the window ordered left to right: window endpoints and the
// breakpoints (roots of the boundary polynomial) strictly inside, with the
// open gaps between them represented by one interior sample each.
struct Element {
  Bracket location;
  bool inside = false;
};

std::vector<Element> sublevel_elements(const RationalPolynomial& t, const BigRational& delta,
                                       const RationalInterval& window, const BigRational& width) {
  if (t.is_zero()) throw DomainError("sublevel set of the zero polynomial");
  if (*t.degree() == 0) throw PreconditionError("sublevel analysis needs degree >= 1");
  if (delta < 0) throw DomainError("negative sublevel threshold");

  auto member = [&](const BigRational& x) { return abs(eval(t, x)) <= delta; };
  const BigRational& a = window.lo;
  const BigRational& b = window.hi;

  std::vector<Element> elements;
  elements.push_back({Bracket::exact(a), member(a)});
  if (a == b) return elements;

  const RationalPolynomial boundary =
      delta == 0 ? t : (t - RationalPolynomial::constant(delta)) * (t + RationalPolynomial::constant(delta));
  RootIsolation iso = isolate_roots(boundary);

  std::vector<IsolatedRoot> interior;
  for (IsolatedRoot& r : iso.roots()) {
    while (true) {
      const Bracket& loc = r.location;
      if (r.exact()) {
        if (a < loc.lo && loc.lo < b) interior.push_back(r);
        break;
      }
      if (loc.hi <= a || loc.lo >= b) break;
      if (loc.lo >= a && loc.hi <= b) {
        interior.push_back(r);
        break;
      }
      refine(r, loc.width() / 2);
    }
  }
  for (IsolatedRoot& r : interior) refine(r, width / 2);

  // make room for a strictly interior sample in every gap
  auto left_edge = [&](std::size_t i) { return i == 0 ? a : interior[i - 1].location.hi; };
  for (std::size_t i = 0; i <= interior.size(); ++i) {
    while (true) {
      const BigRational lo = left_edge(i);
      const BigRational hi = i < interior.size() ? interior[i].location.lo : b;
      if (lo < hi) break;
      if (i > 0) refine(interior[i - 1], interior[i - 1].location.width() / 2);
      if (i < interior.size()) refine(interior[i], interior[i].location.width() / 2);
    }
  }

  for (std::size_t i = 0; i <= interior.size(); ++i) {
    const BigRational lo = left_edge(i);
    const BigRational hi = i < interior.size() ? interior[i].location.lo : b;
    const BigRational sample = (lo + hi) / 2;
    elements.push_back({Bracket(lo, hi), member(sample)});
    if (i < interior.size()) elements.push_back({interior[i].location, true});
  }
  elements.push_back({Bracket::exact(b), member(b)});
  return elements;
}

}  // namespace

std::vector<SublevelComponent> sublevel_components(const RationalPolynomial& t, const BigRational& delta,
                                                   const RationalInterval& window, const BigRational& width) {
  const std::vector<Element> elements = sublevel_elements(t, delta, window, width);
  // Odd positions are open gaps; the component endpoints are the point
  // elements at the ends of each run.
  std::vector<SublevelComponent> out;
  std::size_t i = 0;
  while (i < elements.size()) {
    if (!elements[i].inside) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < elements.size() && elements[j + 1].inside) ++j;
    out.push_back({elements[i].location, elements[j].location});
    i = j + 1;
  }
  return out;
}

std::size_t count_sublevel_components(const RationalPolynomial& t, const BigRational& delta,
                                      const RationalInterval& window) {
  return sublevel_components(t, delta, window, BigRational(1)).size();
}

Bracket max_sublevel_length(const RationalPolynomial& t, const BigRational& delta, const RationalInterval& window,
                            const BigRational& width) {
  const auto components = sublevel_components(t, delta, window, width);
  if (components.empty()) return Bracket::exact(0);
  Bracket best = components.front().length();
  for (const SublevelComponent& c : components) best = max(best, c.length());
  return best;
}

bool sublevel_covers(const RationalPolynomial& t, const BigRational& delta, const RationalInterval& interval) {
  const auto components = sublevel_components(t, delta, interval, BigRational(1));
  return components.size() == 1 && components.front().left == Bracket::exact(interval.lo) &&
         components.front().right == Bracket::exact(interval.hi);
}

Bracket sublevel_length_bound(const RationalPolynomial& t, const BigRational& delta, const BigRational& width) {
  if (t.is_zero() || *t.degree() == 0) throw PreconditionError("sublevel length bound needs degree >= 1");
  const Bracket two_e(make_rational(5436563656, 1000000000), make_rational(5436563657, 1000000000));
  const Bracket root = root_bracket(delta / abs(t.leading()), *t.degree(), width / 6);
  return two_e * root;
}

Bracket rep_loc_min_distance(const RationalPolynomial& h, const RationalInterval& interval, const BigRational& x0,
                             const BigRational& sigma, const BigRational& delta_cap, const BigRational& width) {
  if (h.is_zero() || *h.degree() == 0) throw PreconditionError("rep-loc bound needs degree >= 1");
  if (delta_cap < 0) throw PreconditionError("negative delta cap");
  if (sigma <= delta_cap) throw PreconditionError("rep-loc bound needs sigma > delta cap");
  if (abs(eval(h, x0)) < sigma) throw PreconditionError("|h(x0)| < sigma");
  if (!sublevel_covers(h, delta_cap, interval)) throw PreconditionError("|h| exceeds the delta cap on the interval");

  const unsigned long n = *h.degree();
  const BigRational lead = abs(h.leading());
  if (n == 1) return Bracket::exact((sigma - delta_cap) / lead);

  // h^(n) = n! * lead, so (sigma n!/2)^(1/n) / |h^(n)|^(1/n) = (sigma / (2 lead))^(1/n)
  const Bracket derivative_branch = root_bracket(sigma / (2 * lead), n, width);
  const BigRational length = interval.hi - interval.lo;
  if (delta_cap == 0) return derivative_branch;
  const BigRational c = sigma * factorial(n) / (2 * pow(BigRational(2 * n), n));
  const Bracket spread_branch = root_bracket(c * pow(length, n - 1) / delta_cap, n - 1, width);
  return min(spread_branch, derivative_branch);
}

RealPolynomial RealPolynomial::rational(std::vector<BigRational> coefficients) {
  if (coefficients.size() < 2) throw DomainError("curve degree must be at least 1");
  if (coefficients.back() == 0) throw DomainError("leading coefficient must be nonzero");
  RealPolynomial f;
  f.mode_ = CoefficientMode::rational;
  for (const BigRational& c : coefficients) f.coeffs_.emplace_back(c);
  f.rational_ = RationalPolynomial(std::move(coefficients));
  f.exact_radicand_ = BigInteger(1);
  return f;
}

RealPolynomial RealPolynomial::interval(std::vector<RealNumber> coefficients, unsigned long precision_bits,
                                        unsigned long max_precision_bits) {
  if (coefficients.size() < 2) throw DomainError("curve degree must be at least 1");
  if (precision_bits == 0 || max_precision_bits < precision_bits) {
    throw DomainError("precision cap must be at least the working precision");
  }
  const auto lead_sign = coefficients.back().sign();
  if (!lead_sign.has_value() || *lead_sign == 0) {
    throw DomainError("leading coefficient enclosure must exclude zero");
  }
  RealPolynomial f;
  f.mode_ = CoefficientMode::interval;
  f.coeffs_ = std::move(coefficients);
  f.precision_bits_ = precision_bits;
  f.max_precision_bits_ = max_precision_bits;
  std::optional<BigInteger> radicand = BigInteger(1);
  for (const RealNumber& c : f.coeffs_) {
    const auto form = c.exact_form();
    if (!form.has_value()) {
      radicand.reset();
      break;
    }
    if (form->is_rational()) continue;
    if (*radicand == 1) {
      radicand = form->radicand();
    } else if (*radicand != form->radicand()) {
      radicand.reset();
      break;
    }
  }
  f.exact_radicand_ = radicand;
  return f;
}

const RationalPolynomial& RealPolynomial::exact() const {
  if (mode_ != CoefficientMode::rational) throw DomainError("exact coefficients require rational mode");
  return rational_;
}

Bracket RealPolynomial::enclose(const BigInteger& x, unsigned long bits) const {
  return enclose(Bracket::exact(BigRational(x)), bits);
}

Bracket RealPolynomial::enclose(const Bracket& x, unsigned long bits) const {
  Bracket acc = Bracket::exact(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->enclose(bits);
  return acc;
}

std::optional<QuadraticNumber> RealPolynomial::exact_value(const BigInteger& x) const {
  if (!exact_radicand_.has_value()) return std::nullopt;
  if (mode_ == CoefficientMode::rational) return QuadraticNumber(eval(rational_, BigRational(x)));
  const QuadraticNumber xq{BigRational(x)};
  QuadraticNumber acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * xq + *it->exact_form();
  return acc;
}

}  // namespace nearcurve
