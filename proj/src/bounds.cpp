#include "nearcurve/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>
#include <thread>

#include "nearcurve/errors.hpp"

namespace nearcurve {

namespace {

constexpr int kRatioDigits = 12;

std::string rhs_digits(const BigRational& v, Rounding rounding) { return to_decimal(v, kRatioDigits, rounding); }

Bracket ratio_of(std::size_t S, const Bracket& rhs) {
  if (S == 0) return Bracket::exact(0);
  if (rhs.lo <= 0) throw InvariantViolation("positive count with an empty right-hand side");
  const BigRational s(static_cast<unsigned long>(S));
  return Bracket(s / rhs.hi, s / rhs.lo);
}

}  // namespace

Bracket theorem_rhs(std::size_t n, const BigRational& X, const BigRational& delta, const BigRational& width) {
  if (n == 0) throw PreconditionError("degree must be at least 1");
  if (delta < 0) throw DomainError("delta must be non-negative");
  if (delta == 0) return Bracket::exact(0);
  const Bracket power = pow_bracket(delta, 2, n * (n + 1), width / (1 + X));
  return power * Bracket::exact(X);
}

EpsilonTerm epsilon_term(std::size_t n, const BigRational& X, const BigRational& epsilon, const BigRational& width) {
  if (n == 1) return {true, epsilon, Bracket::exact(1)};
  return {false, epsilon, pow_bracket(X, epsilon.get_num().get_ui(), epsilon.get_den().get_ui(), width)};
}

Corollary1Terms corollary1_rhs(std::size_t n, const BigRational& X, const BigRational& delta, const BigInteger& s,
                               const BigRational& epsilon, const BigRational& width) {
  if (s < 1) throw DomainError("s must be at least 1");
  const Bracket root = root_bracket(BigRational(s), n, width / (1 + X));
  return {theorem_rhs(n, X, delta, width), Bracket::exact(X) / root, epsilon_term(n, X, epsilon, width)};
}

Corollary2Terms corollary2_rhs(std::size_t n, const BigRational& X, const BigRational& delta,
                               const BigRational& epsilon, const BigRational& width) {
  return {theorem_rhs(n, X, delta, width), epsilon_term(n, X, epsilon, width)};
}

DecompositionStats summarize(const Decomposition& d) {
  DecompositionStats st;
  const std::size_t n = d.degree;
  st.V = n == 1 ? 3 : n * n + n;
  for (const Group& g : d.groups) {
    switch (g.kind) {
      case GroupKind::major_arc:
        ++st.arcs;
        st.max_arc = std::max(st.max_arc, g.arc->points.size());
        if (g.arc->denominator() > st.max_Q) st.max_Q = g.arc->denominator();
        st.arcs_above_V += g.arc->points.size() > st.V;
        break;
      case GroupKind::separated:
        ++st.separated;
        break;
      case GroupKind::tail:
        ++st.tail;
        break;
    }
  }
  return st;
}

BoundReport verify_theorem(const StripSpec& spec, const VerifyOptions& options) {
  if (options.epsilon <= 0) throw DomainError("display epsilon must be positive");
  BoundReport rep;
  rep.n = spec.degree();
  rep.X = spec.X();
  rep.delta = spec.delta();
  rep.mode = spec.curve().mode();

  StripCount count = count_points(spec, options.jobs);
  rep.S = count.S;
  rep.decomposition = decompose(count.points, rep.n, rep.delta);
  rep.stats = summarize(rep.decomposition);
  ROptions r = options.r;
  r.jobs = options.jobs;
  rep.R = compute_R(count.points, rep.n, r);
  if (rep.R.R > rep.S) throw InvariantViolation("R exceeds S");
  if (rep.R.exhaustive && rep.R.R < rep.stats.max_arc) throw InvariantViolation("R below the largest major arc");

  rep.theorem_term = theorem_rhs(rep.n, rep.X, rep.delta);
  const BigRational Rq(static_cast<unsigned long>(rep.R.R));
  rep.ratio = ratio_of(rep.S, rep.theorem_term + Bracket::exact(Rq));
  rep.ratio_display = rhs_digits(rep.ratio.hi, Rounding::up);

  const BigRational one_if_linear = rep.n == 1 ? 1 : 0;
  try {
    BigInteger s_max = floor(pow(rep.X, rep.n));
    rep.chosen = best_approx_in_range(spec.curve().leading(), s_max);
    rep.corollary1 = corollary1_rhs(rep.n, rep.X, rep.delta, rep.chosen->s, options.epsilon);
    const Bracket rhs = rep.corollary1->main + rep.corollary1->approximation + Bracket::exact(one_if_linear);
    rep.corollary1_ratio = ratio_of(rep.S, rhs);
  } catch (const CertificationError& e) {
    rep.notes = std::string("corollary 1 terms unavailable: ") + e.what();
  }
  rep.corollary2 = corollary2_rhs(rep.n, rep.X, rep.delta, options.epsilon);
  const Bracket rhs2 = rep.corollary2.main + Bracket::exact(one_if_linear);
  if (rhs2.lo > 0 || rep.S == 0) rep.corollary2_ratio = ratio_of(rep.S, rhs2);
  return rep;
}

SweepReport sweep(const std::vector<StripSpec>& grid, const VerifyOptions& options) {
  if (grid.empty()) throw PreconditionError("sweep grid is empty");
  SweepReport out;
  out.cells.resize(grid.size());
  VerifyOptions cell_options = options;
  cell_options.jobs = 1;
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      try {
        out.cells[i].report = verify_theorem(grid[i], cell_options);
      } catch (const InvariantViolation&) {
        throw;
      } catch (const std::exception& e) {
        out.cells[i].error = e.what();
      }
    }
  };
  const std::size_t workers = std::clamp<std::size_t>(options.jobs, 1, grid.size());
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) {
      threads.emplace_back([&, w]() {
        try {
          worker();
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    for (std::thread& t : threads) t.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  for (const SweepCell& cell : out.cells) {
    if (!cell.report) continue;
    const BoundReport& r = *cell.report;
    auto [it, inserted] = out.max_ratio.emplace(r.n, r.ratio.hi);
    if (!inserted && r.ratio.hi > it->second) it->second = r.ratio.hi;
  }
  return out;
}

std::string sweep_csv(const std::vector<StripSpec>& grid, const SweepReport& report) {
  std::ostringstream csv;
  csv << "n,X,delta_num,delta_den,S,R,rhs_lo,rhs_hi,ratio,arcs,max_arc,max_Q\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const StripSpec& spec = grid[i];
    csv << spec.degree() << ',' << to_string(spec.X()) << ',' << to_string(BigInteger(spec.delta().get_num())) << ','
        << to_string(BigInteger(spec.delta().get_den())) << ',';
    const std::optional<BoundReport>& r = report.cells[i].report;
    if (!r) {
      csv << ",,,,,,,\n";
      continue;
    }
    csv << r->S << ',' << r->R.R << ',' << rhs_digits(r->theorem_term.lo, Rounding::down) << ','
        << rhs_digits(r->theorem_term.hi, Rounding::up) << ',' << r->ratio_display << ',' << r->stats.arcs << ','
        << r->stats.max_arc << ',' << to_string(r->stats.max_Q) << '\n';
  }
  return csv.str();
}

}  // namespace nearcurve
