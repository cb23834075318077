#include "nearcurve/config.hpp"

#include <fstream>
#include <random>
#include <sstream>

#include "nearcurve/errors.hpp"

namespace nearcurve {

namespace {

constexpr int kDigits = 12;

std::string text_of(const Json& value, const char* what) {
  if (value.is_string()) return value.get<std::string>();
  if (value.is_number_integer()) return value.dump();
  throw DomainError(std::string(what) + " must be an exact string or an integer");
}

std::uint64_t json_uint(const Json& value, const char* what) {
  if (!value.is_number_unsigned() && !(value.is_number_integer() && value.get<std::int64_t>() >= 0)) {
    throw DomainError(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::uint64_t>();
}

const Json& pick(const Json& cell, const Json& defaults, const char* key) {
  if (cell.contains(key)) return cell.at(key);
  if (defaults.contains(key)) return defaults.at(key);
  static const Json null_value;
  return null_value;
}

const char* mode_name(CoefficientMode m) { return m == CoefficientMode::rational ? "rational" : "interval"; }

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

BigRational json_rational(const Json& value, const char* what) { return parse_rational(text_of(value, what)); }

Json resolve_cell(const Json& cell, const Json& defaults) {
  if (!cell.is_object()) throw DomainError("a strip config must be a JSON object");
  Json out;
  const Json& coeffs = pick(cell, defaults, "coefficients");
  if (!coeffs.is_array() || coeffs.size() < 2) throw DomainError("coefficients must be an array of length >= 2");
  const Json& degree = pick(cell, defaults, "degree");
  if (degree.is_null()) throw DomainError("degree is required");
  const std::uint64_t n = json_uint(degree, "degree");
  if (n + 1 != coeffs.size()) throw DimensionError("degree does not match the number of coefficients");

  const Json& mode_value = pick(cell, defaults, "mode");
  const std::string mode = mode_value.is_null() ? "rational" : mode_value.get<std::string>();
  if (mode != "rational" && mode != "interval") throw DomainError("mode must be rational or interval");

  out["degree"] = n;
  Json list = Json::array();
  for (const Json& c : coeffs) {
    const std::string text = text_of(c, "coefficient");
    list.push_back(mode == "rational" ? to_string(parse_rational(text)) : RealNumber::parse(text).to_string());
  }
  out["coefficients"] = std::move(list);
  out["mode"] = mode;
  for (const char* key : {"X", "delta"}) {
    const Json& v = pick(cell, defaults, key);
    if (v.is_null()) throw DomainError(std::string(key) + " is required");
    out[key] = to_string(json_rational(v, key));
  }
  const Json& precision = pick(cell, defaults, "precision");
  const Json& max_precision = pick(cell, defaults, "max_precision");
  out["precision"] = precision.is_null() ? 64 : json_uint(precision, "precision");
  out["max_precision"] = max_precision.is_null() ? 4096 : json_uint(max_precision, "max_precision");
  const Json& r_mode = pick(cell, defaults, "r_mode");
  out["r_mode"] = r_mode.is_null() ? "exhaustive" : r_mode.get<std::string>();
  if (out["r_mode"] != "exhaustive" && out["r_mode"] != "consecutive") {
    throw DomainError("r_mode must be exhaustive or consecutive");
  }
  const Json& budget = pick(cell, defaults, "r_budget");
  out["r_budget"] = budget.is_null() ? ROptions{}.budget : json_uint(budget, "r_budget");
  const Json& eps = pick(cell, defaults, "epsilon_display");
  out["epsilon_display"] = to_string(eps.is_null() ? BigRational(1, 10) : json_rational(eps, "epsilon_display"));
  const Json& seed = pick(cell, defaults, "seed");
  if (!seed.is_null()) out["seed"] = json_uint(seed, "seed");
  return out;
}

StripSpec strip_from_config(const Json& resolved) {
  const std::string mode = resolved.at("mode");
  const std::uint64_t precision = resolved.at("precision");
  const std::uint64_t max_precision = resolved.at("max_precision");
  RealPolynomial f = [&] {
    if (mode == "rational") {
      std::vector<BigRational> coeffs;
      for (const Json& c : resolved.at("coefficients")) coeffs.push_back(parse_rational(c.get<std::string>()));
      return RealPolynomial::rational(std::move(coeffs));
    }
    std::vector<RealNumber> coeffs;
    for (const Json& c : resolved.at("coefficients")) coeffs.push_back(RealNumber::parse(c.get<std::string>()));
    return RealPolynomial::interval(std::move(coeffs), precision, max_precision);
  }();
  return StripSpec(std::move(f), parse_rational(resolved.at("X").get<std::string>()),
                   parse_rational(resolved.at("delta").get<std::string>()));
}

VerifyOptions verify_options_from_config(const Json& resolved, unsigned jobs) {
  VerifyOptions o;
  o.jobs = jobs;
  o.r.search = resolved.at("r_mode") == "exhaustive" ? RSearch::exhaustive : RSearch::consecutive_windows;
  o.r.budget = resolved.at("r_budget").get<std::uint64_t>();
  o.epsilon = parse_rational(resolved.at("epsilon_display").get<std::string>());
  return o;
}

std::vector<BigRational> random_coefficients(std::uint64_t seed, std::size_t n, std::uint64_t height,
                                             std::uint64_t denominator) {
  if (height == 0 || denominator == 0) throw DomainError("generator height and denominator must be positive");
  // raw engine output only: the standard distributions are not portable
  std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + n);
  std::vector<BigRational> out;
  for (std::size_t i = 0; i <= n; ++i) {
    // uniform over the rationals in [-height, height] with denominator den
    const BigInteger den(static_cast<unsigned long>(1 + rng() % denominator));
    const BigInteger span = 2 * BigInteger(static_cast<unsigned long>(height)) * den + 1;
    BigInteger num;
    const BigInteger raw(std::to_string(rng()));
    mpz_fdiv_r(num.get_mpz_t(), raw.get_mpz_t(), span.get_mpz_t());
    num -= BigInteger(static_cast<unsigned long>(height)) * den;
    if (i == n && num == 0) num = 1;
    out.push_back(make_rational(num, den));
  }
  return out;
}

std::vector<Json> expand_grid(const Json& doc) {
  if (!doc.contains("grid")) throw DomainError("sweep config needs a grid");
  const Json& grid = doc.at("grid");
  std::vector<Json> cells;
  if (grid.is_array()) {
    for (const Json& cell : grid) cells.push_back(resolve_cell(cell, doc));
  } else if (grid.is_object()) {
    for (const char* key : {"degrees", "X", "delta", "seeds"}) {
      if (!grid.contains(key) || !grid.at(key).is_array()) {
        throw DomainError(std::string("grid generator needs an array ") + key);
      }
    }
    const std::uint64_t height = grid.contains("height") ? json_uint(grid.at("height"), "height") : 100;
    const std::uint64_t denominator =
        grid.contains("denominator") ? json_uint(grid.at("denominator"), "denominator") : 1000000;
    for (const Json& degree : grid.at("degrees")) {
      const std::uint64_t n = json_uint(degree, "degree");
      if (n == 0) throw DomainError("degree must be at least 1");
      for (const Json& X : grid.at("X")) {
        for (const Json& delta : grid.at("delta")) {
          for (const Json& seed : grid.at("seeds")) {
            const std::uint64_t s = json_uint(seed, "seed");
            Json cell;
            cell["degree"] = n;
            Json coeffs = Json::array();
            for (const BigRational& c : random_coefficients(s, n, height, denominator)) coeffs.push_back(to_string(c));
            cell["coefficients"] = std::move(coeffs);
            cell["mode"] = "rational";
            cell["X"] = X;
            cell["delta"] = delta;
            cell["seed"] = s;
            cells.push_back(resolve_cell(cell, doc));
          }
        }
      }
    }
  } else {
    throw DomainError("grid must be an array of cells or a generator object");
  }
  if (cells.empty()) throw PreconditionError("sweep grid is empty");
  return cells;
}

Json to_json(const Bracket& b) {
  Json j;
  if (b.is_exact()) {
    j["exact"] = to_string(b.lo);
  }
  j["lo"] = to_decimal(b.lo, kDigits, Rounding::down);
  j["hi"] = to_decimal(b.hi, kDigits, Rounding::up);
  return j;
}

Json to_json(const RationalPolynomial& p) {
  Json j = Json::array();
  for (const BigRational& c : p.coefficients()) j.push_back(to_string(c));
  if (j.empty()) j.push_back("0");
  return j;
}

Json to_json(const Approximation& a) {
  return {{"r", to_string(a.r)}, {"s", to_string(a.s)}, {"error", to_json(a.error)}};
}

namespace {

Json arc_json(const MajorArc& arc) {
  return {{"first", arc.first},
          {"last", arc.last},
          {"size", arc.points.size()},
          {"equation", to_json(arc.equation)},
          {"Q", to_string(arc.denominator())},
          {"L", arc.length()}};
}

}  // namespace

Json to_json(const Decomposition& d) {
  Json groups = Json::array();
  for (const Group& g : d.groups) {
    Json j{{"kind", to_string(g.kind)}, {"first", g.first}, {"last", g.last}, {"size", g.size()}};
    if (g.arc) {
      j["equation"] = to_json(g.arc->equation);
      j["Q"] = to_string(g.arc->denominator());
      j["L"] = g.arc->length();
    }
    if (g.kind == GroupKind::separated) j["lambda"] = to_string(g.lambda);
    groups.push_back(std::move(j));
  }
  return {{"degree", d.degree}, {"boundary", "shared"}, {"groups", std::move(groups)}};
}

Json to_json(const ProperSplit& split) {
  Json arcs = Json::array();
  for (const MajorArc& a : split.arcs) arcs.push_back(arc_json(a));
  Json fragments = Json::array();
  for (const auto& [first, last] : split.fragments) fragments.push_back({{"first", first}, {"last", last}});
  return {{"arcs", std::move(arcs)}, {"fragments", std::move(fragments)}};
}

Json point_json(const LatticePoint& p, const Bracket& distance) {
  return {{"x", p.x}, {"y", to_string(p.y)}, {"distance", to_json(distance)}};
}

Json to_json(const StripCount& count) {
  Json points = Json::array();
  for (std::size_t i = 0; i < count.points.size(); ++i) points.push_back(point_json(count.points[i], count.distances[i]));
  return {{"S", count.S}, {"points", std::move(points)}};
}

Json to_json(const BoundReport& r, const Json& config) {
  Json j;
  j["config"] = config;
  j["n"] = r.n;
  j["X"] = to_string(r.X);
  j["delta"] = to_string(r.delta);
  j["mode"] = mode_name(r.mode);
  j["S"] = r.S;
  j["R"] = r.R.R;
  j["R_exhaustive"] = r.R.exhaustive;
  j["witness"] = to_json(r.R.witness);
  j["theorem_rhs"] = to_json(r.theorem_term);
  j["ratio"] = r.ratio_display;
  j["ratio_bracket"] = to_json(r.ratio);
  const DecompositionStats& st = r.stats;
  j["stats"] = {{"arcs", st.arcs},       {"max_arc", st.max_arc},     {"max_Q", to_string(st.max_Q)},
                {"separated", st.separated}, {"tail", st.tail},        {"V", st.V},
                {"arcs_above_V", st.arcs_above_V}};
  j["decomposition"] = to_json(r.decomposition);
  if (r.corollary1) {
    Json c;
    c["approximation"] = to_json(*r.chosen);
    c["main"] = to_json(r.corollary1->main);
    c["X_over_s_root"] = to_json(r.corollary1->approximation);
    if (r.corollary1->third.constant_one) {
      c["third"] = "1";
    } else {
      c["third"] = {{"symbolic", "X^eps"},
                    {"display_epsilon", to_string(r.corollary1->third.epsilon)},
                    {"display", to_json(r.corollary1->third.display)},
                    {"asserted", false}};
    }
    c["ratio"] = to_json(*r.corollary1_ratio);
    j["corollary1"] = std::move(c);
  }
  Json c2;
  c2["main"] = to_json(r.corollary2.main);
  if (r.corollary2.second.constant_one) {
    c2["second"] = "1";
  } else {
    c2["second"] = {{"symbolic", "X^eps"},
                    {"display_epsilon", to_string(r.corollary2.second.epsilon)},
                    {"display", to_json(r.corollary2.second.display)},
                    {"asserted", false}};
  }
  if (r.corollary2_ratio) c2["ratio"] = to_json(*r.corollary2_ratio);
  j["corollary2"] = std::move(c2);
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json to_json(const SweepReport& report, const std::vector<Json>& cells, const Json& config) {
  Json out;
  out["config"] = config;
  Json rows = Json::array();
  for (std::size_t i = 0; i < cells.size(); ++i) {
    Json row;
    row["cell"] = cells[i];
    const SweepCell& c = report.cells[i];
    if (c.report) {
      const BoundReport& r = *c.report;
      row["S"] = r.S;
      row["R"] = r.R.R;
      row["rhs_lo"] = to_decimal(r.theorem_term.lo, kDigits, Rounding::down);
      row["rhs_hi"] = to_decimal(r.theorem_term.hi, kDigits, Rounding::up);
      row["ratio"] = r.ratio_display;
      row["arcs"] = r.stats.arcs;
      row["max_arc"] = r.stats.max_arc;
      row["max_Q"] = to_string(r.stats.max_Q);
      row["separated"] = r.stats.separated;
      row["witness"] = to_json(r.R.witness);
    } else {
      row["error"] = c.error;
    }
    rows.push_back(std::move(row));
  }
  out["cells"] = std::move(rows);
  Json max_ratio = Json::object();
  for (const auto& [n, ratio] : report.max_ratio) max_ratio[std::to_string(n)] = to_decimal(ratio, kDigits, Rounding::up);
  out["max_ratio"] = std::move(max_ratio);
  return out;
}

PointSet read_points_jsonl(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  PointSet out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    Json j;
    try {
      j = Json::parse(line);
    } catch (const Json::parse_error& e) {
      throw InputError(path + ": " + e.what());
    }
    const Json& x = j.at("x");
    if (!x.is_number_integer()) throw DomainError("point x must be an integer");
    out.push_back({x.get<std::int64_t>(), parse_integer(text_of(j.at("y"), "y"))});
  }
  return out;
}

PointSet parse_points(const std::string& text) {
  PointSet out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) throw DomainError("points must look like x:y,x:y");
    const BigInteger x = parse_integer(item.substr(0, colon));
    if (!x.fits_slong_p()) throw DomainError("point x out of range");
    out.push_back({x.get_si(), parse_integer(item.substr(colon + 1))});
  }
  if (out.empty()) throw DomainError("no points given");
  return out;
}

}  // namespace nearcurve
