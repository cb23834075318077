#include "nearcurve/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <memory>
#include <sstream>

#include "nearcurve/config.hpp"
#include "nearcurve/errors.hpp"

namespace nearcurve {

namespace {

struct Options {
  std::string config;
  std::string out;
  std::string csv;
  std::string points;
  std::string points_file;
  std::string poly;
  std::string interval;
  std::string alpha;
  std::string smax = "1000000";
  std::string c1 = "1";
  std::string s_range = "1:100";
  std::string delta = "0";
  std::string r_mode = "exhaustive";
  std::size_t degree = 0;
  unsigned jobs = 1;
  bool jsonl = false;
  bool proper = false;
  bool badly = false;
};

void emit(const std::string& text, const std::string& path, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InputError("cannot write " + path);
  file << text;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// A report embeds its resolved config under "config"; accept either form.
Json load_cell(const std::string& path) {
  if (path.empty()) throw DomainError("--config is required");
  Json doc = read_json_file(path);
  if (doc.contains("config") && doc.at("config").is_object()) doc = doc.at("config");
  return resolve_cell(doc);
}

std::pair<std::int64_t, std::int64_t> parse_range(const std::string& text, const char* what) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw DomainError(std::string(what) + " must look like a:b");
  const BigInteger a = parse_integer(text.substr(0, colon));
  const BigInteger b = parse_integer(text.substr(colon + 1));
  if (!a.fits_slong_p() || !b.fits_slong_p()) throw DomainError(std::string(what) + " out of range");
  return {a.get_si(), b.get_si()};
}

RationalPolynomial parse_poly(const std::string& text) {
  std::vector<BigRational> coeffs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) coeffs.push_back(parse_rational(item));
  if (coeffs.empty()) throw DomainError("--poly needs coefficients");
  return RationalPolynomial(std::move(coeffs));
}

void cmd_count(const Options& o, std::ostream& out) {
  const Json cell = load_cell(o.config);
  const StripSpec spec = strip_from_config(cell);
  const StripCount count = count_points(spec, o.jobs);
  if (o.jsonl) {
    std::string text;
    for (std::size_t i = 0; i < count.points.size(); ++i) {
      text += point_json(count.points[i], count.distances[i]).dump() + "\n";
    }
    emit(text, o.out, out);
    return;
  }
  Json j;
  j["config"] = cell;
  j["x_min"] = spec.x_min();
  j["x_max"] = spec.x_max();
  Json counted = to_json(count);
  j["S"] = counted["S"];
  j["points"] = std::move(counted["points"]);
  emit(dump(j), o.out, out);
}

void cmd_decompose(const Options& o, std::ostream& out) {
  Json j;
  PointSet points;
  std::size_t n = o.degree;
  BigRational delta = parse_rational(o.delta);
  std::unique_ptr<StripSpec> spec;
  if (!o.config.empty()) {
    const Json cell = load_cell(o.config);
    spec = std::make_unique<StripSpec>(strip_from_config(cell));
    points = count_points(*spec, o.jobs).points;
    n = spec->degree();
    delta = spec->delta();
    j["config"] = cell;
  } else if (!o.points_file.empty()) {
    points = read_points_jsonl(o.points_file);
  } else if (!o.points.empty()) {
    points = parse_points(o.points);
  } else {
    throw DomainError("decompose needs --config, --points or --points-file");
  }
  if (n == 0) throw DomainError("--degree is required without --config");
  if (o.proper && !spec) throw DomainError("--proper needs --config");
  const Decomposition d = decompose(points, n, delta);
  j["S"] = points.size();
  j["decomposition"] = to_json(d);
  if (o.proper) {
    Json proper = Json::array();
    for (const Group& g : d.groups) {
      if (g.arc) proper.push_back(to_json(split_proper(*g.arc, *spec)));
    }
    j["proper"] = std::move(proper);
  }
  emit(dump(j), o.out, out);
}

void cmd_fit(const Options& o, std::ostream& out) {
  Json j;
  PointSet points;
  std::size_t n = o.degree;
  BigRational X;
  if (!o.config.empty()) {
    const Json cell = load_cell(o.config);
    const StripSpec spec = strip_from_config(cell);
    points = count_points(spec, o.jobs).points;
    n = spec.degree();
    X = spec.X();
    j["config"] = cell;
  } else if (!o.points.empty()) {
    points = parse_points(o.points);
  } else if (!o.points_file.empty()) {
    points = read_points_jsonl(o.points_file);
  } else {
    throw DomainError("fit needs --points, --points-file or --config");
  }
  if (n == 0) throw DomainError("--degree is required without --config");
  std::sort(points.begin(), points.end(), [](const LatticePoint& a, const LatticePoint& b) { return a.x < b.x; });
  ROptions r;
  r.jobs = o.jobs;
  r.search = o.r_mode == "consecutive" ? RSearch::consecutive_windows : RSearch::exhaustive;
  if (o.r_mode != "consecutive" && o.r_mode != "exhaustive") throw DomainError("--r-mode must be exhaustive or consecutive");
  j["degree"] = n;
  j["points"] = points.size();
  if (!points.empty() && points.size() <= n + 1) {
    const RationalPolynomial p = interpolate(points, n);
    j["interpolant"] = to_json(p);
    j["q"] = to_string(p.denominator());
  }
  if (!points.empty()) {
    const RResult res = compute_R(points, n, r);
    j["R"] = res.R;
    j["witness"] = to_json(res.witness);
    j["witness_q"] = to_string(res.witness.denominator());
    j["exhaustive"] = res.exhaustive;
  } else {
    j["R"] = 0;
  }
  if (!o.config.empty()) j["denominator_bound"] = to_string(denominator_bound(n, X));
  emit(dump(j), o.out, out);
}

void cmd_congruence(const Options& o, std::ostream& out) {
  if (o.poly.empty() || o.interval.empty()) throw DomainError("congruence needs --poly and --interval");
  const RationalPolynomial p = parse_poly(o.poly);
  const auto [a, b] = parse_range(o.interval, "--interval");
  const CongruenceCount c = count_congruence_solutions(p, {a, b});
  std::size_t n = o.degree;
  if (n == 0) n = std::max<std::size_t>(1, p.degree().value_or(0));
  const BigInteger L(static_cast<long>(c.interval.length()));
  Json j;
  j["poly"] = to_json(p);
  j["interval"] = {a, b};
  j["degree"] = n;
  j["W"] = c.W;
  j["L"] = c.interval.length();
  j["q"] = to_string(c.q);
  j["omega"] = omega(c.q);
  const Bracket qsol = qsol_bound(n, L, c.q);
  j["qsol_bound"] = to_json(qsol);
  const BigRational W(static_cast<unsigned long>(c.W));
  j["qsol_ratio"] = to_json(Bracket(W / qsol.hi, W / qsol.lo));
  if (n >= 2) {
    Json dens = Json::array();
    for (std::size_t k = n + 1; k <= 3 * n; ++k) {
      const Bracket bound = qdensity_bound(n, k, L, c.q);
      dens.push_back({{"k", k}, {"bound", to_json(bound)}, {"holds", W < bound.lo}});
    }
    j["qdensity"] = std::move(dens);
  }
  emit(dump(j), o.out, out);
}

void cmd_approx(const Options& o, std::ostream& out) {
  if (o.alpha.empty()) throw DomainError("approx needs --alpha");
  const RealNumber alpha = RealNumber::parse(o.alpha);
  Json j;
  j["alpha"] = alpha.to_string();
  if (o.badly) {
    if (o.degree == 0) throw DomainError("--badly needs --degree");
    const auto [lo, hi] = parse_range(o.s_range, "--s-range");
    const BigRational c1 = parse_rational(o.c1);
    const BadlyApproxReport rep = check_badly_approximable(alpha, c1, o.degree, lo, hi);
    Json failures = Json::array();
    for (const BadlyApproxEntry& e : rep.entries) {
      if (!e.pass) failures.push_back({{"s", e.s}, {"r", to_string(e.r)}});
    }
    j["c1"] = to_string(c1);
    j["degree"] = o.degree;
    j["s_range"] = {lo, hi};
    j["checked"] = rep.entries.size();
    j["verdict"] = rep.pass ? "PASS" : "FAIL";
    j["failures"] = std::move(failures);
    j["caveat"] = "finite-range check only; the bound for all s cannot be decided by computation";
  } else {
    const BigInteger s_max = parse_integer(o.smax);
    const ConvergentExpansion e = convergents(alpha, s_max);
    Json list = Json::array();
    for (const Approximation& a : e.convergents) list.push_back(to_json(a));
    j["s_max"] = to_string(s_max);
    j["convergents"] = std::move(list);
    j["truncated"] = e.truncated;
    j["terminated"] = e.terminated;
    j["best"] = to_json(best_approx_in_range(alpha, s_max));
  }
  emit(dump(j), o.out, out);
}

void cmd_verify(const Options& o, std::ostream& out) {
  const Json cell = load_cell(o.config);
  const BoundReport report = verify_theorem(strip_from_config(cell), verify_options_from_config(cell, o.jobs));
  emit(dump(to_json(report, cell)), o.out, out);
}

void cmd_sweep(const Options& o, std::ostream& out) {
  if (o.config.empty()) throw DomainError("--config is required");
  Json doc = read_json_file(o.config);
  if (doc.contains("config") && doc.at("config").is_object()) doc = doc.at("config");
  const std::vector<Json> cells = expand_grid(doc);
  std::vector<StripSpec> grid;
  for (const Json& c : cells) grid.push_back(strip_from_config(c));
  const SweepReport report = sweep(grid, verify_options_from_config(cells.front(), o.jobs));
  Json resolved;
  resolved["grid"] = cells;
  emit(dump(to_json(report, cells, resolved)), o.out, out);
  if (!o.csv.empty()) emit(sweep_csv(grid, report), o.csv, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Integer points near polynomial curves"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", o.out, "output path (default stdout)");
    sub->add_option("--jobs", o.jobs, "worker threads")->check(CLI::PositiveNumber);
  };

  auto* count = app.add_subcommand("count", "integer points in the strip");
  count->add_option("--config", o.config, "strip config")->required();
  count->add_flag("--jsonl", o.jsonl, "emit the point set as JSON lines");
  add_common(count);

  auto* decompose_cmd = app.add_subcommand("decompose", "major arcs and separated groups");
  decompose_cmd->add_option("--config", o.config, "strip config");
  decompose_cmd->add_option("--points", o.points, "points as x:y,x:y,...");
  decompose_cmd->add_option("--points-file", o.points_file, "JSON-lines point set");
  decompose_cmd->add_option("--degree", o.degree, "degree n (without --config)");
  decompose_cmd->add_option("--delta", o.delta, "strip width for the gap check (without --config)");
  decompose_cmd->add_flag("--proper", o.proper, "split arcs into proper arcs");
  add_common(decompose_cmd);

  auto* fit = app.add_subcommand("fit", "interpolation and R");
  fit->add_option("--config", o.config, "strip config");
  fit->add_option("--points", o.points, "points as x:y,x:y,...");
  fit->add_option("--points-file", o.points_file, "JSON-lines point set");
  fit->add_option("--degree", o.degree, "degree cap n");
  fit->add_option("--r-mode", o.r_mode, "exhaustive or consecutive");
  add_common(fit);

  auto* congruence = app.add_subcommand("congruence", "solutions of P(x) = 0 mod 1");
  congruence->add_option("--poly", o.poly, "coefficients, constant first")->required();
  congruence->add_option("--interval", o.interval, "a:b")->required();
  congruence->add_option("--degree", o.degree, "n used in the bounds (default: degree of P)");
  add_common(congruence);

  auto* approx = app.add_subcommand("approx", "continued-fraction approximations");
  approx->add_option("--alpha", o.alpha, "p/q, sqrt:d, quad:a:b:d or [lo,hi]")->required();
  approx->add_option("--smax", o.smax, "largest denominator");
  approx->add_flag("--badly", o.badly, "finite-range badly-approximable check");
  approx->add_option("--c1", o.c1, "constant c1");
  approx->add_option("--degree", o.degree, "degree n");
  approx->add_option("--s-range", o.s_range, "s range a:b");
  add_common(approx);

  auto* verify = app.add_subcommand("verify", "bound report for one strip");
  verify->add_option("--config", o.config, "strip config")->required();
  add_common(verify);

  auto* sweep_cmd = app.add_subcommand("sweep", "bound reports over a grid");
  sweep_cmd->add_option("--config", o.config, "grid config")->required();
  sweep_cmd->add_option("--csv", o.csv, "CSV output path");
  add_common(sweep_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (*count) cmd_count(o, out);
    if (*decompose_cmd) cmd_decompose(o, out);
    if (*fit) cmd_fit(o, out);
    if (*congruence) cmd_congruence(o, out);
    if (*approx) cmd_approx(o, out);
    if (*verify) cmd_verify(o, out);
    if (*sweep_cmd) cmd_sweep(o, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input;
  } catch (const CertificationError& e) {
    err << "certification failed: " << e.what() << "\n";
    return exit_code::certification;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << "\n";
    return exit_code::invariant;
  } catch (const Json::exception& e) {
    err << "error: malformed config: " << e.what() << "\n";
    return exit_code::input;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::input;
  }
  return 0;
}

}  // namespace nearcurve
