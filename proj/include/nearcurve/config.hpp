#pragma once

// JSON configs and reports. Every number crossing this boundary is an exact
// string ("355/113", "0.001") or a JSON integer; JSON floats are rejected.

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "nearcurve/arcs.hpp"
#include "nearcurve/bounds.hpp"
#include "nearcurve/congruence.hpp"
#include "nearcurve/diophantine.hpp"
#include "nearcurve/fit.hpp"
#include "nearcurve/strip.hpp"

namespace nearcurve {

using Json = nlohmann::ordered_json;

Json read_json_file(const std::string& path);

BigRational json_rational(const Json& value, const char* what);

/// Canonical form of one strip cell: degree, coefficients, mode, X, delta,
/// precision, max_precision, r_mode, r_budget, epsilon_display and seed when
/// given. Missing optional keys come from `defaults`.
Json resolve_cell(const Json& cell, const Json& defaults = Json::object());

StripSpec strip_from_config(const Json& resolved);
VerifyOptions verify_options_from_config(const Json& resolved, unsigned jobs);

/// Cells of a sweep document. "grid" is either a list of cells or a
/// generator {"degrees", "X", "delta", "seeds", "height"?, "denominator"?}
/// drawing rational coefficients from a seeded mt19937_64.
std::vector<Json> expand_grid(const Json& doc);

/// Random coefficients used by the generator, constant-first.
std::vector<BigRational> random_coefficients(std::uint64_t seed, std::size_t n, std::uint64_t height,
                                             std::uint64_t denominator);

Json to_json(const Bracket& b);
Json to_json(const RationalPolynomial& p);
Json to_json(const Approximation& a);
Json to_json(const Decomposition& d);
Json to_json(const ProperSplit& split);
Json to_json(const StripCount& count);
Json point_json(const LatticePoint& p, const Bracket& distance);
Json to_json(const BoundReport& report, const Json& config);
Json to_json(const SweepReport& report, const std::vector<Json>& cells, const Json& config);

/// Reads points written by `count --jsonl` (one {"x", "y"} object per line).
PointSet read_points_jsonl(const std::string& path);
/// "x:y,x:y,..."
PointSet parse_points(const std::string& text);

}  // namespace nearcurve
