#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace nearcurve {

namespace exit_code {
inline constexpr int input = 1;
inline constexpr int certification = 2;
inline constexpr int invariant = 3;
}  // namespace exit_code

/// Exit codes: 0 success, 1 input error, 2 certification failure,
/// 3 invariant violation.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nearcurve
