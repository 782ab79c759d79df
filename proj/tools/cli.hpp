#pragma once

#include "phicov/model.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace phicov::cli {

// Exit codes.
inline constexpr int kOk = 0;
inline constexpr int kInternal = 1;
inline constexpr int kUsage = 2;
inline constexpr int kInvalid = 3;
inline constexpr int kWitness = 4;

// args excludes the program name. Machine-readable results go to files (or
// `out` where a command has no --output); messages go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string render_svg(const Instance& inst, const CoverDocument* cover);

}  // namespace phicov::cli
