#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "colreconf/limits.hpp"

namespace colreconf::cli {

enum class OutputFormat { json, table, dot };

struct Config {
    Limits limits;
    OutputFormat output_format = OutputFormat::table;
};

/// Exit codes. Mathematical outcomes (a graph is not mixing, a pattern was
/// found) are reported in the payload with exit_ok.
inline constexpr int exit_ok = 0;
inline constexpr int exit_error = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_verification_failed = 3;

/// Runs one command; args excludes the program name. Results go to out,
/// diagnostics to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace colreconf::cli
