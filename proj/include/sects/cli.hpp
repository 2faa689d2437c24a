#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace sects::cli {

enum class OutputFormat { Json, Dot, Text };

struct RunConfig {
    int p = 0;
    int q = 0;
    std::optional<OutputFormat> output_format; // each command has its own default
    bool color_by_sect = false;
    int limit_n = 12;
    std::optional<std::string> output_path;
};

/// Runs the command line in `args` (program name excluded). Results go to
/// `out` (or to --output), errors go to `err` as a JSON object. Returns the
/// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Limit from SECTS_LIMIT_N, or the library default when unset or malformed.
int limit_from_environment();

} // namespace sects::cli
