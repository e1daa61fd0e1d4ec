#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gammaratio/sample.hpp"

namespace gammaratio::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitData = 3;
inline constexpr int kExitNumeric = 4;

/// Parses observations from text. Two layouts are accepted:
///  * one number per line;
///  * CSV with a header row, reading the column named `column` ("y" when
///    not given). CSV is assumed when `column` is set or the first
///    non-blank line is not a number.
/// Blank lines and lines starting with '#' are skipped. Numbers use '.' as
/// decimal separator regardless of locale. Any unparsable, non-finite or
/// non-positive entry throws DataError naming its 1-based line number.
Sample parse_sample_text(std::string_view text, const std::optional<std::string>& column = {});

/// Reads and parses a file; IoError if it cannot be opened.
Sample read_sample_file(const std::string& path, const std::optional<std::string>& column = {});

/// Full command-line entry point (args[0] is the program name). Writes the
/// report to `out`, one "E_<CODE>: message" line to `err` on failure, and
/// returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace gammaratio::cli
