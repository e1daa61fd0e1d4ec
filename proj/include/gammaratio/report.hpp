#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "gammaratio/closed_forms.hpp"
#include "gammaratio/verify.hpp"

namespace gammaratio {

enum class OutputFormat { Json, Table, Csv };

/// One output row: ordered (key, value) pairs. Keys are lowercase snake-case.
using Value = std::variant<std::string, double, std::int64_t, bool>;
using Record = std::vector<std::pair<std::string, Value>>;

Record to_record(const McReport& r);
Record to_record(const ExpectationResult& r);
Record to_record(const IdentityReport& r);

/// JSON array of objects (full double precision, 2-space indent).
std::string render_json(const std::vector<Record>& rows);
/// Aligned plain-text table; reals rounded to 7 significant digits.
std::string render_table(const std::vector<Record>& rows);
/// RFC 4180-ish CSV with a header line; reals at 17 significant digits.
std::string render_csv(const std::vector<Record>& rows);
std::string render(OutputFormat format, const std::vector<Record>& rows);

/// Full suite report as a JSON object:
///   {"pass", "failures", "index_cells", "lukacs", "dirichlet", "identities"}
/// where the three MC sections are McReport arrays.
std::string render_suite_json(const SuiteReport& report);
std::string render_suite_table(const SuiteReport& report);

}  // namespace gammaratio
