#pragma once

#include <string>
#include <string_view>

#include "surmise/core.hpp"

namespace surmise {

/// Parses a judgment table: a header row (reserved first cell, then target
/// names) followed by one row per model (name, then "0"/"1" per target).
/// LF or CRLF line endings; a leading UTF-8 BOM and trailing blank lines are
/// ignored. Errors are InputError positioned at the file line and field.
JudgmentTable parse_csv(std::string_view text);

/// Inverse of parse_csv, LF endings, "model" as the reserved header cell.
std::string write_csv(const JudgmentTable& table);

}  // namespace surmise
