#include "surmise/csv.hpp"

#include <vector>

#include "surmise/error.hpp"

namespace surmise {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.push_back(line.substr(start));
      return fields;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
}

}  // namespace

JudgmentTable parse_csv(std::string_view text) {
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  const auto lines = split_lines(text);
  if (lines.empty()) throw InputError(InputErrorKind::EmptyInput, "input is empty");

  const auto header = split_fields(lines[0]);
  if (header.size() < 2)
    throw InputError(InputErrorKind::EmptyInput, "header has no target columns", 1);
  if (lines.size() < 2) throw InputError(InputErrorKind::EmptyInput, "no model rows");

  std::vector<std::string> targets(header.begin() + 1, header.end());
  std::vector<std::string> models;
  std::vector<std::vector<int>> bits;
  for (std::size_t l = 1; l < lines.size(); ++l) {
    const auto fields = split_fields(lines[l]);
    if (fields.size() != header.size())
      throw InputError(InputErrorKind::RaggedRow,
                       "expected " + std::to_string(header.size()) + " fields, got " +
                           std::to_string(fields.size()),
                       l + 1);
    models.emplace_back(fields[0]);
    std::vector<int> row;
    row.reserve(targets.size());
    for (std::size_t f = 1; f < fields.size(); ++f) {
      if (fields[f] == "0") {
        row.push_back(0);
      } else if (fields[f] == "1") {
        row.push_back(1);
      } else {
        throw InputError(InputErrorKind::NonBinaryCell,
                         "cell value '" + std::string(fields[f]) + "' is not 0 or 1", l + 1, f + 1);
      }
    }
    bits.push_back(std::move(row));
  }

  try {
    return build_table(targets, models, bits);
  } catch (const InputError& e) {
    // Grid positions -> file positions: targets live on line 1 from field 2,
    // model i on line i + 1, field 1.
    const std::string& message = e.detail();
    if (e.row())
      throw InputError(e.kind(), message, *e.row() + 1, e.column() ? *e.column() + 1 : 1);
    throw InputError(e.kind(), message, 1, e.column() ? std::optional(*e.column() + 1) : std::nullopt);
  }
}

std::string write_csv(const JudgmentTable& table) {
  std::string out = "model";
  for (const auto& t : table.targets()) out += "," + t.name;
  out += "\n";
  for (std::size_t i = 0; i < table.model_count(); ++i) {
    out += table.models()[i].name;
    for (std::size_t j = 0; j < table.target_count(); ++j) out += table.tab(i, j) ? ",1" : ",0";
    out += "\n";
  }
  return out;
}

}  // namespace surmise
