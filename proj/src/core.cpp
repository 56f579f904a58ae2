#include "surmise/core.hpp"

#include <charconv>
#include <set>
#include <stdexcept>

#include "surmise/error.hpp"

namespace surmise {

namespace {

void check_target(const JudgmentTable& table, std::size_t target) {
  if (target >= table.target_count())
    throw std::out_of_range("target index " + std::to_string(target) + " out of range (" +
                            std::to_string(table.target_count()) + " targets)");
}

void check_model(const JudgmentTable& table, std::size_t model) {
  if (model >= table.model_count())
    throw std::out_of_range("model index " + std::to_string(model) + " out of range (" +
                            std::to_string(table.model_count()) + " models)");
}

}  // namespace

void validate_name(std::string_view name, std::string_view what) {
  if (name.empty())
    throw InputError(InputErrorKind::EmptyName, std::string(what) + " name is empty");
  for (char c : name) {
    if (c == '"' || c == ',' || c == '\r' || c == '\n')
      throw InputError(InputErrorKind::InvalidName,
                       std::string(what) + " name '" + std::string(name) +
                           "' contains a forbidden character (quote, comma or line break)");
  }
}

bool JudgmentTable::tab(std::size_t model, std::size_t target) const {
  check_model(*this, model);
  check_target(*this, target);
  return rows_[model].contains(target);
}

const BitSet& JudgmentTable::column(std::size_t target) const {
  check_target(*this, target);
  return columns_[target];
}

const BitSet& JudgmentTable::row(std::size_t model) const {
  check_model(*this, model);
  return rows_[model];
}

std::size_t JudgmentTable::target_index(std::string_view name) const {
  for (const auto& t : targets_)
    if (t.name == name) return t.index;
  throw InputError(InputErrorKind::UnknownTarget, "unknown target '" + std::string(name) + "'");
}

JudgmentTable build_table(const std::vector<std::string>& target_names,
                          const std::vector<std::string>& model_names,
                          const std::vector<std::vector<int>>& bits) {
  if (target_names.empty())
    throw InputError(InputErrorKind::EmptyInput, "table has no targets");
  if (model_names.empty()) throw InputError(InputErrorKind::EmptyInput, "table has no models");

  JudgmentTable table;
  std::set<std::string_view> seen;
  for (std::size_t j = 0; j < target_names.size(); ++j) {
    const auto& name = target_names[j];
    try {
      validate_name(name, "target");
    } catch (const InputError& e) {
      throw InputError(e.kind(), e.what(), std::nullopt, j + 1);
    }
    if (!seen.insert(name).second)
      throw InputError(InputErrorKind::DuplicateTarget, "duplicate target name '" + name + "'",
                       std::nullopt, j + 1);
    table.targets_.push_back({j, name});
  }
  seen.clear();
  for (std::size_t i = 0; i < model_names.size(); ++i) {
    const auto& name = model_names[i];
    try {
      validate_name(name, "model");
    } catch (const InputError& e) {
      throw InputError(e.kind(), e.what(), i + 1, std::nullopt);
    }
    if (!seen.insert(name).second)
      throw InputError(InputErrorKind::DuplicateModel, "duplicate model name '" + name + "'",
                       i + 1, std::nullopt);
    table.models_.push_back({i, name});
  }

  if (bits.size() != model_names.size())
    throw InputError(InputErrorKind::RaggedRow,
                     "expected " + std::to_string(model_names.size()) + " rows of bits, got " +
                         std::to_string(bits.size()));

  const std::size_t u = target_names.size();
  const std::size_t v = model_names.size();
  table.rows_.assign(v, BitSet(u));
  table.columns_.assign(u, BitSet(v));
  for (std::size_t i = 0; i < v; ++i) {
    if (bits[i].size() != u)
      throw InputError(InputErrorKind::RaggedRow,
                       "expected " + std::to_string(u) + " cells, got " +
                           std::to_string(bits[i].size()),
                       i + 1, std::nullopt);
    for (std::size_t j = 0; j < u; ++j) {
      const int cell = bits[i][j];
      if (cell != 0 && cell != 1)
        throw InputError(InputErrorKind::NonBinaryCell,
                         "cell value " + std::to_string(cell) + " is not 0 or 1", i + 1, j + 1);
      if (cell == 1) {
        table.rows_[i].insert(j);
        table.columns_[j].insert(i);
      }
    }
  }
  return table;
}

std::vector<std::size_t> support(const JudgmentTable& table, std::size_t target) {
  return table.column(target).members();
}

PairCounts pair_counts(const JudgmentTable& table, std::size_t p, std::size_t q) {
  const BitSet& cp = table.column(p);
  const BitSet& cq = table.column(q);
  PairCounts c;
  c.n1 = cp.count_and(cq);
  c.n2 = cp.count_and_not(cq);
  c.n3 = cq.count_and_not(cp);
  c.n4 = table.model_count() - c.n1 - c.n2 - c.n3;
  return c;
}

Flexibility Flexibility::from_basis_points(std::int64_t bp) {
  if (bp < 0 || bp >= kLimit)
    throw ConstraintError("flexibility must satisfy 0 <= m < 50 percent, got " +
                          std::to_string(bp) + " basis points");
  return Flexibility(bp);
}

Flexibility Flexibility::parse(std::string_view percent) {
  const std::string original(percent);
  bool negative = false;
  if (!percent.empty() && (percent.front() == '-' || percent.front() == '+')) {
    negative = percent.front() == '-';
    percent.remove_prefix(1);
  }
  const auto dot = percent.find('.');
  const std::string_view whole = percent.substr(0, dot);
  const std::string_view frac = dot == std::string_view::npos ? std::string_view{} : percent.substr(dot + 1);

  auto all_digits = [](std::string_view s) {
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (whole.empty() || !all_digits(whole) || !all_digits(frac) ||
      (dot != std::string_view::npos && frac.empty()))
    throw std::invalid_argument("malformed flexibility '" + original + "'");
  if (frac.size() > 2)
    throw std::invalid_argument("flexibility '" + original +
                                "' has more than two decimal digits");

  // Anything with more than 6 integer digits is far past the limit anyway.
  if (whole.size() > 6) throw ConstraintError("flexibility '" + original + "' must be below 50");
  std::int64_t units = 0;
  std::from_chars(whole.data(), whole.data() + whole.size(), units);
  std::int64_t hundredths = 0;
  for (std::size_t k = 0; k < 2; ++k) hundredths = hundredths * 10 + (k < frac.size() ? frac[k] - '0' : 0);
  std::int64_t bp = units * 100 + hundredths;
  if (negative && bp != 0)
    throw ConstraintError("flexibility '" + original + "' must not be negative");
  if (bp >= kLimit) throw ConstraintError("flexibility '" + original + "' must be below 50");
  return Flexibility(bp);
}

std::string Flexibility::to_string() const {
  std::string frac = std::to_string(bp_ % 100);
  if (frac.size() < 2) frac.insert(0, "0");
  return std::to_string(bp_ / 100) + "." + frac;
}

}  // namespace surmise
