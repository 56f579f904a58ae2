#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace surmise {

enum class InputErrorKind {
  EmptyInput,
  EmptyName,
  InvalidName,
  DuplicateTarget,
  DuplicateModel,
  NonBinaryCell,
  RaggedRow,
  UnknownTarget,
};

const char* to_string(InputErrorKind kind);

/// Malformed user input. Positions are 1-based grid coordinates: for CSV
/// input they are the file line and field, for in-memory tables the model
/// row and target column of the bit grid.
class InputError : public std::runtime_error {
 public:
  InputError(InputErrorKind kind, const std::string& message,
             std::optional<std::size_t> row = std::nullopt,
             std::optional<std::size_t> column = std::nullopt);

  InputErrorKind kind() const noexcept { return kind_; }
  /// Message without the location suffix.
  const std::string& detail() const noexcept { return detail_; }
  std::optional<std::size_t> row() const noexcept { return row_; }
  std::optional<std::size_t> column() const noexcept { return column_; }

 private:
  InputErrorKind kind_;
  std::string detail_;
  std::optional<std::size_t> row_;
  std::optional<std::size_t> column_;
};

/// A well-formed value outside its permitted domain (flexibility >= 50%,
/// enumeration size guards, ...).
class ConstraintError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a result fails its own post-condition check. Always a bug.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace surmise
