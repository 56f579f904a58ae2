#include "surmise/error.hpp"

namespace surmise {

const char* to_string(InputErrorKind kind) {
  switch (kind) {
    case InputErrorKind::EmptyInput:
      return "empty input";
    case InputErrorKind::EmptyName:
      return "empty name";
    case InputErrorKind::InvalidName:
      return "invalid name";
    case InputErrorKind::DuplicateTarget:
      return "duplicate target";
    case InputErrorKind::DuplicateModel:
      return "duplicate model";
    case InputErrorKind::NonBinaryCell:
      return "non-binary cell";
    case InputErrorKind::RaggedRow:
      return "ragged row";
    case InputErrorKind::UnknownTarget:
      return "unknown target";
  }
  return "input error";
}

namespace {

std::string with_location(const std::string& message, std::optional<std::size_t> row,
                          std::optional<std::size_t> column) {
  if (!row && !column) return message;
  std::string out = message + " (";
  if (row) out += "row " + std::to_string(*row);
  if (row && column) out += ", ";
  if (column) out += "column " + std::to_string(*column);
  return out + ")";
}

}  // namespace

InputError::InputError(InputErrorKind kind, const std::string& message,
                       std::optional<std::size_t> row, std::optional<std::size_t> column)
    : std::runtime_error(with_location(message, row, column)),
      kind_(kind),
      detail_(message),
      row_(row),
      column_(column) {}

}  // namespace surmise
