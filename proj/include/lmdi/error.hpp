#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace lmdi {

enum class ErrorKind {
    Domain,         // non-positive value, log of a non-positive number
    Config,         // malformed or non-telescoping factor chain
    Input,          // empty input, too few records, unreadable stream
    MissingColumn,
    NonNumeric,
    DuplicateYear,
    NonPositive,    // non-positive indicator rejected during loading
    Io,
    Format,         // unsupported output format token
};

const char* to_string(ErrorKind kind);

/// Library error. Ingestion errors carry the 1-based data row (header is row 0)
/// and the column name when known.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what,
          std::optional<std::size_t> row = std::nullopt,
          std::optional<std::string> column = std::nullopt)
        : std::runtime_error(what), kind_(kind), row_(row), column_(std::move(column)) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::optional<std::size_t>& row() const noexcept { return row_; }
    const std::optional<std::string>& column() const noexcept { return column_; }

private:
    ErrorKind kind_;
    std::optional<std::size_t> row_;
    std::optional<std::string> column_;
};

}  // namespace lmdi
