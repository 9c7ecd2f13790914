#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace netrank {

enum class ErrorKind {
    invalid_input,   ///< malformed dataset, weight file or argument
    invalid_config,  ///< pipeline parameter out of range
    numeric,         ///< numerical failure (e.g. divergent Neumann series)
    io,              ///< file could not be read or written
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(message), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Dataset validation failure with the offending location attached.
/// Node indices are 1-based, matching the wording of the message.
class DatasetError : public Error {
public:
    struct Location {
        std::string network;
        std::string criterion;
        std::optional<std::size_t> row;
        std::optional<std::size_t> col;
    };

    DatasetError(const std::string& message, Location where)
        : Error(ErrorKind::invalid_input, message), where_(std::move(where)) {}

    const Location& where() const noexcept { return where_; }

private:
    Location where_;
};

}  // namespace netrank
