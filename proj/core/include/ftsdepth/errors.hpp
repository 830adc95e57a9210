#pragma once

#include <stdexcept>
#include <string>

namespace fts {

/// Raised when an input violates a documented contract (bad grid, ragged
/// CSV row, parameter out of range). Distinct from std::runtime_error so
/// callers can map contract violations to a dedicated exit code.
class validation_error : public std::invalid_argument {
public:
    explicit validation_error(const std::string& what) : std::invalid_argument(what) {}
};

} // namespace fts
