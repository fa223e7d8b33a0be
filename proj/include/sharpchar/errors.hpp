#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace sharpchar {

// A caller broke a documented precondition or asked for an impossible
// conversion (as_rational on an irrational value, inverse of zero, ...).
class precondition_error : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

// Syntax error in a value expression, value-set literal or combination
// string.  position() is the 0-based offset of the offending character.
class parse_error : public std::runtime_error {
public:
    parse_error(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at offset " + std::to_string(position) + ")"),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Malformed character-table file: bad JSON shape, wrong field types, or
// (in strict mode) a table that fails validation.
class table_format_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace sharpchar
