#pragma once

#include <string_view>
#include <vector>

#include "sharpchar/cyclotomic.hpp"

namespace sharpchar {

// Grammar (whitespace allowed between tokens):
//   expr   := term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' integer)?
//   atom   := integer | integer '/' posint | 'z(' posint ')' | '(' expr ')' | '-' atom
// Negative exponents invert (parse fails on inverting zero via precondition_error).
Cyclotomic parse_value(std::string_view text);

// "{expr, expr, ...}"; returns the elements in written order (duplicates kept)
std::vector<Cyclotomic> parse_value_set(std::string_view text);

} // namespace sharpchar
