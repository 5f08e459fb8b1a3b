#pragma once

#include <string>
#include <string_view>

#include "plrot/field.hpp"

namespace plrot {

/// Parses a number literal such as `3/4`, `tau^-3`, `(1+sqrt(5))/2` or
/// `1 - sqrt(2)/2` in the given field. `tau` needs Q(sqrt 5); `sqrt(n)` needs
/// n = k^2 * d for the field's d (or a perfect square). Throws ParseError.
FieldElement parse_number(std::string_view text, FieldContext ctx);

/// Canonical literal that parse_number reads back to the same element:
/// `p/q`, `tau^k` for powers of tau, otherwise `a + b*sqrt(d)`.
std::string format_number(const FieldElement& x);

}  // namespace plrot
