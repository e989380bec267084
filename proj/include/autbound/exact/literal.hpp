#pragma once

#include "autbound/exact/cyclotomic.hpp"

#include <string>
#include <string_view>

namespace autbound {

/// Parses a sum of terms `c*z^k` where z = zeta_m for the given conductor.
/// Also accepts the shorthands `c`, `z^k`, `-z^k` and `z`. Throws MalformedInput.
Cyclotomic parse_literal(std::string_view text, int conductor);

/// Writes `value` (which must lie in Q(zeta_m)) in the literal syntax, one
/// `c*z^k` term per nonzero power-basis coordinate over zeta_m. Zero is `0`.
std::string format_literal(const Cyclotomic& value, int conductor);

}  // namespace autbound
