#pragma once

#include <string_view>

#include "ordgen/finalg.hpp"

namespace ordgen {

/// Builds an algebra from the expression grammar
///
///   expr  := "M(" int "," int [ ";r=" int ] ")"       M_n(F_{q^r}) over F_q
///          | "TW(" kv { "," kv } ")"                   truncated local algebra
///          | "P(" expr "," expr ")"                     product
///          | "MO(" expr "," int ")"                     matrices over expr
///   kv    := ("q" | "f" | "m" | "s" | "e") "=" int      q required; others default to 1
///
/// Whitespace between tokens is ignored. Throws InvalidArgument on syntax
/// errors and propagates constructor errors.
FiniteAlgebra parse_algebra(std::string_view expr);

}  // namespace ordgen
