#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

#include "hesnil/poly.hpp"

namespace hesnil {

// z1..zn, or the doubled-variable naming u1..un, v1..vn where u_j is index
// j-1 and v_j is index n+j-1 of a 2n-ary polynomial.
enum class VarStyle { kZ, kUV };

struct ParsedPoly {
  Poly poly;
  VarStyle style = VarStyle::kZ;
};

// Grammar (whitespace-insensitive, '-' may also be U+2212):
//   expr   := [sign] term { sign term }
//   term   := power { '*' power }
//   power  := atom [ '^' integer ]
//   atom   := integer [ '/' integer ] | 'i' | var | '(' expr ')'
// Arity is the largest variable index seen (doubled for u/v), or `arity`
// when given, which must cover every variable. Throws ParseError.
ParsedPoly parse_poly_with_style(std::string_view text,
                                 std::optional<std::size_t> arity = std::nullopt);
Poly parse_poly(std::string_view text, std::optional<std::size_t> arity = std::nullopt);

// Canonical text, leading term first in descending graded-lex order.
std::string format_poly(const Poly& p, VarStyle style = VarStyle::kZ);
std::string variable_name(std::size_t index, std::size_t arity, VarStyle style);

}  // namespace hesnil
