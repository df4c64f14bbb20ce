#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lndt/dialect.hpp"
#include "lndt/formula.hpp"

namespace lndt {

// Grammar:
//   F ::= 0 | 1 | pN | ~pN | NAME | or(F,F) | dec(F,L,F) | pdec(F,L,F)
//   L ::= pN | ~pN
//   NAME ::= eN | ex[pN ...; k] | thr[pN ...; k] | rthr[pN ...; k; F; F]
// With a dialect, constructs outside its syntax policy are rejected.
Formula parse_formula(std::string_view text, const std::optional<Dialect>& dialect = std::nullopt);
const ExtVar* parse_ext_name(std::string_view text);
Literal parse_literal(std::string_view text);
Var parse_var(std::string_view text);

// Splits at top-level occurrences of sep (outside (), []).
std::vector<std::string> split_top_level(std::string_view text, char sep);
std::string trim(std::string_view s);

}  // namespace lndt
