#pragma once

#include <string_view>

#include "cardlab/cardinal.hpp"
#include "cardlab/ordinal.hpp"
#include "cardlab/peano_num.hpp"
#include "cardlab/set_expr.hpp"

namespace cardlab {

class Catalog;

/// Set DSL:
///   union  := inter ('|' inter)*
///   inter  := atom (('&' | '\') atom)*
///   atom   := '(' union ')' | naturals | evens | odds | squares | cubes | reals
///           | realspos | ap(a,b) | poly(c0,...) | finite{...} | interval(lo,hi)
///           | <catalog name>
/// Throws Error(Syntax) with a byte position, or the Sort/Guard error raised
/// while building the tree.
SetExpr parse_set_expr(std::string_view src, const Catalog* catalog = nullptr);

/// `w`, `omega` or `ω`; naturals; `+` and `*` left-associative, `^` right-associative.
Ordinal parse_ord_expr(std::string_view src);

/// `aleph0`, `aleph(k)`, `continuum`, naturals, `card(<set>)`; `+ * ^`.
Cardinal parse_card_expr(std::string_view src, const Catalog* catalog = nullptr,
                         CardinalOptions options = {});

/// naturals, `inf`, `num(<set>)`; `+`.
NumValue parse_num_expr(std::string_view src, const Catalog* catalog = nullptr);

/// Words with a fixed meaning in the set DSL; catalog names may not use them.
bool is_set_keyword(std::string_view word);

}  // namespace cardlab
