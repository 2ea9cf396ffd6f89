#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace cardlab::detail {

enum class Tok { Ident, Number, Symbol, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;  // byte offset into the source
};

/// Splits DSL text into identifiers, unsigned numbers and one-character
/// symbols. `ω` lexes as an identifier. Throws Error(Syntax) on stray bytes.
std::vector<Token> tokenize(std::string_view src);

}  // namespace cardlab::detail
