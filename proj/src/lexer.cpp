#include "lexer.hpp"

#include <cctype>

#include "cardlab/error.hpp"

namespace cardlab::detail {
namespace {

constexpr std::string_view kOmega = "ω";
constexpr std::string_view kSymbols = "(){},+*^|&\\-/";

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (src.substr(i, kOmega.size()) == kOmega) {
      out.push_back({Tok::Ident, std::string(kOmega), start});
      i += kOmega.size();
    } else if (ident_start(c)) {
      while (i < src.size() && ident_char(src[i])) ++i;
      out.push_back({Tok::Ident, std::string(src.substr(start, i - start)), start});
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
      out.push_back({Tok::Number, std::string(src.substr(start, i - start)), start});
    } else if (kSymbols.find(c) != std::string_view::npos) {
      out.push_back({Tok::Symbol, std::string(1, c), start});
      ++i;
    } else {
      throw Error(ErrorKind::Syntax, "cli", "unexpected character '" + std::string(1, c) + "'",
                  std::string(src), start);
    }
  }
  out.push_back({Tok::End, "", src.size()});
  return out;
}

}  // namespace cardlab::detail
