#include "cardlab/parser.hpp"

#include <array>
#include <functional>

#include "cardlab/catalog.hpp"
#include "cardlab/error.hpp"
#include "cardlab/sets.hpp"
#include "lexer.hpp"

namespace cardlab {
namespace {

using detail::Tok;
using detail::Token;

constexpr std::array<std::string_view, 12> kSetKeywords = {
    "naturals", "evens", "odds",     "squares",  "cubes", "ap",
    "poly",     "finite", "reals", "realspos", "interval", "card"};

// Largest exponent or element literal accepted (keeps Element arithmetic safe).
const Natural kMaxLiteral = Natural(1) << 62;

// Runs a constructor, tagging any error it raises with a source position.
template <typename F>
auto build(std::size_t pos, F make) -> decltype(make()) {
  try {
    return make();
  } catch (const Error& e) {
    throw e.with_position(pos);
  }
}

class Parser {
 public:
  Parser(std::string_view src, const Catalog* catalog)
      : src_(src), tokens_(detail::tokenize(src)), catalog_(catalog) {}

  template <typename F>
  auto whole(F parse_fn) {
    auto value = parse_fn();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return value;
  }

  // ---- sets ----
  SetExpr set_union() {
    SetExpr lhs = set_inter();
    while (is_symbol("|")) {
      const std::size_t at = advance().pos;
      SetExpr rhs = set_inter();
      lhs = build(at, [&] { return SetExpr::unite(lhs, rhs); });
    }
    return lhs;
  }

  SetExpr set_inter() {
    SetExpr lhs = set_atom();
    while (is_symbol("&") || is_symbol("\\")) {
      const Token op = advance();
      SetExpr rhs = set_atom();
      lhs = build(op.pos, [&] {
        return op.text == "&" ? SetExpr::intersect(lhs, rhs) : SetExpr::subtract(lhs, rhs);
      });
    }
    return lhs;
  }

  SetExpr set_atom() {
    if (is_symbol("(")) {
      advance();
      SetExpr inner = set_union();
      expect(")");
      return inner;
    }
    const Token t = peek();
    if (t.kind != Tok::Ident) fail("expected a set expression");
    advance();
    const std::string& w = t.text;
    if (w == "naturals") return SetExpr::naturals();
    if (w == "evens") return SetExpr::evens();
    if (w == "odds") return SetExpr::odds();
    if (w == "squares") return SetExpr::squares();
    if (w == "cubes") return SetExpr::cubes();
    if (w == "reals") return SetExpr::reals();
    if (w == "realspos") return SetExpr::reals_pos();
    if (w == "ap") {
      expect("(");
      const Element a = integer();
      expect(",");
      const Element b = integer();
      expect(")");
      return build(t.pos, [&] { return SetExpr::progression(a, b); });
    }
    if (w == "poly") {
      expect("(");
      std::vector<Element> coefficients{integer()};
      while (is_symbol(",")) {
        advance();
        coefficients.push_back(integer());
      }
      expect(")");
      return build(t.pos, [&] { return SetExpr::poly(coefficients); });
    }
    if (w == "finite") {
      expect("{");
      std::vector<Element> elements;
      if (!is_symbol("}")) {
        elements.push_back(integer());
        while (is_symbol(",")) {
          advance();
          elements.push_back(integer());
        }
      }
      expect("}");
      return build(t.pos, [&] { return SetExpr::finite(elements); });
    }
    if (w == "interval") {
      expect("(");
      Rational lo = rational();
      expect(",");
      Rational hi = rational();
      expect(")");
      return build(t.pos, [&] { return SetExpr::interval(lo, hi); });
    }
    if (catalog_) {
      if (auto named = catalog_->find(w)) return *named;
    }
    fail("unknown set name '" + w + "'", t.pos);
  }

  // ---- ordinals ----
  Ordinal ord_sum() {
    Ordinal acc = ord_product();
    while (is_symbol("+")) {
      advance();
      acc = ord_add(acc, ord_product());
    }
    return acc;
  }

  Ordinal ord_product() {
    Ordinal acc = ord_power();
    while (is_symbol("*")) {
      advance();
      acc = ord_mul(acc, ord_power());
    }
    return acc;
  }

  Ordinal ord_power() {
    Ordinal base = ord_atom();
    if (!is_symbol("^")) return base;
    const std::size_t at = advance().pos;
    Ordinal exponent = ord_power();
    return build(at, [&] { return ord_pow(base, exponent); });
  }

  Ordinal ord_atom() {
    if (is_symbol("(")) {
      advance();
      Ordinal inner = ord_sum();
      expect(")");
      return inner;
    }
    const Token t = peek();
    if (t.kind == Tok::Number) return Ordinal::finite(natural());
    if (t.kind == Tok::Ident && (t.text == "w" || t.text == "omega" || t.text == "ω")) {
      advance();
      return Ordinal::omega();
    }
    fail("expected an ordinal");
  }

  // ---- cardinals ----
  Cardinal card_sum(CardinalOptions opt) {
    Cardinal acc = card_product(opt);
    while (is_symbol("+")) {
      const std::size_t at = advance().pos;
      Cardinal rhs = card_product(opt);
      acc = build(at, [&] { return card_add(acc, rhs, opt); });
    }
    return acc;
  }

  Cardinal card_product(CardinalOptions opt) {
    Cardinal acc = card_power(opt);
    while (is_symbol("*")) {
      const std::size_t at = advance().pos;
      Cardinal rhs = card_power(opt);
      acc = build(at, [&] { return card_mul(acc, rhs, opt); });
    }
    return acc;
  }

  Cardinal card_power(CardinalOptions opt) {
    Cardinal base = card_atom(opt);
    if (!is_symbol("^")) return base;
    const std::size_t at = advance().pos;
    Cardinal exponent = card_power(opt);
    return build(at, [&] { return card_pow(base, exponent, opt); });
  }

  Cardinal card_atom(CardinalOptions opt) {
    if (is_symbol("(")) {
      advance();
      Cardinal inner = card_sum(opt);
      expect(")");
      return inner;
    }
    const Token t = peek();
    if (t.kind == Tok::Number) return Cardinal::finite(natural());
    if (t.kind != Tok::Ident) fail("expected a cardinal");
    advance();
    if (t.text == "aleph0") return Cardinal::aleph(0);
    if (t.text == "continuum") return Cardinal::continuum();
    if (t.text == "aleph") {
      expect("(");
      const Natural k = natural();
      if (k > 1'000'000) fail("aleph index too large", t.pos);
      expect(")");
      return Cardinal::aleph(static_cast<std::uint32_t>(k));
    }
    if (t.text == "card") {
      expect("(");
      SetExpr s = set_union();
      expect(")");
      return build(t.pos, [&] { return cardinal_of(classify_size(s)); });
    }
    fail("unknown cardinal '" + t.text + "'", t.pos);
  }

  // ---- num ----
  NumValue num_sum() {
    NumValue acc = num_atom();
    while (is_symbol("+")) {
      advance();
      acc = num_add(acc, num_atom());
    }
    return acc;
  }

  NumValue num_atom() {
    if (is_symbol("(")) {
      advance();
      NumValue inner = num_sum();
      expect(")");
      return inner;
    }
    const Token t = peek();
    if (t.kind == Tok::Number) return NumValue::fin(natural());
    if (t.kind == Tok::Ident && (t.text == "inf" || t.text == "∞")) {
      advance();
      return NumValue::inf();
    }
    if (t.kind == Tok::Ident && t.text == "num") {
      advance();
      expect("(");
      SetExpr s = set_union();
      expect(")");
      return build(t.pos, [&] { return num_of_class(s); });
    }
    fail("expected a num value");
  }

 private:
  const Token& peek() const { return tokens_[index_]; }
  Token advance() { return tokens_[index_++]; }
  bool is_symbol(std::string_view s) const {
    return peek().kind == Tok::Symbol && peek().text == s;
  }

  void expect(std::string_view s) {
    if (!is_symbol(s)) fail("expected '" + std::string(s) + "'");
    advance();
  }

  [[noreturn]] void fail(const std::string& message) { fail(message, peek().pos); }
  [[noreturn]] void fail(const std::string& message, std::size_t pos) {
    const std::string found = peek().kind == Tok::End ? "end of input" : "'" + peek().text + "'";
    throw Error(ErrorKind::Syntax, "cli", message + " (found " + found + ")", std::string(src_),
                pos);
  }

  Natural natural() {
    if (peek().kind != Tok::Number) fail("expected a number");
    return parse_natural(advance().text);
  }

  Element integer() {
    bool negative = false;
    if (is_symbol("-")) {
      advance();
      negative = true;
    }
    const std::size_t at = peek().pos;
    const Natural n = natural();
    if (n > kMaxLiteral) fail("number too large", at);
    const auto v = static_cast<Element>(n);
    return negative ? -v : v;
  }

  Rational rational() {
    bool negative = false;
    if (is_symbol("-")) {
      advance();
      negative = true;
    }
    Rational r(natural());
    if (is_symbol("/")) {
      advance();
      const std::size_t at = peek().pos;
      const Natural d = natural();
      if (d == 0) fail("zero denominator", at);
      r /= Rational(d);
    }
    return negative ? Rational(-r) : r;
  }

  std::string_view src_;
  std::vector<Token> tokens_;
  std::size_t index_ = 0;
  const Catalog* catalog_;
};

}  // namespace

bool is_set_keyword(std::string_view word) {
  for (auto k : kSetKeywords) {
    if (k == word) return true;
  }
  return word == "num" || word == "inf" || word == "w" || word == "omega" || word == "aleph0" ||
         word == "aleph" || word == "continuum";
}

SetExpr parse_set_expr(std::string_view src, const Catalog* catalog) {
  Parser p(src, catalog);
  return p.whole([&] { return p.set_union(); });
}

Ordinal parse_ord_expr(std::string_view src) {
  Parser p(src, nullptr);
  return p.whole([&] { return p.ord_sum(); });
}

Cardinal parse_card_expr(std::string_view src, const Catalog* catalog, CardinalOptions options) {
  Parser p(src, catalog);
  return p.whole([&] { return p.card_sum(options); });
}

NumValue parse_num_expr(std::string_view src, const Catalog* catalog) {
  Parser p(src, catalog);
  return p.whole([&] { return p.num_sum(); });
}

}  // namespace cardlab
