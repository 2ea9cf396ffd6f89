#include "cardlab/cardinal.hpp"

#include "cardlab/error.hpp"

namespace cardlab {
namespace {

constexpr unsigned kMaxPowerBits = 1u << 16;

[[noreturn]] void unknown_result(const std::string& what) {
  throw Error(ErrorKind::UnknownResult, "cardinal", what);
}

// Larger operand for absorption; CH makes Continuum and aleph(1) coincide,
// in which case Continuum is the representative.
Cardinal larger(const Cardinal& a, const Cardinal& b, CardinalOptions options, const char* op) {
  switch (card_cmp(a, b, options)) {
    case CardinalOrder::Less: return b;
    case CardinalOrder::Greater: return a;
    case CardinalOrder::Equal:
      return b.kind() == Cardinal::Kind::Continuum ? b : a;
    case CardinalOrder::Unknown: break;
  }
  unknown_result(a.to_string() + " " + op + " " + b.to_string() +
                 " depends on the continuum hypothesis");
}

}  // namespace

Cardinal Cardinal::finite(Natural n) {
  if (n < 0) throw Error(ErrorKind::UndefinedInput, "cardinal", "negative cardinal");
  return Cardinal(Kind::Finite, std::move(n), 0);
}

Cardinal Cardinal::aleph(std::uint32_t index) { return Cardinal(Kind::Aleph, 0, index); }

Cardinal Cardinal::continuum() { return Cardinal(Kind::Continuum, 0, 0); }

std::string Cardinal::to_string() const {
  switch (kind_) {
    case Kind::Finite: return count_.str();
    case Kind::Aleph: return index_ == 0 ? "aleph0" : "aleph(" + std::to_string(index_) + ")";
    case Kind::Continuum: break;
  }
  return "continuum";
}

std::string Cardinal::pretty() const {
  static const char* const kSubscripts[] = {"₀", "₁", "₂", "₃", "₄", "₅", "₆", "₇", "₈", "₉"};
  switch (kind_) {
    case Kind::Finite: return count_.str();
    case Kind::Aleph: {
      std::string out = "ℵ";
      for (char c : std::to_string(index_)) out += kSubscripts[c - '0'];
      return out;
    }
    case Kind::Continuum: break;
  }
  return "𝔠";
}

const char* to_string(CardinalOrder order) noexcept {
  switch (order) {
    case CardinalOrder::Less: return "Less";
    case CardinalOrder::Equal: return "Equal";
    case CardinalOrder::Greater: return "Greater";
    case CardinalOrder::Unknown: break;
  }
  return "Unknown";
}

CardinalOrder card_cmp(const Cardinal& a, const Cardinal& b, CardinalOptions options) {
  using K = Cardinal::Kind;
  // Rank on a common scale: finite < aleph(k); Continuum sits at aleph(1) under CH.
  auto flip = [](CardinalOrder o) {
    if (o == CardinalOrder::Less) return CardinalOrder::Greater;
    if (o == CardinalOrder::Greater) return CardinalOrder::Less;
    return o;
  };
  if (a.kind() == K::Finite && b.kind() == K::Finite) {
    if (a.finite_value() == b.finite_value()) return CardinalOrder::Equal;
    return a.finite_value() < b.finite_value() ? CardinalOrder::Less : CardinalOrder::Greater;
  }
  if (a.kind() == K::Finite) return CardinalOrder::Less;
  if (b.kind() == K::Finite) return CardinalOrder::Greater;
  if (a.kind() == K::Aleph && b.kind() == K::Aleph) {
    if (a.aleph_index() == b.aleph_index()) return CardinalOrder::Equal;
    return a.aleph_index() < b.aleph_index() ? CardinalOrder::Less : CardinalOrder::Greater;
  }
  if (a.kind() == K::Continuum && b.kind() == K::Continuum) return CardinalOrder::Equal;
  if (a.kind() == K::Continuum) return flip(card_cmp(b, a, options));
  // a = aleph(k), b = Continuum
  const auto k = a.aleph_index();
  if (k == 0) return CardinalOrder::Less;
  if (!options.continuum_hypothesis) return CardinalOrder::Unknown;
  return k == 1 ? CardinalOrder::Equal : CardinalOrder::Greater;
}

Cardinal card_add(const Cardinal& a, const Cardinal& b, CardinalOptions options) {
  if (a.is_finite() && b.is_finite()) return Cardinal::finite(a.finite_value() + b.finite_value());
  return larger(a, b, options, "+");
}

Cardinal card_mul(const Cardinal& a, const Cardinal& b, CardinalOptions options) {
  const auto zero = Cardinal::finite(0);
  if (a == zero || b == zero) return zero;
  if (a.is_finite() && b.is_finite()) return Cardinal::finite(a.finite_value() * b.finite_value());
  return larger(a, b, options, "*");
}

Cardinal card_pow(const Cardinal& base, const Cardinal& exponent, CardinalOptions options) {
  (void)options;
  const auto text = base.to_string() + "^" + exponent.to_string();
  if (base == Cardinal::finite(0) && exponent == Cardinal::finite(0)) {
    throw Error(ErrorKind::UndefinedInput, "cardinal", "0^0 is undefined", text);
  }
  if (exponent.is_finite()) {
    const auto& n = exponent.finite_value();
    if (n == 0) return Cardinal::finite(1);
    if (base.is_infinite()) return base;  // kappa^n = kappa
    const auto& m = base.finite_value();
    if (m <= 1) return base;
    const auto bits = boost::multiprecision::msb(m) + 1;
    if (n > kMaxPowerBits || bits * n.convert_to<unsigned>() > kMaxPowerBits) {
      throw Error(ErrorKind::ResourceLimit, "cardinal", "finite power is too large", text);
    }
    return Cardinal::finite(boost::multiprecision::pow(m, n.convert_to<unsigned>()));
  }
  if (base.is_finite()) {
    const auto& m = base.finite_value();
    if (m <= 1) return base;  // 0^kappa = 0, 1^kappa = 1
    if (exponent == Cardinal::aleph(0)) return Cardinal::continuum();
  }
  throw Error(ErrorKind::UnknownResult, "cardinal",
              "transfinite exponentiation " + text + " is not supported", text);
}

}  // namespace cardlab
