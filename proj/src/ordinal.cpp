#include "cardlab/ordinal.hpp"

#include <utility>

#include "cardlab/error.hpp"

namespace cardlab {
namespace {

// Finite powers n^m are materialised; keep them to a sane size.
constexpr unsigned kMaxPowerBits = 1u << 16;

std::string superscript(const Natural& n) {
  static const char* const kDigits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out;
  for (char c : n.str()) out += kDigits[c - '0'];
  return out;
}

Natural finite_power(const Natural& base, const Natural& exponent) {
  if (base <= 1 || exponent == 0) return exponent == 0 ? Natural(1) : base;
  const auto bits = boost::multiprecision::msb(base) + 1;
  if (exponent > kMaxPowerBits || bits * exponent.convert_to<unsigned>() > kMaxPowerBits) {
    throw Error(ErrorKind::ResourceLimit, "ordinal",
                "finite power " + base.str() + "^" + exponent.str() + " is too large");
  }
  return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

}  // namespace

Ordinal Ordinal::finite(Natural n) {
  Ordinal out;
  if (n > 0) out.terms_.push_back(CnfTerm{Ordinal{}, std::move(n)});
  return out;
}

Ordinal Ordinal::omega() { return omega_power(finite(1)); }

Ordinal Ordinal::omega_power(Ordinal exponent, Natural coefficient) {
  Ordinal out;
  if (coefficient > 0) out.terms_.push_back(CnfTerm{std::move(exponent), std::move(coefficient)});
  return out;
}

Ordinal Ordinal::from_terms(std::vector<CnfTerm> terms) {
  if (!is_canonical(terms)) {
    throw Error(ErrorKind::UndefinedInput, "ordinal",
                "terms are not in Cantor normal form (exponents must strictly decrease, "
                "coefficients must be positive)");
  }
  Ordinal out;
  out.terms_ = std::move(terms);
  return out;
}

bool is_canonical(const std::vector<CnfTerm>& terms) {
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (terms[i].coefficient < 1) return false;
    if (!is_canonical(terms[i].exponent.terms())) return false;
    if (i > 0 && !(terms[i].exponent < terms[i - 1].exponent)) return false;
  }
  return true;
}

bool Ordinal::is_finite() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent.is_zero());
}

bool Ordinal::is_limit() const { return !terms_.empty() && !terms_.back().exponent.is_zero(); }

std::optional<Natural> Ordinal::finite_value() const {
  if (!is_finite()) return std::nullopt;
  return terms_.empty() ? Natural(0) : terms_.front().coefficient;
}

Ordinal Ordinal::leading_exponent() const {
  return terms_.empty() ? Ordinal{} : terms_.front().exponent;
}

std::string Ordinal::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exponent, coefficient] : terms_) {
    if (!out.empty()) out += " + ";
    if (exponent.is_zero()) {
      out += coefficient.str();
      continue;
    }
    out += "w";
    if (exponent != finite(1)) {
      if (exponent.is_finite() || exponent == omega()) {
        out += "^" + exponent.to_string();
      } else {
        out += "^(" + exponent.to_string() + ")";
      }
    }
    if (coefficient != 1) out += "*" + coefficient.str();
  }
  return out;
}

std::string Ordinal::pretty() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [exponent, coefficient] : terms_) {
    if (!out.empty()) out += "+";
    if (exponent.is_zero()) {
      out += coefficient.str();
      continue;
    }
    out += "ω";
    if (exponent != finite(1)) {
      if (auto e = exponent.finite_value()) {
        out += superscript(*e);
      } else if (exponent == omega()) {
        out += "^ω";
      } else {
        out += "^(" + exponent.pretty() + ")";
      }
    }
    if (coefficient != 1) out += "·" + coefficient.str();
  }
  return out;
}

bool operator==(const Ordinal& a, const Ordinal& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
    if (!(a.terms_[i].exponent == b.terms_[i].exponent)) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b) {
  const std::size_t n = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (auto c = a.terms_[i].exponent <=> b.terms_[i].exponent; c != 0) return c;
    const auto& ca = a.terms_[i].coefficient;
    const auto& cb = b.terms_[i].coefficient;
    if (ca != cb) return ca < cb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b) { return a <=> b; }

Ordinal ord_add(const Ordinal& a, const Ordinal& b) {
  if (b.is_zero()) return a;
  const auto& lead = b.terms().front();
  std::vector<CnfTerm> terms;
  terms.reserve(a.terms().size() + b.terms().size());
  // Terms of a below b's leading exponent are absorbed; an equal exponent merges.
  Natural carried = 0;
  for (const auto& term : a.terms()) {
    const auto c = term.exponent <=> lead.exponent;
    if (c > 0) {
      terms.push_back(term);
    } else {
      if (c == 0) carried = term.coefficient;
      break;
    }
  }
  terms.push_back(CnfTerm{lead.exponent, lead.coefficient + carried});
  terms.insert(terms.end(), b.terms().begin() + 1, b.terms().end());
  return Ordinal::from_terms(std::move(terms));
}

Ordinal ord_mul(const Ordinal& a, const Ordinal& b) {
  if (a.is_zero() || b.is_zero()) return Ordinal{};
  const auto& a_lead = a.terms().front();
  Ordinal product;
  // Left distributivity: a * (sum of terms of b) = sum of a * term.
  for (const auto& [exponent, coefficient] : b.terms()) {
    Ordinal piece;
    if (exponent.is_zero()) {
      std::vector<CnfTerm> terms = a.terms();
      terms.front().coefficient = a_lead.coefficient * coefficient;
      piece = Ordinal::from_terms(std::move(terms));
    } else {
      piece = Ordinal::omega_power(ord_add(a_lead.exponent, exponent), coefficient);
    }
    product = ord_add(product, piece);
  }
  return product;
}

Ordinal ord_pow(const Ordinal& base, const Ordinal& exponent) {
  if (base.is_zero()) {
    if (exponent.is_zero()) {
      throw Error(ErrorKind::UndefinedInput, "ordinal", "0^0 is undefined", "0^0");
    }
    return Ordinal{};
  }
  if (exponent.is_zero()) return Ordinal::finite(1);
  if (base == Ordinal::finite(1)) return base;

  // exponent = infinite_part + finite_part
  std::vector<CnfTerm> infinite_terms = exponent.terms();
  Natural finite_part = 0;
  if (infinite_terms.back().exponent.is_zero()) {
    finite_part = infinite_terms.back().coefficient;
    infinite_terms.pop_back();
  }

  if (auto n = base.finite_value()) {
    // n^(omega^b * c) = omega^(omega^b' * c), where 1 + b' = b.
    Natural tail = finite_power(*n, finite_part);
    if (infinite_terms.empty()) return Ordinal::finite(std::move(tail));
    Ordinal sum;
    for (const auto& [e, c] : infinite_terms) {
      Ordinal reduced = e;
      if (auto k = e.finite_value()) reduced = Ordinal::finite(*k - 1);
      sum = ord_add(sum, Ordinal::omega_power(std::move(reduced), c));
    }
    return Ordinal::omega_power(std::move(sum), std::move(tail));
  }

  // Infinite base with leading exponent a1: base^(limit part) = omega^(a1 * limit part).
  Ordinal result = Ordinal::finite(1);
  if (!infinite_terms.empty()) {
    const Ordinal limit_part = Ordinal::from_terms(std::move(infinite_terms));
    result = Ordinal::omega_power(ord_mul(base.leading_exponent(), limit_part));
  }
  if (finite_part > kMaxPowerBits) {
    throw Error(ErrorKind::ResourceLimit, "ordinal",
                "finite exponent " + finite_part.str() + " is too large");
  }
  Ordinal square = base;
  for (unsigned m = finite_part.convert_to<unsigned>(); m > 0; m >>= 1) {
    if (m & 1u) result = ord_mul(result, square);
    if (m > 1) square = ord_mul(square, square);
  }
  return result;
}

Cardinal ord_cardinality(const Ordinal& a) {
  if (auto n = a.finite_value()) return Cardinal::finite(*n);
  return Cardinal::aleph(0);
}

}  // namespace cardlab
