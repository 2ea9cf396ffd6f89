#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "cardlab/cardinal.hpp"
#include "cardlab/numeric.hpp"

namespace cardlab {

struct CnfTerm;

/// An ordinal below epsilon_0 in Cantor normal form:
///   omega^e1 * c1 + omega^e2 * c2 + ... + omega^ek * ck,  e1 > e2 > ... > ek, ci >= 1.
///
/// The empty term list is 0. Values are immutable; every factory and
/// arithmetic operation returns a canonical term list.
class Ordinal {
 public:
  Ordinal() = default;

  static Ordinal finite(Natural n);
  static Ordinal omega();
  /// omega^exponent * coefficient (coefficient 0 yields 0).
  static Ordinal omega_power(Ordinal exponent, Natural coefficient = 1);
  /// Builds from explicit terms; throws Error(UndefinedInput) unless canonical.
  static Ordinal from_terms(std::vector<CnfTerm> terms);

  const std::vector<CnfTerm>& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_finite() const;
  bool is_infinite() const { return !is_finite(); }
  /// True for nonzero ordinals with no finite part (omega, omega*2, omega^2, ...).
  bool is_limit() const;
  /// The value when finite.
  std::optional<Natural> finite_value() const;
  /// Exponent of the leading term; 0 for the zero ordinal.
  Ordinal leading_exponent() const;

  /// DSL form, e.g. `w^2*3 + w*2 + 5`. Parses back to the same value.
  std::string to_string() const;
  /// Typeset form, e.g. `ω²·3+ω·2+5`.
  std::string pretty() const;

  friend bool operator==(const Ordinal& a, const Ordinal& b);
  friend std::strong_ordering operator<=>(const Ordinal& a, const Ordinal& b);

 private:
  std::vector<CnfTerm> terms_;
};

struct CnfTerm {
  Ordinal exponent;
  Natural coefficient;
};

Ordinal ord_add(const Ordinal& a, const Ordinal& b);
Ordinal ord_mul(const Ordinal& a, const Ordinal& b);
/// Throws Error(UndefinedInput) for 0^0.
Ordinal ord_pow(const Ordinal& base, const Ordinal& exponent);
std::strong_ordering ord_cmp(const Ordinal& a, const Ordinal& b);
/// Finite(n) for finite ordinals, aleph_0 for every infinite one (all are countable).
Cardinal ord_cardinality(const Ordinal& a);

/// True when the term list satisfies the CNF invariants recursively.
bool is_canonical(const std::vector<CnfTerm>& terms);

}  // namespace cardlab
