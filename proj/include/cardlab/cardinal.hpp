#pragma once

#include <cstdint>
#include <string>

#include "cardlab/numeric.hpp"

namespace cardlab {

/// Cantor cardinal: Finite(n) | Aleph(k) | Continuum.
///
/// Continuum is its own symbol. It is known to exceed aleph_0; how it compares
/// with aleph_k for k >= 1 depends on the continuum hypothesis, which callers
/// pass explicitly through CardinalOptions.
class Cardinal {
 public:
  enum class Kind { Finite, Aleph, Continuum };

  static Cardinal finite(Natural n);
  static Cardinal aleph(std::uint32_t index);
  static Cardinal continuum();

  Kind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == Kind::Finite; }
  bool is_infinite() const noexcept { return !is_finite(); }
  const Natural& finite_value() const noexcept { return count_; }
  std::uint32_t aleph_index() const noexcept { return index_; }

  /// DSL form: `5`, `aleph0`, `aleph(2)`, `continuum`.
  std::string to_string() const;
  /// Typeset form: `5`, `ℵ₀`, `ℵ₂`, `𝔠`.
  std::string pretty() const;

  friend bool operator==(const Cardinal&, const Cardinal&) = default;

 private:
  Cardinal(Kind kind, Natural count, std::uint32_t index)
      : kind_(kind), count_(std::move(count)), index_(index) {}

  Kind kind_ = Kind::Finite;
  Natural count_ = 0;
  std::uint32_t index_ = 0;
};

struct CardinalOptions {
  /// When set, Continuum = Aleph(1).
  bool continuum_hypothesis = false;
};

enum class CardinalOrder { Less, Equal, Greater, Unknown };

const char* to_string(CardinalOrder order) noexcept;

CardinalOrder card_cmp(const Cardinal& a, const Cardinal& b, CardinalOptions options = {});

/// Absorption: an infinite operand yields the larger operand.
/// Throws Error(UnknownResult) when the larger one cannot be determined.
Cardinal card_add(const Cardinal& a, const Cardinal& b, CardinalOptions options = {});
Cardinal card_mul(const Cardinal& a, const Cardinal& b, CardinalOptions options = {});
/// Supports finite powers, kappa^n = kappa, m^aleph0 = Continuum (m >= 2),
/// 0^kappa and 1^kappa. Everything else throws Error(UnknownResult);
/// 0^0 throws Error(UndefinedInput).
Cardinal card_pow(const Cardinal& base, const Cardinal& exponent, CardinalOptions options = {});

}  // namespace cardlab
