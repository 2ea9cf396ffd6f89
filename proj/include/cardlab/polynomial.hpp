#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cardlab/numeric.hpp"

namespace cardlab {

/// Integer polynomial c0 + c1*n + c2*n^2 + ... that is strictly increasing
/// with nonnegative values on the naturals. Validated on construction.
class Polynomial {
 public:
  /// Trailing zero coefficients are dropped. Throws Error(UndefinedInput) when
  /// the polynomial has degree 0, a non-positive leading coefficient, a
  /// negative value at 0, or is not strictly increasing on the naturals.
  explicit Polynomial(std::vector<Element> coefficients);

  const std::vector<Element>& coefficients() const noexcept { return coefficients_; }
  std::size_t degree() const noexcept { return coefficients_.size() - 1; }

  /// p(n), or nullopt when the value does not fit in an Element.
  std::optional<Element> value(Element n) const;
  /// The unique n with p(n) = m, if any.
  std::optional<Element> preimage(Element m) const;
  /// Smallest n with p(n) >= m (p(n) may overflow; callers check value()).
  Element first_index_at_least(Element m) const;
  /// p(n) mod modulus, for modulus >= 1.
  Element value_mod(Element n, Element modulus) const;

  /// `poly(c0,c1,...)`
  std::string to_string() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Element> coefficients_;
};

}  // namespace cardlab
