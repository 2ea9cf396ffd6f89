#include "cardlab/polynomial.hpp"

#include <limits>

#include "cardlab/error.hpp"

namespace cardlab {
namespace {

__extension__ using Wide = __int128;

constexpr Wide kOverflow = Wide(1) << 120;
// Monotonicity is checked pointwise below the root bound; beyond this we refuse.
constexpr long kMaxMonotoneCheck = 1000000;

[[noreturn]] void reject(const std::vector<Element>& coefficients, const std::string& why) {
  std::string text = "poly(";
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    if (i) text += ",";
    text += std::to_string(coefficients[i]);
  }
  text += ")";
  throw Error(ErrorKind::UndefinedInput, "sets", "invalid polynomial image: " + why, text);
}

Natural evaluate(const std::vector<Natural>& coefficients, const Natural& x) {
  Natural acc = 0;
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * x + *it;
  return acc;
}

}  // namespace

Polynomial::Polynomial(std::vector<Element> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
  if (coefficients_.size() < 2) reject(coefficients_, "degree must be at least 1");
  if (coefficients_.back() <= 0) reject(coefficients_, "leading coefficient must be positive");
  if (coefficients_.front() < 0) reject(coefficients_, "value at 0 must be nonnegative");

  // Forward difference d(n) = p(n+1) - p(n); expand (n+1)^i binomially.
  const std::size_t deg = degree();
  std::vector<Natural> diff(deg, 0);
  for (std::size_t i = 1; i <= deg; ++i) {
    Natural binom = 1;  // C(i, j)
    for (std::size_t j = 0; j < i; ++j) {
      diff[j] += Natural(coefficients_[i]) * binom;
      binom = binom * (i - j) / (j + 1);
    }
  }
  // Positive roots of d lie below 1 + max|negative coefficient| / lead.
  Natural worst = 0;
  for (const auto& c : diff) {
    if (c < 0 && -c > worst) worst = -c;
  }
  const Natural bound = 1 + worst / diff.back() + 1;
  if (bound > kMaxMonotoneCheck) reject(coefficients_, "monotonicity check exceeds search bound");
  for (Natural n = 0; n <= bound; ++n) {
    if (evaluate(diff, n) <= 0) reject(coefficients_, "not strictly increasing on the naturals");
  }
}

std::optional<Element> Polynomial::value(Element n) const {
  Wide acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = acc * n + *it;
    if (acc > kOverflow || acc < -kOverflow) return std::nullopt;
  }
  if (acc > std::numeric_limits<Element>::max()) return std::nullopt;
  return static_cast<Element>(acc);
}

Element Polynomial::first_index_at_least(Element m) const {
  // p(n) >= n for all n, so the answer lies in [0, max(m, 0)].
  Element lo = 0;
  Element hi = m < 0 ? 0 : m;
  while (lo < hi) {
    const Element mid = lo + (hi - lo) / 2;
    const auto v = value(mid);
    if (!v || *v >= m) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  return lo;
}

std::optional<Element> Polynomial::preimage(Element m) const {
  if (m < 0) return std::nullopt;
  const Element n = first_index_at_least(m);
  const auto v = value(n);
  if (v && *v == m) return n;
  return std::nullopt;
}

Element Polynomial::value_mod(Element n, Element modulus) const {
  Wide acc = 0;
  const Wide x = n % modulus;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    acc = (acc * x + *it) % modulus;
  }
  if (acc < 0) acc += modulus;
  return static_cast<Element>(acc);
}

std::string Polynomial::to_string() const {
  std::string out = "poly(";
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coefficients_[i]);
  }
  return out + ")";
}

}  // namespace cardlab
