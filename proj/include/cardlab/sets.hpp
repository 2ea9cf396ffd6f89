#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "cardlab/cardinal.hpp"
#include "cardlab/numeric.hpp"
#include "cardlab/periodic.hpp"
#include "cardlab/real_set.hpp"
#include "cardlab/set_expr.hpp"

namespace cardlab {

namespace detail {
struct ShapedSet;
}

struct SizeClass {
  enum class Kind { Empty, Finite, CountablyInfinite, ContinuumSized };
  Kind kind = Kind::Empty;
  std::size_t count = 0;  // element count for Finite

  static SizeClass empty() { return {}; }
  static SizeClass finite(std::size_t n) { return n == 0 ? empty() : SizeClass{Kind::Finite, n}; }
  static SizeClass countable() { return {Kind::CountablyInfinite, 0}; }
  static SizeClass continuum() { return {Kind::ContinuumSized, 0}; }

  bool is_finite() const noexcept { return kind == Kind::Empty || kind == Kind::Finite; }
  bool is_infinite() const noexcept { return !is_finite(); }

  /// `empty`, `finite(4)`, `countably-infinite`, `continuum`.
  std::string to_string() const;
  friend bool operator==(const SizeClass&, const SizeClass&) = default;
};

/// Normal form of a set that carries a polynomial image of degree >= 2.
struct NonPeriodic {
  std::string description;
  friend bool operator==(const NonPeriodic&, const NonPeriodic&) = default;
};

using NormalForm = std::variant<CanonicalPeriodicSet, NonPeriodic>;

/// Membership, evaluated directly on the expression tree. Sort error on reals.
bool contains(const SetExpr& s, Element n);
/// Canonical periodic form, or NonPeriodic when a polynomial image survives.
NormalForm normalize(const SetExpr& s);
/// Exact value of a reals-sort expression.
RealSet real_value(const SetExpr& s);

SizeClass classify_size(const SetExpr& s);
/// Cantor cardinal of a size class: n, aleph0 or continuum.
Cardinal cardinal_of(const SizeClass& size);
/// Natural density. Polynomial images of degree >= 2 have density 0, so every
/// naturals-sort set in the algebra has one. Sort error on reals.
Rational natural_density(const SetExpr& s);

/// The naturals are treated as a subset of the reals, so mixed-sort
/// questions are answered too.
Truth is_subset(const SetExpr& a, const SetExpr& b);
Truth is_proper_subset(const SetExpr& a, const SetExpr& b);
Truth same_set(const SetExpr& a, const SetExpr& b);
Truth are_disjoint(const SetExpr& a, const SetExpr& b);

/// The k smallest elements. Throws Error(Exhausted) if there are fewer.
std::vector<Element> enumerate(const SetExpr& s, std::size_t k);
/// Smallest element >= from.
std::optional<Element> next_element(const SetExpr& s, Element from);

/// Walks a naturals-sort set in increasing order.
class SetCursor {
 public:
  explicit SetCursor(const SetExpr& s);
  std::optional<Element> next();

 private:
  std::shared_ptr<const detail::ShapedSet> shape_;
  Element from_ = 0;
  bool done_ = false;
};

/// Order-isomorphism prefix (a_i, b_i), i < k. Throws Error(Sort) for
/// reals-sort operands and Error(SizeMismatch) for sets of different sizes.
std::vector<std::pair<Element, Element>> bijection_table(const SetExpr& a, const SetExpr& b,
                                                         std::size_t k);

/// a_i -> a_{i+1} along the enumeration of an infinite set: injective, and
/// min(A) is never hit.
class ShiftMap {
 public:
  explicit ShiftMap(const SetExpr& domain);

  const SetExpr& domain() const noexcept { return domain_; }
  Element missed() const noexcept { return missed_; }
  /// Image of a member x: the next member after x.
  Element apply(Element x) const;
  /// First k pairs (a_i, a_{i+1}).
  std::vector<std::pair<Element, Element>> prefix(std::size_t k) const;
  /// `n ↦ n+1`, `n^2 ↦ (n+1)^2`, or the generic `a_i ↦ a_{i+1}`.
  std::string formula() const;

 private:
  SetExpr domain_;
  std::shared_ptr<const detail::ShapedSet> shape_;
  Element missed_ = 0;
};

/// Shift map for infinite naturals-sort sets; nullopt for finite ones.
std::optional<ShiftMap> dedekind_witness(const SetExpr& s);

}  // namespace cardlab
