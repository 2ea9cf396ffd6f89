#pragma once

#include <memory>
#include <string>
#include <vector>

#include "cardlab/numeric.hpp"
#include "cardlab/polynomial.hpp"

namespace cardlab {

/// Which universe an expression lives in: subsets of the naturals, or
/// (symbolic) subsets of the reals.
enum class Sort { Naturals, Reals };

/// Syntactic class of a naturals-sort expression, used by the decidability guard.
///   Periodic  - no polynomial image of degree >= 2 inside
///   Sparse    - periodic part united with masked polynomial images
///   CoSparse  - periodic part with masked polynomial images removed
enum class ShapeClass { Periodic, Sparse, CoSparse };

/// Immutable set expression tree. Construction checks sorts and the guard:
/// naturals and reals never mix, and an intersection or difference between
/// two expressions that both carry polynomial images is rejected (as is a
/// union that would need one), since deciding those needs number theory.
class SetExpr {
 public:
  enum class Kind {
    Naturals,
    Progression,
    Poly,
    Finite,
    Reals,
    RealsPos,
    Interval,
    Union,
    Intersection,
    Difference,
  };

  static SetExpr naturals();
  static SetExpr evens();
  static SetExpr odds();
  static SetExpr squares();
  static SetExpr cubes();
  /// {step*n + offset}
  static SetExpr progression(Element step, Element offset);
  static SetExpr poly(std::vector<Element> coefficients);
  /// Elements are sorted and deduplicated.
  static SetExpr finite(std::vector<Element> elements);
  static SetExpr reals();
  static SetExpr reals_pos();
  /// Open interval (lo, hi).
  static SetExpr interval(Rational lo, Rational hi);

  static SetExpr unite(SetExpr lhs, SetExpr rhs);
  static SetExpr intersect(SetExpr lhs, SetExpr rhs);
  static SetExpr subtract(SetExpr lhs, SetExpr rhs);

  Kind kind() const noexcept;
  Sort sort() const noexcept;
  ShapeClass shape() const noexcept;
  bool is_leaf() const noexcept;

  // Leaf payloads; valid only for the matching kind.
  Element step() const;
  Element offset() const;
  const Polynomial& polynomial() const;
  const std::vector<Element>& elements() const;
  const Rational& lower() const;
  const Rational& upper() const;

  // Children; valid only for binary kinds.
  const SetExpr& lhs() const;
  const SetExpr& rhs() const;

  /// DSL text; parse(to_string()) reproduces the same tree.
  std::string to_string() const;

  friend bool operator==(const SetExpr& a, const SetExpr& b);

 private:
  struct Node;
  explicit SetExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static SetExpr binary(Kind kind, SetExpr lhs, SetExpr rhs);

  std::shared_ptr<const Node> node_;
};

const char* to_string(Sort sort) noexcept;

}  // namespace cardlab
