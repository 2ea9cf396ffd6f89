#pragma once

#include <optional>
#include <vector>

#include "cardlab/numeric.hpp"
#include "cardlab/periodic.hpp"
#include "cardlab/polynomial.hpp"
#include "cardlab/set_expr.hpp"

namespace cardlab::detail {

/// img(poly) restricted to the periodic mask.
struct PolyPart {
  Polynomial poly;
  CanonicalPeriodicSet mask;
};

/// Semantic value of a naturals-sort expression:
///   negative == false:  base ∪ (∪ img(p_i) ∩ M_i),   M_i disjoint from base
///   negative == true:   base \ (∪ img(p_i) ∩ M_i),   M_i inside base
/// Every polynomial here has degree >= 2 and every part meets its mask.
struct ShapedSet {
  bool negative = false;
  CanonicalPeriodicSet base;
  std::vector<PolyPart> parts;

  bool is_periodic() const noexcept { return parts.empty(); }
  bool contains(Element n) const;
  bool parts_contain(Element n) const;
};

ShapedSet shape_of(const SetExpr& expr);
ShapedSet complement(const ShapedSet& s);

bool part_contains(const PolyPart& part, Element n);
/// Whether img(p) ∩ mask is infinite (decided by residues of p mod the period).
bool image_meets_infinitely(const Polynomial& p, const CanonicalPeriodicSet& mask);
/// img(p) ∩ mask as an explicit list, or nullopt when it is infinite.
std::optional<std::vector<Element>> finite_image(const Polynomial& p,
                                                 const CanonicalPeriodicSet& mask);
/// Smallest element >= from of img(p) ∩ mask.
std::optional<Element> image_next(const Polynomial& p, const CanonicalPeriodicSet& mask,
                                  Element from);

std::optional<Element> next_at_least(const ShapedSet& s, Element from);
/// Exact answer where the fragment allows it; Unknown when only cross-polynomial
/// number theory could settle the question.
Truth subset(const ShapedSet& a, const ShapedSet& b);

}  // namespace cardlab::detail
