#include "shape.hpp"

#include <algorithm>

#include "cardlab/error.hpp"

namespace cardlab::detail {
namespace {

// Elements inspected when looking for a concrete counterexample before
// settling for Unknown.
constexpr int kCounterexampleSearch = 64;

void simplify(ShapedSet& s) {
  std::vector<PolyPart> merged;
  for (auto& part : s.parts) {
    part.mask = s.negative ? intersect(part.mask, s.base) : subtract(part.mask, s.base);
    auto same = std::find_if(merged.begin(), merged.end(),
                             [&](const PolyPart& m) { return m.poly == part.poly; });
    if (same != merged.end()) {
      same->mask = unite(same->mask, part.mask);
    } else {
      merged.push_back(std::move(part));
    }
  }
  std::erase_if(merged, [](const PolyPart& part) {
    auto fin = finite_image(part.poly, part.mask);
    return fin && fin->empty();
  });
  s.parts = std::move(merged);
  if (s.parts.empty()) s.negative = false;
}

ShapedSet periodic(CanonicalPeriodicSet base) {
  ShapedSet s;
  s.base = std::move(base);
  return s;
}

ShapedSet mask_parts(ShapedSet s, const CanonicalPeriodicSet& q, bool keep_inside) {
  for (auto& part : s.parts) part.mask = keep_inside ? intersect(part.mask, q) : subtract(part.mask, q);
  return s;
}

[[noreturn]] void semantic_guard() {
  throw Error(ErrorKind::Guard, "sets",
              "expression needs the intersection of two polynomial images");
}

ShapedSet unite_shapes(ShapedSet a, ShapedSet b) {
  if (!a.is_periodic() && b.is_periodic()) std::swap(a, b);
  if (a.is_periodic()) {
    // Q ∪ (P ∪ U) = (Q ∪ P) ∪ U ;  Q ∪ (P \ U) = (Q ∪ P) \ (U \ Q)
    if (b.negative) b = mask_parts(std::move(b), a.base, false);
    b.base = unite(a.base, b.base);
    simplify(b);
    return b;
  }
  if (a.negative || b.negative) semantic_guard();
  a.base = unite(a.base, b.base);
  for (auto& part : b.parts) a.parts.push_back(std::move(part));
  simplify(a);
  return a;
}

ShapedSet intersect_shapes(ShapedSet a, ShapedSet b) {
  if (!a.is_periodic() && b.is_periodic()) std::swap(a, b);
  if (!a.is_periodic()) semantic_guard();
  b.base = intersect(b.base, a.base);
  b = mask_parts(std::move(b), a.base, true);
  simplify(b);
  return b;
}

ShapedSet subtract_shapes(ShapedSet a, ShapedSet b) {
  if (b.is_periodic()) {
    a.base = subtract(a.base, b.base);
    a = mask_parts(std::move(a), b.base, false);
    simplify(a);
    return a;
  }
  if (!a.is_periodic()) semantic_guard();
  // Q \ (P ∪ U) = (Q \ P) \ U ;  Q \ (P \ U) = (Q \ P) ∪ (U ∩ Q)
  ShapedSet out;
  out.negative = !b.negative;
  out.base = subtract(a.base, b.base);
  out.parts = std::move(b.parts);
  if (b.negative) out = mask_parts(std::move(out), a.base, true);
  simplify(out);
  return out;
}

bool has_preimage(const Polynomial& p, Element x) { return p.preimage(x).has_value(); }

const PolyPart* find_part(const ShapedSet& s, const Polynomial& p) {
  for (const auto& part : s.parts) {
    if (part.poly == p) return &part;
  }
  return nullptr;
}

// First few elements of img(p) ∩ mask satisfying `bad`; true if one is found.
template <typename Pred>
bool search_counterexample(const Polynomial& p, const CanonicalPeriodicSet& mask, Pred bad) {
  Element from = 0;
  for (int i = 0; i < kCounterexampleSearch; ++i) {
    auto x = image_next(p, mask, from);
    if (!x) return false;
    if (bad(*x)) return true;
    from = *x + 1;
  }
  return false;
}

// Is every element of img(p) ∩ region inside `target`?
Truth image_inside(const Polynomial& p, const CanonicalPeriodicSet& region, const ShapedSet& target) {
  if (auto fin = finite_image(p, region)) {
    for (Element x : *fin) {
      if (!target.contains(x)) return Truth::False;
    }
    return Truth::True;
  }
  return Truth::Unknown;
}

// Is img(p) ∩ region disjoint from `target`?
Truth image_avoids(const Polynomial& p, const CanonicalPeriodicSet& region, const ShapedSet& target) {
  if (auto fin = finite_image(p, region)) {
    for (Element x : *fin) {
      if (target.contains(x)) return Truth::False;
    }
    return Truth::True;
  }
  return Truth::Unknown;
}

Truth sparse_in_sparse(const ShapedSet& a, const ShapedSet& b) {
  const auto outside = subtract(a.base, b.base);
  if (!outside.is_finite()) return Truth::False;
  for (Element x : outside.members()) {
    if (!b.contains(x)) return Truth::False;
  }
  Truth result = Truth::True;
  for (const auto& [p, mask] : a.parts) {
    const auto region = subtract(mask, b.base);
    if (auto t = image_inside(p, region, b); t != Truth::Unknown) {
      if (t == Truth::False) return Truth::False;
      continue;
    }
    const PolyPart* same = find_part(b, p);
    const auto rest = same ? subtract(region, same->mask) : region;
    if (auto t = image_inside(p, rest, b); t != Truth::Unknown) {
      if (t == Truth::False) return Truth::False;
      continue;
    }
    if (b.parts.empty()) return Truth::False;
    if (search_counterexample(p, rest, [&](Element x) { return !b.contains(x); })) {
      return Truth::False;
    }
    result = Truth::Unknown;
  }
  return result;
}

Truth sparse_in_cosparse(const ShapedSet& a, const ShapedSet& b) {
  if (!subtract(a.base, b.base).is_empty()) return Truth::False;
  for (const auto& [p, mask] : a.parts) {
    const auto outside = subtract(mask, b.base);
    if (image_meets_infinitely(p, outside)) return Truth::False;
    if (auto fin = finite_image(p, outside); fin && !fin->empty()) return Truth::False;
  }
  // Now a ⊆ base(b); a must avoid the removed images.
  Truth result = Truth::True;
  for (const auto& [q, qmask] : b.parts) {
    const auto region = intersect(qmask, a.base);
    if (auto fin = finite_image(q, region); !fin || !fin->empty()) return Truth::False;
  }
  for (const auto& [p, mask] : a.parts) {
    for (const auto& [q, qmask] : b.parts) {
      const auto region = intersect(mask, qmask);
      if (p == q) {
        auto fin = finite_image(p, region);
        if (!fin || !fin->empty()) return Truth::False;
        continue;
      }
      ShapedSet q_only;
      q_only.parts.push_back(PolyPart{q, region});
      if (auto t = image_avoids(p, region, q_only); t != Truth::Unknown) {
        if (t == Truth::False) return Truth::False;
        continue;
      }
      ShapedSet p_only;
      p_only.parts.push_back(PolyPart{p, region});
      if (auto t = image_avoids(q, region, p_only); t != Truth::Unknown) {
        if (t == Truth::False) return Truth::False;
        continue;
      }
      if (search_counterexample(p, region, [&](Element x) { return has_preimage(q, x); })) {
        return Truth::False;
      }
      result = Truth::Unknown;
    }
  }
  return result;
}

Truth cosparse_in_sparse(const ShapedSet& a, const ShapedSet& b) {
  // Outside base(b) only a density-zero set is available, so the leftover
  // of base(a) must be finite and checked pointwise.
  const auto outside = subtract(a.base, b.base);
  if (!outside.is_finite()) return Truth::False;
  for (Element x : outside.members()) {
    if (a.contains(x) && !b.contains(x)) return Truth::False;
  }
  return Truth::True;
}

Truth cosparse_in_cosparse(const ShapedSet& a, const ShapedSet& b) {
  const auto outside = subtract(a.base, b.base);
  if (!outside.is_finite()) return Truth::False;
  for (Element x : outside.members()) {
    if (a.contains(x)) return Truth::False;
  }
  // Each removed image of b, inside base(a), must already be removed from a.
  Truth result = Truth::True;
  for (const auto& [q, qmask] : b.parts) {
    const auto region = intersect(qmask, a.base);
    ShapedSet a_view = a;
    auto inside_removed = [&](const CanonicalPeriodicSet& r) -> Truth {
      if (auto fin = finite_image(q, r)) {
        for (Element x : *fin) {
          if (a_view.contains(x)) return Truth::False;
        }
        return Truth::True;
      }
      return Truth::Unknown;
    };
    if (auto t = inside_removed(region); t != Truth::Unknown) {
      if (t == Truth::False) return Truth::False;
      continue;
    }
    const PolyPart* same = find_part(a, q);
    const auto rest = same ? subtract(region, same->mask) : region;
    if (auto t = inside_removed(rest); t != Truth::Unknown) {
      if (t == Truth::False) return Truth::False;
      continue;
    }
    if (a.parts.empty()) return Truth::False;
    if (search_counterexample(q, rest, [&](Element x) { return a.contains(x); })) {
      return Truth::False;
    }
    result = Truth::Unknown;
  }
  return result;
}

}  // namespace

bool part_contains(const PolyPart& part, Element n) {
  return part.mask.contains(n) && has_preimage(part.poly, n);
}

bool ShapedSet::parts_contain(Element n) const {
  return std::any_of(parts.begin(), parts.end(),
                     [n](const PolyPart& part) { return part_contains(part, n); });
}

bool ShapedSet::contains(Element n) const {
  if (negative) return base.contains(n) && !parts_contain(n);
  return base.contains(n) || parts_contain(n);
}

bool image_meets_infinitely(const Polynomial& p, const CanonicalPeriodicSet& mask) {
  if (mask.is_finite()) return false;
  const Element q = mask.period();
  // p(n + q) ≡ p(n) (mod q), so residues over one period decide it.
  for (Element n = 0; n < q; ++n) {
    if (mask.residue_member(p.value_mod(n, q))) return true;
  }
  return false;
}

std::optional<std::vector<Element>> finite_image(const Polynomial& p,
                                                 const CanonicalPeriodicSet& mask) {
  if (image_meets_infinitely(p, mask)) return std::nullopt;
  std::vector<Element> out;
  const Element limit = mask.threshold();
  for (Element n = 0;; ++n) {
    const auto v = p.value(n);
    if (!v || *v >= limit) break;
    if (mask.contains(*v)) out.push_back(*v);
  }
  return out;
}

std::optional<Element> image_next(const Polynomial& p, const CanonicalPeriodicSet& mask,
                                  Element from) {
  if (!image_meets_infinitely(p, mask) && from >= mask.threshold()) return std::nullopt;
  for (Element n = p.first_index_at_least(from);; ++n) {
    const auto v = p.value(n);
    if (!v) return std::nullopt;
    if (mask.contains(*v)) return v;
    if (*v >= mask.threshold() && !image_meets_infinitely(p, mask)) return std::nullopt;
  }
}

ShapedSet shape_of(const SetExpr& expr) {
  using K = SetExpr::Kind;
  if (expr.sort() != Sort::Naturals) {
    throw Error(ErrorKind::Sort, "sets", "expected a naturals-sort set", expr.to_string());
  }
  switch (expr.kind()) {
    case K::Naturals: return periodic(CanonicalPeriodicSet::naturals());
    case K::Progression:
      return periodic(CanonicalPeriodicSet::progression(expr.step(), expr.offset()));
    case K::Finite: return periodic(CanonicalPeriodicSet::finite(expr.elements()));
    case K::Poly: {
      const auto& p = expr.polynomial();
      if (p.degree() == 1) {
        return periodic(CanonicalPeriodicSet::progression(p.coefficients()[1], p.coefficients()[0]));
      }
      ShapedSet s;
      s.parts.push_back(PolyPart{p, CanonicalPeriodicSet::naturals()});
      return s;
    }
    case K::Union: return unite_shapes(shape_of(expr.lhs()), shape_of(expr.rhs()));
    case K::Intersection: return intersect_shapes(shape_of(expr.lhs()), shape_of(expr.rhs()));
    case K::Difference: return subtract_shapes(shape_of(expr.lhs()), shape_of(expr.rhs()));
    default: break;
  }
  throw Error(ErrorKind::Sort, "sets", "expected a naturals-sort set", expr.to_string());
}

ShapedSet complement(const ShapedSet& s) {
  return subtract_shapes(periodic(CanonicalPeriodicSet::naturals()), s);
}

std::optional<Element> next_at_least(const ShapedSet& s, Element from) {
  if (from < 0) from = 0;
  if (!s.negative) {
    std::optional<Element> best = s.base.next_at_least(from);
    for (const auto& [p, mask] : s.parts) {
      auto x = image_next(p, mask, from);
      if (x && (!best || *x < *best)) best = x;
    }
    return best;
  }
  for (Element y = from;;) {
    auto x = s.base.next_at_least(y);
    if (!x) return std::nullopt;
    if (!s.parts_contain(*x)) return x;
    y = *x + 1;
  }
}

Truth subset(const ShapedSet& a, const ShapedSet& b) {
  if (!a.negative && !b.negative) return sparse_in_sparse(a, b);
  if (!a.negative) return sparse_in_cosparse(a, b);
  if (!b.negative) return cosparse_in_sparse(a, b);
  return cosparse_in_cosparse(a, b);
}

}  // namespace cardlab::detail
