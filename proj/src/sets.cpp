#include "cardlab/sets.hpp"

#include <algorithm>
#include <set>

#include "cardlab/error.hpp"
#include "shape.hpp"

namespace cardlab {
namespace {

using Kind = SetExpr::Kind;

// Largest number of naturals scanned when a mixed-sort question has to be
// settled element by element.
constexpr Element kCrossSortScan = 1'000'000;

[[noreturn]] void wrong_sort(const SetExpr& s, const char* wanted) {
  throw Error(ErrorKind::Sort, "sets", std::string("expected a ") + wanted + "-sort set",
              s.to_string());
}

std::shared_ptr<const detail::ShapedSet> shared_shape(const SetExpr& s) {
  return std::make_shared<const detail::ShapedSet>(detail::shape_of(s));
}

std::set<Element> finite_members(const detail::ShapedSet& s) {
  std::set<Element> out;
  for (Element x : s.base.members()) {
    if (!s.negative || !s.parts_contain(x)) out.insert(x);
  }
  if (!s.negative) {
    for (const auto& part : s.parts) {
      const auto image = detail::finite_image(part.poly, part.mask);
      out.insert(image->begin(), image->end());
    }
  }
  return out;
}

bool shape_is_finite(const detail::ShapedSet& s) {
  if (!s.base.is_finite()) return false;
  if (s.negative) return true;
  return std::none_of(s.parts.begin(), s.parts.end(), [](const detail::PolyPart& part) {
    return detail::image_meets_infinitely(part.poly, part.mask);
  });
}

// Smallest natural >= x, or nullopt when it is past the scan limit.
std::optional<Element> integer_ceiling(const Rational& x) {
  const Natural num = numerator(x);
  const Natural den = denominator(x);
  Natural q = num / den;
  if (q * den < num) q += 1;
  if (q > Natural(kCrossSortScan)) return std::nullopt;
  if (q < 0) return 0;
  return static_cast<Element>(q);
}

const RealInterval* unbounded_above(const RealSet& r) {
  if (r.is_empty()) return nullptr;
  const auto& last = r.pieces().back();
  return last.upper.kind == RealBound::Kind::PosInfinity ? &last : nullptr;
}

// Is every element of the naturals-sort set `a` inside the real set `b`?
Truth naturals_within(const SetExpr& a, const RealSet& b) {
  const auto shape = detail::shape_of(a);
  Element stop = 0;  // every natural >= stop is in b
  if (shape_is_finite(shape)) {
    for (Element x : finite_members(shape)) {
      if (!b.contains(Rational(x))) return Truth::False;
    }
    return Truth::True;
  }
  const RealInterval* tail = unbounded_above(b);
  if (!tail) return Truth::False;
  if (tail->lower.is_finite()) {
    auto c = integer_ceiling(tail->lower.value);
    if (!c) return Truth::Unknown;
    stop = *c + 1;
  }
  for (auto x = detail::next_at_least(shape, 0); x && *x < stop;
       x = detail::next_at_least(shape, *x + 1)) {
    if (!b.contains(Rational(*x))) return Truth::False;
  }
  return Truth::True;
}

// Does the naturals-sort set `a` avoid the real set `b`?
Truth naturals_avoid(const SetExpr& a, const RealSet& b) {
  const auto shape = detail::shape_of(a);
  if (unbounded_above(b)) {
    if (!shape_is_finite(shape)) return Truth::False;
    for (Element x : finite_members(shape)) {
      if (b.contains(Rational(x))) return Truth::False;
    }
    return Truth::True;
  }
  if (b.is_empty()) return Truth::True;
  auto stop = integer_ceiling(b.pieces().back().upper.value);
  if (!stop) return Truth::Unknown;
  for (auto x = detail::next_at_least(shape, 0); x && *x <= *stop;
       x = detail::next_at_least(shape, *x + 1)) {
    if (b.contains(Rational(*x))) return Truth::False;
  }
  return Truth::True;
}

// Is the real set `a` inside the naturals-sort set `b`? Only isolated
// natural points can be.
Truth reals_within(const RealSet& a, const SetExpr& b) {
  if (!a.is_finite()) return Truth::False;
  for (const auto& piece : a.pieces()) {
    const Rational& v = piece.lower.value;
    if (denominator(v) != 1 || v < 0 || v > Rational(kCrossSortScan)) return Truth::False;
    if (!contains(b, static_cast<Element>(numerator(v)))) return Truth::False;
  }
  return Truth::True;
}

std::string monomial(std::size_t degree, const char* var) {
  return std::string(var) + "^" + std::to_string(degree);
}

}  // namespace

std::string SizeClass::to_string() const {
  switch (kind) {
    case Kind::Empty: return "empty";
    case Kind::Finite: return "finite(" + std::to_string(count) + ")";
    case Kind::CountablyInfinite: return "countably-infinite";
    case Kind::ContinuumSized: return "continuum";
  }
  return {};
}

bool contains(const SetExpr& s, Element n) {
  if (s.sort() != Sort::Naturals) wrong_sort(s, "naturals");
  if (n < 0) return false;
  switch (s.kind()) {
    case Kind::Naturals: return true;
    case Kind::Progression: return n >= s.offset() && (n - s.offset()) % s.step() == 0;
    case Kind::Poly: return s.polynomial().preimage(n).has_value();
    case Kind::Finite: return std::binary_search(s.elements().begin(), s.elements().end(), n);
    case Kind::Union: return contains(s.lhs(), n) || contains(s.rhs(), n);
    case Kind::Intersection: return contains(s.lhs(), n) && contains(s.rhs(), n);
    case Kind::Difference: return contains(s.lhs(), n) && !contains(s.rhs(), n);
    default: break;
  }
  wrong_sort(s, "naturals");
}

NormalForm normalize(const SetExpr& s) {
  auto shape = detail::shape_of(s);
  if (shape.is_periodic()) return shape.base;
  std::string text = shape.negative ? "base " + shape.base.describe() + " minus" :
                                      "base " + shape.base.describe() + " plus";
  for (const auto& part : shape.parts) {
    text += " img " + part.poly.to_string() + " within [" + part.mask.describe() + "]";
  }
  return NonPeriodic{text};
}

RealSet real_value(const SetExpr& s) {
  switch (s.kind()) {
    case Kind::Reals: return RealSet::reals();
    case Kind::RealsPos: return RealSet::positive_reals();
    case Kind::Interval: return RealSet::open_interval(s.lower(), s.upper());
    case Kind::Union:
      if (s.sort() == Sort::Reals) return unite(real_value(s.lhs()), real_value(s.rhs()));
      break;
    case Kind::Intersection:
      if (s.sort() == Sort::Reals) return intersect(real_value(s.lhs()), real_value(s.rhs()));
      break;
    case Kind::Difference:
      if (s.sort() == Sort::Reals) return subtract(real_value(s.lhs()), real_value(s.rhs()));
      break;
    default: break;
  }
  wrong_sort(s, "reals");
}

SizeClass classify_size(const SetExpr& s) {
  if (s.sort() == Sort::Reals) {
    const RealSet r = real_value(s);
    if (r.is_finite()) return SizeClass::finite(r.point_count());
    return SizeClass::continuum();
  }
  const auto shape = detail::shape_of(s);
  if (!shape_is_finite(shape)) return SizeClass::countable();
  return SizeClass::finite(finite_members(shape).size());
}

Cardinal cardinal_of(const SizeClass& size) {
  switch (size.kind) {
    case SizeClass::Kind::Empty: return Cardinal::finite(0);
    case SizeClass::Kind::Finite: return Cardinal::finite(Natural(size.count));
    case SizeClass::Kind::CountablyInfinite: return Cardinal::aleph(0);
    case SizeClass::Kind::ContinuumSized: return Cardinal::continuum();
  }
  return Cardinal::finite(0);
}

Rational natural_density(const SetExpr& s) {
  if (s.sort() != Sort::Naturals) wrong_sort(s, "naturals");
  // Polynomial parts of degree >= 2 contribute density 0.
  return detail::shape_of(s).base.density();
}

Truth is_subset(const SetExpr& a, const SetExpr& b) {
  if (a.sort() == Sort::Naturals && b.sort() == Sort::Naturals) {
    return detail::subset(detail::shape_of(a), detail::shape_of(b));
  }
  if (a.sort() == Sort::Reals && b.sort() == Sort::Reals) {
    return truth_of(real_value(a).subset_of(real_value(b)));
  }
  if (a.sort() == Sort::Naturals) return naturals_within(a, real_value(b));
  return reals_within(real_value(a), b);
}

Truth is_proper_subset(const SetExpr& a, const SetExpr& b) {
  return truth_and(is_subset(a, b), truth_not(is_subset(b, a)));
}

Truth same_set(const SetExpr& a, const SetExpr& b) {
  return truth_and(is_subset(a, b), is_subset(b, a));
}

Truth are_disjoint(const SetExpr& a, const SetExpr& b) {
  if (a.sort() == Sort::Naturals && b.sort() == Sort::Naturals) {
    return detail::subset(detail::shape_of(a), detail::complement(detail::shape_of(b)));
  }
  if (a.sort() == Sort::Reals && b.sort() == Sort::Reals) {
    return truth_of(intersect(real_value(a), real_value(b)).is_empty());
  }
  if (a.sort() == Sort::Naturals) return naturals_avoid(a, real_value(b));
  return naturals_avoid(b, real_value(a));
}

std::vector<Element> enumerate(const SetExpr& s, std::size_t k) {
  SetCursor cursor(s);
  std::vector<Element> out;
  out.reserve(k);
  while (out.size() < k) {
    auto x = cursor.next();
    if (!x) {
      throw Error(ErrorKind::Exhausted, "sets",
                  "asked for " + std::to_string(k) + " elements but the set has only " +
                      std::to_string(out.size()),
                  s.to_string());
    }
    out.push_back(*x);
  }
  return out;
}

std::optional<Element> next_element(const SetExpr& s, Element from) {
  if (s.sort() != Sort::Naturals) wrong_sort(s, "naturals");
  return detail::next_at_least(detail::shape_of(s), from);
}

SetCursor::SetCursor(const SetExpr& s) {
  if (s.sort() != Sort::Naturals) wrong_sort(s, "naturals");
  shape_ = shared_shape(s);
}

std::optional<Element> SetCursor::next() {
  if (done_) return std::nullopt;
  auto x = detail::next_at_least(*shape_, from_);
  if (!x) {
    done_ = true;
    return std::nullopt;
  }
  from_ = *x + 1;
  return x;
}

std::vector<std::pair<Element, Element>> bijection_table(const SetExpr& a, const SetExpr& b,
                                                         std::size_t k) {
  for (const SetExpr* s : {&a, &b}) {
    if (s->sort() != Sort::Naturals) {
      throw Error(ErrorKind::Sort, "sets",
                  "continuum-sized sets have no enumerable bijection witness", s->to_string());
    }
  }
  const SizeClass sa = classify_size(a);
  const SizeClass sb = classify_size(b);
  if (sa != sb) {
    throw Error(ErrorKind::SizeMismatch, "sets",
                "sizes differ (" + sa.to_string() + " vs " + sb.to_string() + ")",
                a.to_string() + " , " + b.to_string());
  }
  const auto left = enumerate(a, k);
  const auto right = enumerate(b, k);
  std::vector<std::pair<Element, Element>> out;
  out.reserve(k);
  for (std::size_t i = 0; i < k; ++i) out.emplace_back(left[i], right[i]);
  return out;
}

ShiftMap::ShiftMap(const SetExpr& domain) : domain_(domain) {
  if (domain.sort() != Sort::Naturals) wrong_sort(domain, "naturals");
  shape_ = shared_shape(domain);
  auto first = detail::next_at_least(*shape_, 0);
  if (!first || shape_is_finite(*shape_)) {
    throw Error(ErrorKind::UndefinedInput, "sets", "a shift map needs an infinite set",
                domain.to_string());
  }
  missed_ = *first;
}

Element ShiftMap::apply(Element x) const {
  auto y = detail::next_at_least(*shape_, x + 1);
  if (!y) {
    throw Error(ErrorKind::ResourceLimit, "sets", "next element is out of range",
                std::to_string(x));
  }
  return *y;
}

std::vector<std::pair<Element, Element>> ShiftMap::prefix(std::size_t k) const {
  std::vector<std::pair<Element, Element>> out;
  out.reserve(k);
  Element x = missed_;
  for (std::size_t i = 0; i < k; ++i) {
    const Element y = apply(x);
    out.emplace_back(x, y);
    x = y;
  }
  return out;
}

std::string ShiftMap::formula() const {
  switch (domain_.kind()) {
    case Kind::Naturals: return "n ↦ n+1";
    case Kind::Progression: return "n ↦ n+" + std::to_string(domain_.step());
    case Kind::Poly: {
      const auto& c = domain_.polynomial().coefficients();
      const bool pure = std::all_of(c.begin(), c.end() - 1, [](Element x) { return x == 0; }) &&
                        c.back() == 1;
      if (pure) return monomial(c.size() - 1, "n") + " ↦ " + monomial(c.size() - 1, "(n+1)");
      return "p(n) ↦ p(n+1), p = " + domain_.polynomial().to_string();
    }
    default: break;
  }
  return "a_i ↦ a_{i+1}";
}

std::optional<ShiftMap> dedekind_witness(const SetExpr& s) {
  if (s.sort() != Sort::Naturals) wrong_sort(s, "naturals");
  if (classify_size(s).is_finite()) return std::nullopt;
  return ShiftMap(s);
}

}  // namespace cardlab
