#include "cardlab/set_expr.hpp"

#include <algorithm>
#include <optional>

#include "cardlab/error.hpp"

namespace cardlab {

struct SetExpr::Node {
  Kind kind;
  Sort sort = Sort::Naturals;
  ShapeClass shape = ShapeClass::Periodic;
  Element step = 0;
  Element offset = 0;
  std::optional<Polynomial> poly;
  std::vector<Element> elements;
  Rational lower = 0;
  Rational upper = 0;
  std::optional<SetExpr> lhs;
  std::optional<SetExpr> rhs;
};

namespace {

const char* op_symbol(SetExpr::Kind kind) {
  switch (kind) {
    case SetExpr::Kind::Union: return "|";
    case SetExpr::Kind::Intersection: return "&";
    default: break;
  }
  return "\\";
}

[[noreturn]] void guard_violation(const std::string& why, const SetExpr& lhs, const SetExpr& rhs,
                                  SetExpr::Kind kind) {
  throw Error(ErrorKind::Guard, "sets", why,
              lhs.to_string() + " " + op_symbol(kind) + " " + rhs.to_string());
}

// Guard table over syntactic shapes.
ShapeClass combine_shapes(SetExpr::Kind kind, const SetExpr& lhs, const SetExpr& rhs) {
  using S = ShapeClass;
  const S a = lhs.shape();
  const S b = rhs.shape();
  switch (kind) {
    case SetExpr::Kind::Union:
      if (a == S::Periodic) return b;
      if (b == S::Periodic) return a;
      if (a == S::Sparse && b == S::Sparse) return S::Sparse;
      guard_violation(
          "union of a co-polynomial set with a polynomial-image set needs the intersection "
          "of two polynomial images, which is outside the decidable fragment",
          lhs, rhs, kind);
    case SetExpr::Kind::Intersection:
      if (a == S::Periodic) return b;
      if (b == S::Periodic) return a;
      guard_violation(
          "intersection of two polynomial-image sets is outside the decidable fragment; one "
          "operand must be eventually periodic or finite",
          lhs, rhs, kind);
    case SetExpr::Kind::Difference:
      if (b == S::Periodic) return a;
      if (a == S::Periodic) return b == S::Sparse ? S::CoSparse : S::Sparse;
      guard_violation(
          "difference of two polynomial-image sets is outside the decidable fragment; one "
          "operand must be eventually periodic or finite",
          lhs, rhs, kind);
    default: break;
  }
  return S::Periodic;
}

}  // namespace

SetExpr SetExpr::naturals() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Naturals;
  return SetExpr(std::move(node));
}

SetExpr SetExpr::evens() { return progression(2, 0); }
SetExpr SetExpr::odds() { return progression(2, 1); }
SetExpr SetExpr::squares() { return poly({0, 0, 1}); }
SetExpr SetExpr::cubes() { return poly({0, 0, 0, 1}); }

SetExpr SetExpr::progression(Element step, Element offset) {
  if (step < 1 || offset < 0) {
    throw Error(ErrorKind::UndefinedInput, "sets", "progression needs step >= 1 and offset >= 0",
                "ap(" + std::to_string(step) + "," + std::to_string(offset) + ")");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Progression;
  node->step = step;
  node->offset = offset;
  return SetExpr(std::move(node));
}

SetExpr SetExpr::poly(std::vector<Element> coefficients) {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Poly;
  node->poly.emplace(std::move(coefficients));
  node->shape = node->poly->degree() >= 2 ? ShapeClass::Sparse : ShapeClass::Periodic;
  return SetExpr(std::move(node));
}

SetExpr SetExpr::finite(std::vector<Element> elements) {
  for (Element e : elements) {
    if (e < 0) {
      throw Error(ErrorKind::UndefinedInput, "sets", "finite sets hold naturals only",
                  std::to_string(e));
    }
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  auto node = std::make_shared<Node>();
  node->kind = Kind::Finite;
  node->elements = std::move(elements);
  return SetExpr(std::move(node));
}

SetExpr SetExpr::reals() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::Reals;
  node->sort = Sort::Reals;
  return SetExpr(std::move(node));
}

SetExpr SetExpr::reals_pos() {
  auto node = std::make_shared<Node>();
  node->kind = Kind::RealsPos;
  node->sort = Sort::Reals;
  return SetExpr(std::move(node));
}

SetExpr SetExpr::interval(Rational lo, Rational hi) {
  if (!(lo < hi)) {
    throw Error(ErrorKind::UndefinedInput, "sets", "interval needs lo < hi",
                "interval(" + cardlab::to_string(lo) + "," + cardlab::to_string(hi) + ")");
  }
  auto node = std::make_shared<Node>();
  node->kind = Kind::Interval;
  node->sort = Sort::Reals;
  node->lower = std::move(lo);
  node->upper = std::move(hi);
  return SetExpr(std::move(node));
}

SetExpr SetExpr::binary(Kind kind, SetExpr lhs, SetExpr rhs) {
  if (lhs.sort() != rhs.sort()) {
    throw Error(ErrorKind::Sort, "sets",
                "cannot combine a naturals-sort set with a reals-sort set",
                lhs.to_string() + " " + op_symbol(kind) + " " + rhs.to_string());
  }
  auto node = std::make_shared<Node>();
  node->kind = kind;
  node->sort = lhs.sort();
  if (node->sort == Sort::Naturals) node->shape = combine_shapes(kind, lhs, rhs);
  node->lhs = std::move(lhs);
  node->rhs = std::move(rhs);
  return SetExpr(std::move(node));
}

SetExpr SetExpr::unite(SetExpr lhs, SetExpr rhs) {
  return binary(Kind::Union, std::move(lhs), std::move(rhs));
}

SetExpr SetExpr::intersect(SetExpr lhs, SetExpr rhs) {
  return binary(Kind::Intersection, std::move(lhs), std::move(rhs));
}

SetExpr SetExpr::subtract(SetExpr lhs, SetExpr rhs) {
  return binary(Kind::Difference, std::move(lhs), std::move(rhs));
}

SetExpr::Kind SetExpr::kind() const noexcept { return node_->kind; }
Sort SetExpr::sort() const noexcept { return node_->sort; }
ShapeClass SetExpr::shape() const noexcept { return node_->shape; }

bool SetExpr::is_leaf() const noexcept {
  return node_->kind != Kind::Union && node_->kind != Kind::Intersection &&
         node_->kind != Kind::Difference;
}

Element SetExpr::step() const { return node_->step; }
Element SetExpr::offset() const { return node_->offset; }
const Polynomial& SetExpr::polynomial() const { return *node_->poly; }
const std::vector<Element>& SetExpr::elements() const { return node_->elements; }
const Rational& SetExpr::lower() const { return node_->lower; }
const Rational& SetExpr::upper() const { return node_->upper; }
const SetExpr& SetExpr::lhs() const { return *node_->lhs; }
const SetExpr& SetExpr::rhs() const { return *node_->rhs; }

std::string SetExpr::to_string() const {
  switch (kind()) {
    case Kind::Naturals: return "naturals";
    case Kind::Progression:
      if (step() == 2 && offset() == 0) return "evens";
      if (step() == 2 && offset() == 1) return "odds";
      return "ap(" + std::to_string(step()) + "," + std::to_string(offset()) + ")";
    case Kind::Poly: {
      const auto& c = polynomial().coefficients();
      if (c == std::vector<Element>{0, 0, 1}) return "squares";
      if (c == std::vector<Element>{0, 0, 0, 1}) return "cubes";
      return polynomial().to_string();
    }
    case Kind::Finite: {
      std::string out = "finite{";
      for (std::size_t i = 0; i < elements().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(elements()[i]);
      }
      return out + "}";
    }
    case Kind::Reals: return "reals";
    case Kind::RealsPos: return "realspos";
    case Kind::Interval:
      return "interval(" + cardlab::to_string(lower()) + "," + cardlab::to_string(upper()) + ")";
    case Kind::Union: {
      // `|` is the loosest, left-associative operator.
      std::string right = rhs().to_string();
      if (rhs().kind() == Kind::Union) right = "(" + right + ")";
      return lhs().to_string() + " | " + right;
    }
    case Kind::Intersection:
    case Kind::Difference: {
      std::string left = lhs().to_string();
      if (lhs().kind() == Kind::Union) left = "(" + left + ")";
      std::string right = rhs().to_string();
      if (!rhs().is_leaf()) right = "(" + right + ")";
      return left + " " + op_symbol(kind()) + " " + right;
    }
  }
  return {};
}

bool operator==(const SetExpr& a, const SetExpr& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SetExpr::Kind::Naturals:
    case SetExpr::Kind::Reals:
    case SetExpr::Kind::RealsPos: return true;
    case SetExpr::Kind::Progression: return a.step() == b.step() && a.offset() == b.offset();
    case SetExpr::Kind::Poly: return a.polynomial() == b.polynomial();
    case SetExpr::Kind::Finite: return a.elements() == b.elements();
    case SetExpr::Kind::Interval: return a.lower() == b.lower() && a.upper() == b.upper();
    case SetExpr::Kind::Union:
    case SetExpr::Kind::Intersection:
    case SetExpr::Kind::Difference: return a.lhs() == b.lhs() && a.rhs() == b.rhs();
  }
  return false;
}

const char* to_string(Sort sort) noexcept {
  return sort == Sort::Naturals ? "naturals" : "reals";
}

}  // namespace cardlab
