#include "cardlab/real_set.hpp"

#include <algorithm>

#include "cardlab/error.hpp"

namespace cardlab {
namespace {

using Kind = RealBound::Kind;

// Order on lower bounds: a closed bound at v starts before an open one at v.
bool lower_before(const RealBound& a, const RealBound& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (!a.is_finite()) return false;
  if (a.value != b.value) return a.value < b.value;
  return a.closed && !b.closed;
}

// Order on upper bounds: an open bound at v ends before a closed one at v.
bool upper_before(const RealBound& a, const RealBound& b) {
  if (a.kind != b.kind) return a.kind < b.kind;
  if (!a.is_finite()) return false;
  if (a.value != b.value) return a.value < b.value;
  return !a.closed && b.closed;
}

bool nonempty(const RealInterval& iv) {
  if (!iv.lower.is_finite() || !iv.upper.is_finite()) {
    return iv.lower.kind != Kind::PosInfinity && iv.upper.kind != Kind::NegInfinity;
  }
  if (iv.lower.value < iv.upper.value) return true;
  return iv.lower.value == iv.upper.value && iv.lower.closed && iv.upper.closed;
}

// Does `next` (starting no earlier than `cur`) overlap or touch `cur`?
bool joins(const RealInterval& cur, const RealInterval& next) {
  if (!cur.upper.is_finite()) return true;
  if (!next.lower.is_finite()) return true;
  if (next.lower.value < cur.upper.value) return true;
  return next.lower.value == cur.upper.value && (next.lower.closed || cur.upper.closed);
}

std::string bound_text(const RealBound& b) {
  switch (b.kind) {
    case Kind::NegInfinity: return "-inf";
    case Kind::PosInfinity: return "+inf";
    case Kind::Finite: break;
  }
  return to_string(b.value);
}

}  // namespace

bool RealInterval::is_point() const {
  return lower.is_finite() && upper.is_finite() && lower.value == upper.value;
}

bool RealInterval::contains(const Rational& x) const {
  if (lower.is_finite()) {
    if (x < lower.value || (x == lower.value && !lower.closed)) return false;
  } else if (lower.kind == Kind::PosInfinity) {
    return false;
  }
  if (upper.is_finite()) {
    if (x > upper.value || (x == upper.value && !upper.closed)) return false;
  } else if (upper.kind == Kind::NegInfinity) {
    return false;
  }
  return true;
}

RealSet RealSet::reals() {
  return from_pieces({RealInterval{RealBound::neg_infinity(), RealBound::pos_infinity()}});
}

RealSet RealSet::positive_reals() {
  return from_pieces({RealInterval{RealBound::at(0, false), RealBound::pos_infinity()}});
}

RealSet RealSet::open_interval(Rational lo, Rational hi) {
  if (!(lo < hi)) {
    throw Error(ErrorKind::UndefinedInput, "sets", "interval needs lo < hi",
                "interval(" + to_string(lo) + "," + to_string(hi) + ")");
  }
  return from_pieces({RealInterval{RealBound::at(std::move(lo), false),
                                   RealBound::at(std::move(hi), false)}});
}

RealSet RealSet::from_pieces(std::vector<RealInterval> pieces) {
  RealSet out;
  out.pieces_ = std::move(pieces);
  out.normalize();
  return out;
}

void RealSet::normalize() {
  std::erase_if(pieces_, [](const RealInterval& iv) { return !nonempty(iv); });
  std::sort(pieces_.begin(), pieces_.end(), [](const RealInterval& a, const RealInterval& b) {
    return lower_before(a.lower, b.lower);
  });
  std::vector<RealInterval> merged;
  for (auto& iv : pieces_) {
    if (!merged.empty() && joins(merged.back(), iv)) {
      if (upper_before(merged.back().upper, iv.upper)) merged.back().upper = iv.upper;
    } else {
      merged.push_back(iv);
    }
  }
  pieces_ = std::move(merged);
}

bool RealSet::is_finite() const {
  return std::all_of(pieces_.begin(), pieces_.end(),
                     [](const RealInterval& iv) { return iv.is_point(); });
}

std::size_t RealSet::point_count() const { return pieces_.size(); }

bool RealSet::contains(const Rational& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(),
                     [&](const RealInterval& iv) { return iv.contains(x); });
}

RealSet RealSet::complement() const {
  std::vector<RealInterval> gaps;
  RealBound start = RealBound::neg_infinity();
  bool open_start = true;  // gap begins at -inf
  for (const auto& iv : pieces_) {
    if (iv.lower.kind != Kind::NegInfinity) {
      RealBound end = iv.lower;
      end.closed = !end.closed;
      gaps.push_back(RealInterval{start, end});
    }
    if (iv.upper.kind == Kind::PosInfinity) {
      open_start = false;
      break;
    }
    start = iv.upper;
    start.closed = !start.closed;
  }
  if (open_start) gaps.push_back(RealInterval{start, RealBound::pos_infinity()});
  return from_pieces(std::move(gaps));
}

RealSet unite(const RealSet& a, const RealSet& b) {
  std::vector<RealInterval> all = a.pieces_;
  all.insert(all.end(), b.pieces_.begin(), b.pieces_.end());
  return RealSet::from_pieces(std::move(all));
}

RealSet intersect(const RealSet& a, const RealSet& b) {
  std::vector<RealInterval> out;
  for (const auto& x : a.pieces_) {
    for (const auto& y : b.pieces_) {
      RealInterval iv{lower_before(x.lower, y.lower) ? y.lower : x.lower,
                      upper_before(x.upper, y.upper) ? x.upper : y.upper};
      out.push_back(std::move(iv));
    }
  }
  return RealSet::from_pieces(std::move(out));
}

RealSet subtract(const RealSet& a, const RealSet& b) { return intersect(a, b.complement()); }

bool RealSet::subset_of(const RealSet& other) const { return subtract(*this, other).is_empty(); }

std::optional<Rational> RealSet::chain_point(std::size_t i) const {
  const auto it = std::find_if(pieces_.begin(), pieces_.end(),
                               [](const RealInterval& iv) { return !iv.is_point(); });
  if (it == pieces_.end()) return std::nullopt;
  const Rational k(static_cast<long long>(i));
  const bool lo_finite = it->lower.is_finite();
  const bool hi_finite = it->upper.is_finite();
  if (lo_finite && hi_finite) {
    return it->lower.value + (it->upper.value - it->lower.value) / (k + 2);
  }
  if (lo_finite) return it->lower.value + k + 1;
  if (hi_finite) return it->upper.value - k - 1;
  return k;
}

std::string RealSet::describe() const {
  if (pieces_.empty()) return "∅";
  std::string out;
  for (const auto& iv : pieces_) {
    if (!out.empty()) out += " ∪ ";
    if (iv.is_point()) {
      out += "{" + to_string(iv.lower.value) + "}";
      continue;
    }
    out += iv.lower.closed ? "[" : "(";
    out += bound_text(iv.lower) + "," + bound_text(iv.upper);
    out += iv.upper.closed ? "]" : ")";
  }
  return out;
}

}  // namespace cardlab
