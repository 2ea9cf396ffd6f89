#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cardlab/numeric.hpp"

namespace cardlab {

/// One end of an interval of reals. Infinite ends are always open.
struct RealBound {
  enum class Kind { NegInfinity, Finite, PosInfinity };
  Kind kind = Kind::Finite;
  Rational value = 0;
  bool closed = false;

  static RealBound neg_infinity() { return {Kind::NegInfinity, 0, false}; }
  static RealBound pos_infinity() { return {Kind::PosInfinity, 0, false}; }
  static RealBound at(Rational v, bool closed) { return {Kind::Finite, std::move(v), closed}; }

  bool is_finite() const noexcept { return kind == Kind::Finite; }
  friend bool operator==(const RealBound&, const RealBound&) = default;
};

struct RealInterval {
  RealBound lower;
  RealBound upper;

  bool is_point() const;
  bool contains(const Rational& x) const;
  friend bool operator==(const RealInterval&, const RealInterval&) = default;
};

/// Finite union of intervals of reals with rational endpoints, kept as a
/// sorted list of disjoint, non-touching pieces. This is the exact value of
/// every continuum-sort set expression.
class RealSet {
 public:
  RealSet() = default;  // empty

  static RealSet reals();
  /// (0, +inf)
  static RealSet positive_reals();
  /// Open interval (lo, hi); requires lo < hi.
  static RealSet open_interval(Rational lo, Rational hi);
  static RealSet from_pieces(std::vector<RealInterval> pieces);

  const std::vector<RealInterval>& pieces() const noexcept { return pieces_; }

  bool is_empty() const noexcept { return pieces_.empty(); }
  /// Only isolated points.
  bool is_finite() const;
  std::size_t point_count() const;
  bool contains(const Rational& x) const;

  RealSet complement() const;
  friend RealSet unite(const RealSet& a, const RealSet& b);
  friend RealSet intersect(const RealSet& a, const RealSet& b);
  friend RealSet subtract(const RealSet& a, const RealSet& b);
  bool subset_of(const RealSet& other) const;

  /// i-th point of a designated countable sequence of distinct points inside
  /// the first non-degenerate piece; nullopt when the set is finite.
  std::optional<Rational> chain_point(std::size_t i) const;

  /// `(0,1) ∪ [2,+inf)`, or `∅`.
  std::string describe() const;

  friend bool operator==(const RealSet&, const RealSet&) = default;

 private:
  void normalize();

  std::vector<RealInterval> pieces_;
};

}  // namespace cardlab
