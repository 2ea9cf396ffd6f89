#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cardlab/numeric.hpp"

namespace cardlab {

/// Eventually periodic subset of the naturals in canonical form.
///
/// Below `threshold` membership is listed explicitly; from `threshold` on,
/// n is a member iff (n mod period) is a residue. Canonical means the period
/// is minimal and, for that period, so is the threshold, which makes
/// structural equality coincide with set equality.
class CanonicalPeriodicSet {
 public:
  /// Largest threshold or period the normaliser will build.
  static constexpr Element kMaxThreshold = Element(1) << 24;
  static constexpr Element kMaxPeriod = Element(1) << 24;

  CanonicalPeriodicSet();  // empty set

  static CanonicalPeriodicSet empty() { return {}; }
  static CanonicalPeriodicSet naturals();
  /// {step*n + offset : n >= 0}
  static CanonicalPeriodicSet progression(Element step, Element offset);
  static CanonicalPeriodicSet finite(const std::vector<Element>& elements);
  /// Canonicalises an arbitrary (threshold, prefix, period, residues) description.
  static CanonicalPeriodicSet from_parts(std::vector<bool> prefix, Element period,
                                         std::vector<bool> residues);

  Element threshold() const noexcept { return static_cast<Element>(prefix_.size()); }
  Element period() const noexcept { return static_cast<Element>(residues_.size()); }
  /// Members below the threshold.
  std::vector<Element> exceptional() const;
  /// Residues r in [0, period) whose class is contained from the threshold on.
  std::vector<Element> residues() const;

  bool contains(Element n) const;
  /// Whether residue class r (mod period) is contained from the threshold on.
  bool residue_member(Element r) const { return residues_[r]; }
  bool is_empty() const;
  bool is_finite() const;
  /// Number of members; only meaningful when is_finite().
  std::size_t count() const;
  /// |residues| / period.
  Rational density() const;
  /// Smallest member >= n, if any.
  std::optional<Element> next_at_least(Element n) const;
  /// All members, in increasing order; requires is_finite().
  std::vector<Element> members() const;

  CanonicalPeriodicSet complement() const;
  bool subset_of(const CanonicalPeriodicSet& other) const;

  friend CanonicalPeriodicSet unite(const CanonicalPeriodicSet& a, const CanonicalPeriodicSet& b);
  friend CanonicalPeriodicSet intersect(const CanonicalPeriodicSet& a,
                                        const CanonicalPeriodicSet& b);
  friend CanonicalPeriodicSet subtract(const CanonicalPeriodicSet& a,
                                       const CanonicalPeriodicSet& b);

  /// `threshold=2 exceptional={0} period=3 residues={1,2}`
  std::string describe() const;

  friend bool operator==(const CanonicalPeriodicSet&, const CanonicalPeriodicSet&) = default;

 private:
  CanonicalPeriodicSet(std::vector<bool> prefix, std::vector<bool> residues)
      : prefix_(std::move(prefix)), residues_(std::move(residues)) {}

  void canonicalize();

  std::vector<bool> prefix_;    // membership of n < threshold
  std::vector<bool> residues_;  // size == period
};

}  // namespace cardlab
