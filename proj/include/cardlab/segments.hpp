#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "cardlab/ordinal.hpp"

namespace cardlab {

/// How multiples of infinite order compare.
///   PeanoCollapse - every infinite multiple is the same segment
///   OrdinalScaled - infinite multiples compare as their ordinals
enum class Semantics { PeanoCollapse, OrdinalScaled };

/// `peano` / `ordinal`.
const char* to_string(Semantics s) noexcept;

/// k·u for a positive ordinal k: finite n·u, or a multiple of infinite order.
class SegmentLength {
 public:
  static SegmentLength unit(std::string name = "u");
  /// Throws Error(UndefinedInput) for n == 0.
  static SegmentLength fin(Natural n, std::string name = "u");
  /// Throws Error(UndefinedInput) unless o is infinite.
  static SegmentLength inf(Ordinal o, std::string name = "u");

  const std::string& unit_name() const noexcept { return unit_; }
  const Ordinal& multiplier() const noexcept { return multiplier_; }
  bool is_infinite() const { return multiplier_.is_infinite(); }

  /// Peano notation (`3u`, `∞u`, `2∞u`, `∞²u`) for PeanoCollapse, ordinal
  /// notation (`ωu`, `(ω+1)u`) for OrdinalScaled.
  std::string to_string(Semantics notation = Semantics::PeanoCollapse) const;

  friend bool operator==(const SegmentLength&, const SegmentLength&) = default;

 private:
  SegmentLength(std::string unit, Ordinal multiplier)
      : unit_(std::move(unit)), multiplier_(std::move(multiplier)) {}

  std::string unit_;
  Ordinal multiplier_;
};

enum class SegOrder { Less, Equal, Greater };

const char* to_string(SegOrder o) noexcept;

/// k·u; `unit_length` must be the base unit 1·u.
SegmentLength seg_multiple(const Ordinal& k, const SegmentLength& unit_length);
/// Throws Error(UnitMismatch) when the units differ.
SegOrder seg_cmp(const SegmentLength& a, const SegmentLength& b, Semantics sem);

enum class Rule { InfDef, SupremumCollapse, OrdinalStrict, ArchimedeanRequirement, Conclusion };
enum class TraceStatus { Contradiction, Consistent };

const char* to_string(Rule r) noexcept;
const char* to_string(TraceStatus s) noexcept;

struct TraceStep {
  std::string claim;
  Rule rule;
  Semantics semantics;
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ProofTrace {
  std::string unit;
  std::string bound;
  Semantics semantics = Semantics::PeanoCollapse;
  std::vector<TraceStep> steps;
  TraceStatus status = TraceStatus::Consistent;
  std::string commentary;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
  friend bool operator==(const ProofTrace&, const ProofTrace&) = default;
};

/// Runs the argument "if every multiple of u is below v, then ∞u is too"
/// under the given semantics. Every claim is computed with seg_cmp.
ProofTrace infinitesimal_refutation(const std::string& unit, const std::string& bound,
                                    Semantics sem);
/// Re-runs the rules recorded in a trace.
ProofTrace replay(const ProofTrace& trace);
/// True when replaying reproduces the trace text byte for byte.
bool replay_matches(const ProofTrace& trace);

}  // namespace cardlab
