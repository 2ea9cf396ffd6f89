#pragma once

#include <string>

#include "cardlab/numeric.hpp"
#include "cardlab/set_expr.hpp"

namespace cardlab {

struct SizeClass;

/// Peano's `num` values: 0, a positive natural, or the single infinity.
class NumValue {
 public:
  enum class Kind { Zero, Fin, Inf };

  static NumValue zero() { return NumValue(Kind::Zero, 0); }
  /// Fin(n) for n >= 1; n == 0 gives zero(), since Fin(0) is not a value.
  static NumValue fin(Natural n);
  static NumValue inf() { return NumValue(Kind::Inf, 0); }

  Kind kind() const noexcept { return kind_; }
  bool is_infinite() const noexcept { return kind_ == Kind::Inf; }
  /// The count for Zero and Fin.
  const Natural& count() const noexcept { return count_; }

  /// `0`, `n`, `inf`.
  std::string to_string() const;

  friend bool operator==(const NumValue&, const NumValue&) = default;

 private:
  NumValue(Kind kind, Natural count) : kind_(kind), count_(std::move(count)) {}

  Kind kind_;
  Natural count_;
};

enum class NumOrder { Less, Equal, Greater };

const char* to_string(NumOrder order) noexcept;

/// x + inf = inf + x = inf + inf = inf.
NumValue num_add(const NumValue& a, const NumValue& b);
/// 0 < n < inf.
NumOrder num_cmp(const NumValue& a, const NumValue& b);

NumValue num_of_size(const SizeClass& size);
NumValue num_of_class(const SetExpr& s);
/// num(A ∪ B) for disjoint A, B. Throws Error(NotDisjoint) when they
/// provably meet and Error(UnknownResult) when disjointness is undecided.
NumValue num_disjoint_union(const SetExpr& a, const SetExpr& b);

}  // namespace cardlab
