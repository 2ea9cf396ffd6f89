#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "cardlab/numeric.hpp"
#include "cardlab/set_expr.hpp"
#include "cardlab/sets.hpp"

namespace cardlab {

enum class Principle { Cp, Pwp, Peano, Bup, Bettazzi };

inline constexpr std::array<Principle, 5> kAllPrinciples = {
    Principle::Cp, Principle::Pwp, Principle::Peano, Principle::Bup, Principle::Bettazzi};

/// `cp`, `pwp`, `peano`, `bup`, `bettazzi`.
const char* to_string(Principle p) noexcept;
std::optional<Principle> principle_from_string(std::string_view name);

/// Holds and Refuted are only produced by the Bettazzi check.
enum class VerdictKind { Equal, FirstSmaller, FirstGreater, NoVerdict, Unknown, Holds, Refuted };

const char* to_string(VerdictKind kind) noexcept;

/// (a_i, b_i) pairs of an order isomorphism or injection.
struct BijectionPrefix {
  std::vector<std::pair<Element, Element>> pairs;
};

/// An element of the larger set that the smaller one lacks.
struct MissedElement {
  Rational element;
};

/// Injective map that is not surjective: a_i -> b_{i+1}, missing b_0.
struct InjectionWitness {
  std::string formula;
  Element missed = 0;
  std::vector<std::pair<Element, Element>> prefix;
};

/// Finite smaller-than certificate: an injection f and a point b outside
/// its range; no function can have a strictly larger range.
struct FunctionTable {
  std::vector<std::pair<Rational, Rational>> f;
  Rational missed;
};

/// Infinite case: for an f : A -> B missing b, and a chain a_0, a_1, ... in
/// A, g(a_0) = b and g(a_{i+1}) = f(a_i) (g = f off the chain) has
/// ran(g) = ran(f) ∪ {b}, so A is not smaller than B.
struct HilbertHotelWitness {
  std::vector<Rational> chain;
  std::vector<std::pair<Rational, Rational>> f;
  Rational missed;
  std::vector<std::pair<Rational, Rational>> g;
};

using Witness = std::variant<std::monostate, BijectionPrefix, MissedElement, InjectionWitness,
                             FunctionTable, HilbertHotelWitness>;

struct Verdict {
  VerdictKind kind = VerdictKind::Unknown;
  Witness witness;

  bool is_strict() const noexcept {
    return kind == VerdictKind::FirstSmaller || kind == VerdictKind::FirstGreater;
  }
};

struct PrincipleOptions {
  /// Length of bijection/chain prefixes put into witnesses.
  std::size_t witness_length = 4;
};

/// Cantor: compare by bijection, i.e. by size class.
Verdict cp_verdict(const SetExpr& a, const SetExpr& b, PrincipleOptions options = {});
/// Part-whole: a proper part is smaller.
Verdict pwp_verdict(const SetExpr& a, const SetExpr& b, PrincipleOptions options = {});
/// Peano: both infinite, or finite and equinumerous.
Verdict peano_principle_verdict(const SetExpr& a, const SetExpr& b,
                                PrincipleOptions options = {});
/// Buzaglo, existential reading: A < B iff A is finite and |A| < |B|.
Verdict bup_verdict(const SetExpr& a, const SetExpr& b, PrincipleOptions options = {});
/// Bettazzi: with a bijection present, every injection must be onto.
Verdict bettazzi_check(const SetExpr& a, const SetExpr& b, PrincipleOptions options = {});

Verdict evaluate(Principle p, const SetExpr& a, const SetExpr& b, PrincipleOptions options = {});

/// Brute-force smaller-than on explicit sets of at most 5 elements: tries
/// every f : A -> B, every b outside ran(f) and every g : A -> B.
/// Throws Error(SizeLimit) above 5 elements.
Verdict bup_bruteforce_oracle(const std::vector<Element>& a, const std::vector<Element>& b);

struct ConflictReport {
  SetExpr first;
  SetExpr second;
  std::vector<std::pair<Principle, Verdict>> verdicts;
  bool conflict = false;
  std::optional<std::string> tag;
  std::optional<Rational> density_first;
  std::optional<Rational> density_second;

  const Verdict* find(Principle p) const;
};

/// Whether two verdicts disagree: Equal against strict, or opposite strict.
bool contradicts(const Verdict& x, const Verdict& y) noexcept;

ConflictReport galileo_report(const SetExpr& a, const SetExpr& b,
                              const std::vector<Principle>& principles = {kAllPrinciples.begin(),
                                                                          kAllPrinciples.end()},
                              PrincipleOptions options = {});

}  // namespace cardlab
