#include "cardlab/principles.hpp"

#include <algorithm>

#include "cardlab/error.hpp"
#include "cardlab/peano_num.hpp"

namespace cardlab {
namespace {

// Members of B scanned when looking for an element outside A.
constexpr int kMissedSearch = 100'000;

// Total order on size classes; Empty counts as 0 elements.
int size_rank(const SizeClass& s) {
  switch (s.kind) {
    case SizeClass::Kind::Empty:
    case SizeClass::Kind::Finite: return 0;
    case SizeClass::Kind::CountablyInfinite: return 1;
    case SizeClass::Kind::ContinuumSized: return 2;
  }
  return 0;
}

VerdictKind compare_sizes(const SizeClass& a, const SizeClass& b) {
  const int ra = size_rank(a);
  const int rb = size_rank(b);
  if (ra != rb) return ra < rb ? VerdictKind::FirstSmaller : VerdictKind::FirstGreater;
  if (ra == 0 && a.count != b.count) {
    return a.count < b.count ? VerdictKind::FirstSmaller : VerdictKind::FirstGreater;
  }
  return VerdictKind::Equal;
}

VerdictKind flip(VerdictKind k) {
  if (k == VerdictKind::FirstSmaller) return VerdictKind::FirstGreater;
  if (k == VerdictKind::FirstGreater) return VerdictKind::FirstSmaller;
  return k;
}

// First k points of a set: its smallest members for naturals, a designated
// chain (or the isolated points) for reals.
std::vector<Rational> sample_points(const SetExpr& s, std::size_t k) {
  std::vector<Rational> out;
  if (s.sort() == Sort::Naturals) {
    SetCursor cursor(s);
    while (out.size() < k) {
      auto x = cursor.next();
      if (!x) break;
      out.emplace_back(*x);
    }
    return out;
  }
  const RealSet r = real_value(s);
  if (r.is_finite()) {
    for (const auto& piece : r.pieces()) {
      if (out.size() == k) break;
      out.push_back(piece.lower.value);
    }
    return out;
  }
  for (std::size_t i = 0; i < k; ++i) out.push_back(*r.chain_point(i));
  return out;
}

// Some member of b outside a, if one turns up.
std::optional<Rational> element_outside(const SetExpr& b, const SetExpr& a) {
  auto member_of_a = [&](const Rational& x) {
    if (a.sort() == Sort::Reals) return real_value(a).contains(x);
    return denominator(x) == 1 && x >= 0 && contains(a, static_cast<Element>(numerator(x)));
  };
  if (b.sort() == Sort::Naturals) {
    SetCursor cursor(b);
    for (int i = 0; i < kMissedSearch; ++i) {
      auto x = cursor.next();
      if (!x) break;
      if (!member_of_a(Rational(*x))) return Rational(*x);
    }
    return std::nullopt;
  }
  RealSet rest = real_value(b);
  if (a.sort() == Sort::Reals) {
    rest = subtract(rest, real_value(a));
  }
  for (const auto& piece : rest.pieces()) {
    if (piece.is_point()) {
      if (!member_of_a(piece.lower.value)) return piece.lower.value;
      continue;
    }
    // A non-degenerate piece holds non-integers, which no naturals-sort set has.
    const RealSet single = RealSet::from_pieces({piece});
    for (std::size_t i = 0; i < 4; ++i) {
      const Rational x = *single.chain_point(i);
      if (!member_of_a(x)) return x;
    }
  }
  return std::nullopt;
}

std::string successor_formula(const SetExpr& a, const SetExpr& b) {
  if (a == b) return ShiftMap(b).formula();
  if (a.kind() == SetExpr::Kind::Naturals) {
    if (b.kind() == SetExpr::Kind::Naturals) return "n ↦ n+1";
    if (b.kind() == SetExpr::Kind::Poly) {
      const auto& c = b.polynomial().coefficients();
      const bool pure = std::all_of(c.begin(), c.end() - 1, [](Element x) { return x == 0; }) &&
                        c.back() == 1;
      if (pure) return "n ↦ (n+1)^" + std::to_string(c.size() - 1);
    }
  }
  return "a_i ↦ b_{i+1}";
}

}  // namespace

const char* to_string(Principle p) noexcept {
  switch (p) {
    case Principle::Cp: return "cp";
    case Principle::Pwp: return "pwp";
    case Principle::Peano: return "peano";
    case Principle::Bup: return "bup";
    case Principle::Bettazzi: return "bettazzi";
  }
  return "?";
}

std::optional<Principle> principle_from_string(std::string_view name) {
  for (Principle p : kAllPrinciples) {
    if (name == to_string(p)) return p;
  }
  return std::nullopt;
}

const char* to_string(VerdictKind kind) noexcept {
  switch (kind) {
    case VerdictKind::Equal: return "Equal";
    case VerdictKind::FirstSmaller: return "FirstSmaller";
    case VerdictKind::FirstGreater: return "FirstGreater";
    case VerdictKind::NoVerdict: return "NoVerdict";
    case VerdictKind::Unknown: return "Unknown";
    case VerdictKind::Holds: return "Holds";
    case VerdictKind::Refuted: return "Refuted";
  }
  return "?";
}

Verdict cp_verdict(const SetExpr& a, const SetExpr& b, PrincipleOptions options) {
  const SizeClass sa = classify_size(a);
  const SizeClass sb = classify_size(b);
  Verdict v{compare_sizes(sa, sb), {}};
  if (a.sort() != Sort::Naturals || b.sort() != Sort::Naturals) return v;
  // Order-isomorphism prefix: a bijection when sizes agree, else an injection
  // of the smaller set into the larger.
  std::size_t k = options.witness_length;
  if (sa.is_finite()) k = std::min(k, sa.count);
  if (sb.is_finite()) k = std::min(k, sb.count);
  if (k == 0) return v;
  const auto left = enumerate(a, k);
  const auto right = enumerate(b, k);
  BijectionPrefix prefix;
  for (std::size_t i = 0; i < k; ++i) prefix.pairs.emplace_back(left[i], right[i]);
  v.witness = std::move(prefix);
  return v;
}

Verdict pwp_verdict(const SetExpr& a, const SetExpr& b, PrincipleOptions) {
  const Truth ab = is_subset(a, b);
  const Truth ba = is_subset(b, a);
  if (ab == Truth::Unknown || ba == Truth::Unknown) return {VerdictKind::Unknown, {}};
  if (ab == Truth::True && ba == Truth::True) return {VerdictKind::Equal, {}};
  if (ab == Truth::False && ba == Truth::False) return {VerdictKind::NoVerdict, {}};
  Verdict v{ab == Truth::True ? VerdictKind::FirstSmaller : VerdictKind::FirstGreater, {}};
  const auto missed = ab == Truth::True ? element_outside(b, a) : element_outside(a, b);
  if (missed) v.witness = MissedElement{*missed};
  return v;
}

Verdict peano_principle_verdict(const SetExpr& a, const SetExpr& b, PrincipleOptions) {
  switch (num_cmp(num_of_class(a), num_of_class(b))) {
    case NumOrder::Less: return {VerdictKind::FirstSmaller, {}};
    case NumOrder::Equal: return {VerdictKind::Equal, {}};
    case NumOrder::Greater: return {VerdictKind::FirstGreater, {}};
  }
  return {};
}

Verdict bup_verdict(const SetExpr& a, const SetExpr& b, PrincipleOptions options) {
  const SizeClass sa = classify_size(a);
  const SizeClass sb = classify_size(b);
  if (sa.is_infinite() && sb.is_infinite()) {
    const std::size_t k = options.witness_length;
    const auto chain = sample_points(a, k);
    const auto targets = sample_points(b, k + 1);
    HilbertHotelWitness w;
    w.chain = chain;
    w.missed = targets[0];
    for (std::size_t i = 0; i < k; ++i) {
      w.f.emplace_back(chain[i], targets[i + 1]);
      w.g.emplace_back(chain[i], targets[i]);
    }
    return {VerdictKind::Equal, std::move(w)};
  }
  // At least one side is finite; the finite side with fewer elements is smaller.
  const bool a_smaller = sa.is_finite() && (sb.is_infinite() || sa.count < sb.count);
  const bool b_smaller = sb.is_finite() && (sa.is_infinite() || sb.count < sa.count);
  if (!a_smaller && !b_smaller) return {VerdictKind::Equal, {}};
  const SetExpr& small = a_smaller ? a : b;
  const SetExpr& large = a_smaller ? b : a;
  const std::size_t n = a_smaller ? sa.count : sb.count;
  const auto from = sample_points(small, n);
  const auto to = sample_points(large, n + 1);
  FunctionTable table;
  for (std::size_t i = 0; i < n; ++i) table.f.emplace_back(from[i], to[i]);
  table.missed = to[n];
  return {a_smaller ? VerdictKind::FirstSmaller : VerdictKind::FirstGreater, std::move(table)};
}

Verdict bettazzi_check(const SetExpr& a, const SetExpr& b, PrincipleOptions options) {
  const SizeClass sa = classify_size(a);
  const SizeClass sb = classify_size(b);
  // Without a bijection the principle says nothing, so it holds vacuously.
  if (compare_sizes(sa, sb) != VerdictKind::Equal) return {VerdictKind::Holds, {}};
  if (sa.is_finite()) return {VerdictKind::Holds, {}};  // pigeonhole
  if (a.sort() != Sort::Naturals || b.sort() != Sort::Naturals) {
    return {VerdictKind::Unknown, {}};
  }
  const std::size_t k = options.witness_length;
  SetCursor left(a);
  SetCursor right(b);
  InjectionWitness w;
  w.formula = successor_formula(a, b);
  w.missed = *right.next();
  for (std::size_t i = 0; i < k; ++i) {
    const Element x = *left.next();
    w.prefix.emplace_back(x, *right.next());
  }
  return {VerdictKind::Refuted, std::move(w)};
}

Verdict evaluate(Principle p, const SetExpr& a, const SetExpr& b, PrincipleOptions options) {
  switch (p) {
    case Principle::Cp: return cp_verdict(a, b, options);
    case Principle::Pwp: return pwp_verdict(a, b, options);
    case Principle::Peano: return peano_principle_verdict(a, b, options);
    case Principle::Bup: return bup_verdict(a, b, options);
    case Principle::Bettazzi: return bettazzi_check(a, b, options);
  }
  return {};
}

const Verdict* ConflictReport::find(Principle p) const {
  for (const auto& [q, v] : verdicts) {
    if (q == p) return &v;
  }
  return nullptr;
}

bool contradicts(const Verdict& x, const Verdict& y) noexcept {
  const auto eq = VerdictKind::Equal;
  if (x.kind == eq) return y.is_strict();
  if (y.kind == eq) return x.is_strict();
  return x.is_strict() && y.is_strict() && x.kind == flip(y.kind);
}

ConflictReport galileo_report(const SetExpr& a, const SetExpr& b,
                              const std::vector<Principle>& principles,
                              PrincipleOptions options) {
  ConflictReport report{a, b, {}, false, std::nullopt, std::nullopt, std::nullopt};
  for (Principle p : kAllPrinciples) {
    if (std::find(principles.begin(), principles.end(), p) == principles.end()) continue;
    report.verdicts.emplace_back(p, evaluate(p, a, b, options));
  }
  // Bettazzi answers a different question (Holds/Refuted), so only the four
  // size comparisons can contradict each other.
  std::vector<const Verdict*> sizes;
  for (const auto& [p, v] : report.verdicts) {
    if (p != Principle::Bettazzi) sizes.push_back(&v);
  }
  for (std::size_t i = 0; i < sizes.size() && !report.conflict; ++i) {
    for (std::size_t j = i + 1; j < sizes.size(); ++j) {
      if (contradicts(*sizes[i], *sizes[j])) {
        report.conflict = true;
        break;
      }
    }
  }
  const Verdict* cp = report.find(Principle::Cp);
  const Verdict* pwp = report.find(Principle::Pwp);
  const Verdict* peano = report.find(Principle::Peano);
  if (cp && pwp && cp->kind == VerdictKind::Equal && pwp->is_strict()) {
    report.tag = "Galileo";
  } else if (cp && peano && cp->is_strict() && peano->kind == VerdictKind::Equal) {
    report.tag = "Formulaire";
  }
  if (a.sort() == Sort::Naturals) report.density_first = natural_density(a);
  if (b.sort() == Sort::Naturals) report.density_second = natural_density(b);
  return report;
}

}  // namespace cardlab
