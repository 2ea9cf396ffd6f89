#include "cardlab/segments.hpp"

#include <sstream>

#include "cardlab/error.hpp"

namespace cardlab {
namespace {

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (std::size_t pos = s.find(from); pos != std::string::npos;
       pos = s.find(from, pos + to.size())) {
    s.replace(pos, from.size(), to);
  }
  return s;
}

std::string peano_symbol(const Ordinal& o) { return replace_all(o.pretty(), "ω", "∞"); }

const char* relation(SegOrder o) {
  switch (o) {
    case SegOrder::Less: return " < ";
    case SegOrder::Equal: return " = ";
    case SegOrder::Greater: return " > ";
  }
  return " ? ";
}

// `x R y R z` with each relation computed by seg_cmp.
std::string chain_claim(const std::vector<SegmentLength>& lengths, Semantics sem) {
  std::string out = lengths.front().to_string(sem);
  for (std::size_t i = 1; i < lengths.size(); ++i) {
    out += relation(seg_cmp(lengths[i - 1], lengths[i], sem));
    out += lengths[i].to_string(sem);
  }
  return out;
}

}  // namespace

const char* to_string(Semantics s) noexcept {
  return s == Semantics::PeanoCollapse ? "peano" : "ordinal";
}

const char* to_string(SegOrder o) noexcept {
  switch (o) {
    case SegOrder::Less: return "Less";
    case SegOrder::Equal: return "Equal";
    case SegOrder::Greater: return "Greater";
  }
  return "?";
}

const char* to_string(Rule r) noexcept {
  switch (r) {
    case Rule::InfDef: return "InfDef";
    case Rule::SupremumCollapse: return "SupremumCollapse";
    case Rule::OrdinalStrict: return "OrdinalStrict";
    case Rule::ArchimedeanRequirement: return "ArchimedeanRequirement";
    case Rule::Conclusion: return "Conclusion";
  }
  return "?";
}

const char* to_string(TraceStatus s) noexcept {
  return s == TraceStatus::Contradiction ? "Contradiction" : "Consistent";
}

SegmentLength SegmentLength::unit(std::string name) { return fin(1, std::move(name)); }

SegmentLength SegmentLength::fin(Natural n, std::string name) {
  if (n < 1) {
    throw Error(ErrorKind::UndefinedInput, "segments", "a finite multiple needs n >= 1",
                cardlab::to_string(n));
  }
  return SegmentLength(std::move(name), Ordinal::finite(std::move(n)));
}

SegmentLength SegmentLength::inf(Ordinal o, std::string name) {
  if (!o.is_infinite()) {
    throw Error(ErrorKind::UndefinedInput, "segments",
                "a multiple of infinite order needs an infinite ordinal", o.to_string());
  }
  return SegmentLength(std::move(name), std::move(o));
}

std::string SegmentLength::to_string(Semantics notation) const {
  if (!is_infinite()) {
    const Natural n = *multiplier_.finite_value();
    return n == 1 ? unit_ : cardlab::to_string(n) + unit_;
  }
  if (notation == Semantics::OrdinalScaled) {
    if (multiplier_ == Ordinal::omega()) return "ω" + unit_;
    return "(" + multiplier_.pretty() + ")" + unit_;
  }
  const auto& terms = multiplier_.terms();
  if (terms.size() == 1) {
    const std::string power = peano_symbol(Ordinal::omega_power(terms[0].exponent));
    const Natural& c = terms[0].coefficient;
    return (c == 1 ? "" : cardlab::to_string(c)) + power + unit_;
  }
  return "(" + peano_symbol(multiplier_) + ")" + unit_;
}

SegmentLength seg_multiple(const Ordinal& k, const SegmentLength& unit_length) {
  if (unit_length.multiplier() != Ordinal::finite(1)) {
    throw Error(ErrorKind::UndefinedInput, "segments", "multiples are taken of the base unit",
                unit_length.to_string());
  }
  if (k.is_infinite()) return SegmentLength::inf(k, unit_length.unit_name());
  return SegmentLength::fin(*k.finite_value(), unit_length.unit_name());
}

SegOrder seg_cmp(const SegmentLength& a, const SegmentLength& b, Semantics sem) {
  if (a.unit_name() != b.unit_name()) {
    throw Error(ErrorKind::UnitMismatch, "segments", "lengths use different units",
                a.to_string() + " , " + b.to_string());
  }
  if (a.is_infinite() && b.is_infinite() && sem == Semantics::PeanoCollapse) {
    return SegOrder::Equal;
  }
  // Finite against infinite and OrdinalScaled both follow the ordinal order.
  const auto c = ord_cmp(a.multiplier(), b.multiplier());
  if (c < 0) return SegOrder::Less;
  if (c > 0) return SegOrder::Greater;
  return SegOrder::Equal;
}

ProofTrace infinitesimal_refutation(const std::string& unit, const std::string& bound,
                                    Semantics sem) {
  const SegmentLength u = SegmentLength::unit(unit);
  const Ordinal w = Ordinal::omega();
  const SegmentLength inf_u = seg_multiple(w, u);
  const SegmentLength two_inf_u = seg_multiple(ord_mul(w, Ordinal::finite(2)), u);
  const SegmentLength inf_sq_u = seg_multiple(ord_pow(w, Ordinal::finite(2)), u);
  const SegmentLength succ_u = seg_multiple(ord_add(w, Ordinal::finite(1)), u);

  ProofTrace trace;
  trace.unit = unit;
  trace.bound = bound;
  trace.semantics = sem;
  trace.commentary =
      "Infinite multiples are read as one maximal infinity (collapse) or as ordinal "
      "multiples; the kappa-absorption reading of the same equalities is not used.";

  // Every finite multiple is below every multiple of infinite order.
  std::string below = seg_multiple(Ordinal::finite(1), u).to_string(sem);
  for (int n : {2, 3}) {
    below += relation(seg_cmp(seg_multiple(Ordinal::finite(n - 1), u),
                              seg_multiple(Ordinal::finite(n), u), sem));
    below += seg_multiple(Ordinal::finite(n), u).to_string(sem);
  }
  below += " < ..." + std::string(relation(seg_cmp(seg_multiple(Ordinal::finite(3), u), inf_u, sem)));
  below += inf_u.to_string(sem);
  trace.steps.push_back(
      {"n·" + unit + " < " + bound + " for every n, so " + inf_u.to_string(sem) + " = ⋃ℕ" + unit +
           " lies within " + bound + "; " + below,
       Rule::InfDef, sem});

  const std::string chain = chain_claim({inf_u, two_inf_u, inf_sq_u}, sem);
  const SegOrder doubled = seg_cmp(two_inf_u, inf_u, sem);
  if (sem == Semantics::PeanoCollapse) {
    trace.steps.push_back({chain, Rule::SupremumCollapse, sem});
  } else {
    trace.steps.push_back(
        {chain + "; " + chain_claim({succ_u, inf_u}, sem), Rule::OrdinalStrict, sem});
  }

  const bool grows = doubled == SegOrder::Greater;
  trace.steps.push_back({"a segment x > 0 must satisfy 2x > x; " + two_inf_u.to_string(sem) +
                             relation(doubled) + inf_u.to_string(sem) +
                             (grows ? " (satisfied)" : " (violated)"),
                         Rule::ArchimedeanRequirement, sem});

  trace.status = grows ? TraceStatus::Consistent : TraceStatus::Contradiction;
  trace.steps.push_back(
      {grows ? "Consistent: infinite multiples grow strictly, so the argument does not go "
               "through and " + unit + " may be infinitesimal with respect to " + bound
             : "Contradiction: no segment " + unit + " is infinitesimal with respect to " +
                   bound,
       Rule::Conclusion, sem});
  return trace;
}

ProofTrace replay(const ProofTrace& trace) {
  return infinitesimal_refutation(trace.unit, trace.bound, trace.semantics);
}

bool replay_matches(const ProofTrace& trace) {
  return replay(trace).to_text() == trace.to_text();
}

std::string ProofTrace::to_text() const {
  std::ostringstream out;
  out << "semantics: " << to_string(semantics) << "\n";
  out << "hypothesis: n·" << unit << " < " << bound << " for every natural n\n";
  for (std::size_t i = 0; i < steps.size(); ++i) {
    out << i + 1 << ". [" << to_string(steps[i].rule) << "] " << steps[i].claim << "\n";
  }
  out << "status: " << to_string(status) << "\n";
  out << "note: " << commentary << "\n";
  return out.str();
}

nlohmann::ordered_json ProofTrace::to_json() const {
  nlohmann::ordered_json out;
  out["unit"] = unit;
  out["bound"] = bound;
  out["semantics"] = to_string(semantics);
  out["steps"] = nlohmann::ordered_json::array();
  for (const auto& step : steps) {
    out["steps"].push_back({{"claim", step.claim},
                            {"rule", to_string(step.rule)},
                            {"semantics", to_string(step.semantics)}});
  }
  out["status"] = to_string(status);
  out["commentary"] = commentary;
  return out;
}

}  // namespace cardlab
