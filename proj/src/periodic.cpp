#include "cardlab/periodic.hpp"

#include <algorithm>
#include <numeric>

#include "cardlab/error.hpp"

namespace cardlab {
namespace {

void check_limits(Element threshold, Element period) {
  if (threshold > CanonicalPeriodicSet::kMaxThreshold) {
    throw Error(ErrorKind::ResourceLimit, "sets",
                "threshold " + std::to_string(threshold) + " exceeds the normaliser limit");
  }
  if (period > CanonicalPeriodicSet::kMaxPeriod) {
    throw Error(ErrorKind::ResourceLimit, "sets",
                "period " + std::to_string(period) + " exceeds the normaliser limit");
  }
}

template <typename Op>
CanonicalPeriodicSet combine(const CanonicalPeriodicSet& a, const CanonicalPeriodicSet& b, Op op) {
  const Element threshold = std::max(a.threshold(), b.threshold());
  const Element pa = a.period();
  const Element pb = b.period();
  const Element period = pa / std::gcd(pa, pb) * pb;
  check_limits(threshold, period);
  std::vector<bool> prefix(static_cast<std::size_t>(threshold));
  for (Element n = 0; n < threshold; ++n) prefix[n] = op(a.contains(n), b.contains(n));
  std::vector<bool> residues(static_cast<std::size_t>(period));
  for (Element r = 0; r < period; ++r) {
    // representative of residue class r at or above the threshold
    const Element n = threshold + ((r - threshold % period) % period + period) % period;
    residues[r] = op(a.contains(n), b.contains(n));
  }
  return CanonicalPeriodicSet::from_parts(std::move(prefix), period, std::move(residues));
}

}  // namespace

CanonicalPeriodicSet::CanonicalPeriodicSet() : residues_(1, false) {}

CanonicalPeriodicSet CanonicalPeriodicSet::naturals() { return {{}, std::vector<bool>(1, true)}; }

CanonicalPeriodicSet CanonicalPeriodicSet::progression(Element step, Element offset) {
  if (step < 1 || offset < 0) {
    throw Error(ErrorKind::UndefinedInput, "sets", "progression needs step >= 1 and offset >= 0",
                "ap(" + std::to_string(step) + "," + std::to_string(offset) + ")");
  }
  check_limits(offset, step);
  std::vector<bool> residues(static_cast<std::size_t>(step), false);
  residues[offset % step] = true;
  return from_parts(std::vector<bool>(static_cast<std::size_t>(offset), false), step,
                    std::move(residues));
}

CanonicalPeriodicSet CanonicalPeriodicSet::finite(const std::vector<Element>& elements) {
  Element top = 0;
  for (Element e : elements) {
    if (e < 0) throw Error(ErrorKind::UndefinedInput, "sets", "finite sets hold naturals only");
    top = std::max(top, e + 1);
  }
  check_limits(top, 1);
  std::vector<bool> prefix(static_cast<std::size_t>(top), false);
  for (Element e : elements) prefix[e] = true;
  return from_parts(std::move(prefix), 1, std::vector<bool>(1, false));
}

CanonicalPeriodicSet CanonicalPeriodicSet::from_parts(std::vector<bool> prefix, Element period,
                                                      std::vector<bool> residues) {
  if (period < 1 || static_cast<Element>(residues.size()) != period) {
    throw Error(ErrorKind::UndefinedInput, "sets", "residue table must match the period");
  }
  CanonicalPeriodicSet out(std::move(prefix), std::move(residues));
  out.canonicalize();
  return out;
}

void CanonicalPeriodicSet::canonicalize() {
  // Minimal period by divisor descent.
  const Element period = this->period();
  for (Element d = 1; d < period; ++d) {
    if (period % d != 0) continue;
    bool periodic = true;
    for (Element r = d; r < period && periodic; ++r) periodic = residues_[r] == residues_[r % d];
    if (periodic) {
      // Re-anchor: residue classes are absolute (n mod d), so truncation is exact.
      residues_.resize(static_cast<std::size_t>(d));
      break;
    }
  }
  // Minimal threshold for that period.
  const Element p = this->period();
  while (!prefix_.empty()) {
    const Element n = threshold() - 1;
    if (prefix_.back() != residues_[n % p]) break;
    prefix_.pop_back();
  }
}

bool CanonicalPeriodicSet::contains(Element n) const {
  if (n < 0) return false;
  if (n < threshold()) return prefix_[n];
  return residues_[n % period()];
}

std::vector<Element> CanonicalPeriodicSet::exceptional() const {
  std::vector<Element> out;
  for (Element n = 0; n < threshold(); ++n) {
    if (prefix_[n]) out.push_back(n);
  }
  return out;
}

std::vector<Element> CanonicalPeriodicSet::residues() const {
  std::vector<Element> out;
  for (Element r = 0; r < period(); ++r) {
    if (residues_[r]) out.push_back(r);
  }
  return out;
}

bool CanonicalPeriodicSet::is_finite() const {
  return std::none_of(residues_.begin(), residues_.end(), [](bool b) { return b; });
}

bool CanonicalPeriodicSet::is_empty() const {
  return is_finite() && std::none_of(prefix_.begin(), prefix_.end(), [](bool b) { return b; });
}

std::size_t CanonicalPeriodicSet::count() const {
  return static_cast<std::size_t>(std::count(prefix_.begin(), prefix_.end(), true));
}

Rational CanonicalPeriodicSet::density() const {
  const auto hits = std::count(residues_.begin(), residues_.end(), true);
  return Rational(hits, period());
}

std::optional<Element> CanonicalPeriodicSet::next_at_least(Element n) const {
  if (n < 0) n = 0;
  for (; n < threshold(); ++n) {
    if (prefix_[n]) return n;
  }
  if (is_finite()) return std::nullopt;
  const Element p = period();
  for (Element k = 0; k < p; ++k) {
    const Element candidate = n + k;
    if (candidate < n) return std::nullopt;  // overflow
    if (residues_[candidate % p]) return candidate;
  }
  return std::nullopt;
}

std::vector<Element> CanonicalPeriodicSet::members() const { return exceptional(); }

CanonicalPeriodicSet CanonicalPeriodicSet::complement() const {
  std::vector<bool> prefix = prefix_;
  prefix.flip();
  std::vector<bool> residues = residues_;
  residues.flip();
  return from_parts(std::move(prefix), period(), std::move(residues));
}

bool CanonicalPeriodicSet::subset_of(const CanonicalPeriodicSet& other) const {
  return subtract(*this, other).is_empty();
}

CanonicalPeriodicSet unite(const CanonicalPeriodicSet& a, const CanonicalPeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}

CanonicalPeriodicSet intersect(const CanonicalPeriodicSet& a, const CanonicalPeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}

CanonicalPeriodicSet subtract(const CanonicalPeriodicSet& a, const CanonicalPeriodicSet& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

std::string CanonicalPeriodicSet::describe() const {
  auto list = [](const std::vector<Element>& xs) {
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(xs[i]);
    }
    return s + "}";
  };
  return "threshold=" + std::to_string(threshold()) + " exceptional=" + list(exceptional()) +
         " period=" + std::to_string(period()) + " residues=" + list(residues());
}

}  // namespace cardlab
