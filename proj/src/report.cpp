#include "cardlab/report.hpp"

#include <iomanip>
#include <sstream>

namespace cardlab {
namespace {

template <typename T>
Json value_json(const T& x) {
  if constexpr (std::is_same_v<T, Rational>) {
    return to_string(x);
  } else {
    return x;
  }
}

template <typename A, typename B>
Json pairs_json(const std::vector<std::pair<A, B>>& pairs) {
  Json out = Json::array();
  for (const auto& [x, y] : pairs) out.push_back(Json::array({value_json(x), value_json(y)}));
  return out;
}

template <typename A, typename B>
std::string pairs_text(const std::vector<std::pair<A, B>>& pairs) {
  std::string out;
  for (const auto& [x, y] : pairs) {
    if (!out.empty()) out += " ";
    std::ostringstream item;
    if constexpr (std::is_same_v<A, Rational>) {
      item << "(" << to_string(x) << "," << to_string(y) << ")";
    } else {
      item << "(" << x << "," << y << ")";
    }
    out += item.str();
  }
  return out;
}

Json density_json(const std::optional<Rational>& d) {
  if (!d) return nullptr;
  return to_string(*d);
}

struct JsonVisitor {
  Json operator()(std::monostate) const { return nullptr; }
  Json operator()(const BijectionPrefix& w) const {
    return {{"type", "bijection-prefix"}, {"pairs", pairs_json(w.pairs)}};
  }
  Json operator()(const MissedElement& w) const {
    return {{"type", "missed-element"}, {"element", to_string(w.element)}};
  }
  Json operator()(const InjectionWitness& w) const {
    return {{"type", "injection"},
            {"formula", w.formula},
            {"missed", w.missed},
            {"prefix", pairs_json(w.prefix)}};
  }
  Json operator()(const FunctionTable& w) const {
    return {{"type", "function-table"}, {"f", pairs_json(w.f)}, {"missed", to_string(w.missed)}};
  }
  Json operator()(const HilbertHotelWitness& w) const {
    Json chain = Json::array();
    for (const auto& x : w.chain) chain.push_back(to_string(x));
    return {{"type", "hilbert-hotel"},
            {"chain", chain},
            {"f", pairs_json(w.f)},
            {"missed", to_string(w.missed)},
            {"g", pairs_json(w.g)}};
  }
};

struct TextVisitor {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(const BijectionPrefix& w) const {
    return "bijection " + pairs_text(w.pairs);
  }
  std::string operator()(const MissedElement& w) const {
    return "missed " + to_string(w.element);
  }
  std::string operator()(const InjectionWitness& w) const {
    return w.formula + ", misses " + std::to_string(w.missed) + ": " + pairs_text(w.prefix);
  }
  std::string operator()(const FunctionTable& w) const {
    return "f " + pairs_text(w.f) + ", misses " + to_string(w.missed);
  }
  std::string operator()(const HilbertHotelWitness& w) const {
    return "f " + pairs_text(w.f) + " misses " + to_string(w.missed) + "; g " +
           pairs_text(w.g);
  }
};

}  // namespace

Json witness_to_json(const Witness& w) { return std::visit(JsonVisitor{}, w); }

std::string witness_to_text(const Witness& w) { return std::visit(TextVisitor{}, w); }

Json report_to_json(const ConflictReport& r) {
  Json verdicts = Json::object();
  for (const auto& [p, v] : r.verdicts) {
    verdicts[to_string(p)] = {{"verdict", to_string(v.kind)}, {"witness", witness_to_json(v.witness)}};
  }
  Json out;
  out["pair"] = Json::array({r.first.to_string(), r.second.to_string()});
  out["verdicts"] = std::move(verdicts);
  out["conflict"] = r.conflict;
  out["tag"] = r.tag ? Json(*r.tag) : Json(nullptr);
  out["density"] = Json::array({density_json(r.density_first), density_json(r.density_second)});
  return out;
}

std::string report_to_text(const ConflictReport& r) {
  std::ostringstream out;
  auto row = [&](const std::string& key, const std::string& value) {
    out << std::left << std::setw(10) << key << value << "\n";
  };
  row("pair", r.first.to_string() + "  vs  " + r.second.to_string());
  for (const auto& [p, v] : r.verdicts) {
    std::ostringstream cell;
    cell << std::left << std::setw(14) << to_string(v.kind) << witness_to_text(v.witness);
    std::string text = cell.str();
    while (!text.empty() && text.back() == ' ') text.pop_back();
    row(to_string(p), text);
  }
  row("conflict", r.conflict ? "yes" : "no");
  row("tag", r.tag.value_or("-"));
  auto density = [](const std::optional<Rational>& d) { return d ? to_string(*d) : "-"; };
  row("density", density(r.density_first) + "  " + density(r.density_second));
  return out.str();
}

}  // namespace cardlab
