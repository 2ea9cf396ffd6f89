#include "cardlab/query.hpp"

#include <future>
#include <iomanip>
#include <sstream>
#include <thread>

#include "cardlab/report.hpp"
#include "cardlab/sets.hpp"

namespace cardlab {
namespace {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

bool any_unknown(const ConflictReport& r) {
  for (const auto& [p, v] : r.verdicts) {
    if (v.kind == VerdictKind::Unknown) return true;
  }
  return false;
}

QueryResult run_compare(const CompareQuery& q, const RunOptions& opt) {
  const auto report = galileo_report(q.first, q.second, q.principles, {opt.k});
  return {opt.json ? dump(report_to_json(report)) : report_to_text(report),
          any_unknown(report) ? kExitUnknown : kExitOk};
}

QueryResult run_compare_all(const CompareAllQuery& q, const Catalog& catalog,
                            const RunOptions& opt) {
  const auto& entries = catalog.entries();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < entries.size(); ++i) {
    for (std::size_t j = i + 1; j < entries.size(); ++j) pairs.emplace_back(i, j);
  }
  // Reports are independent; compute them in chunks and keep the pair order.
  const std::size_t workers = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t chunk = (pairs.size() + workers - 1) / workers;
  std::vector<std::future<std::vector<ConflictReport>>> jobs;
  for (std::size_t start = 0; start < pairs.size(); start += chunk) {
    jobs.push_back(std::async(std::launch::async, [&, start] {
      std::vector<ConflictReport> out;
      for (std::size_t i = start; i < std::min(pairs.size(), start + chunk); ++i) {
        const auto& [a, b] = pairs[i];
        out.push_back(galileo_report(entries[a].set, entries[b].set, q.principles, {opt.k}));
      }
      return out;
    }));
  }
  std::vector<ConflictReport> reports;
  for (auto& job : jobs) {
    for (auto& r : job.get()) reports.push_back(std::move(r));
  }

  bool unknown = false;
  Json all = Json::array();
  std::ostringstream text;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    const auto& names = pairs[i];
    unknown = unknown || any_unknown(r);
    if (opt.json) {
      Json j = report_to_json(r);
      j["names"] = Json::array({entries[names.first].name, entries[names.second].name});
      all.push_back(std::move(j));
      continue;
    }
    text << std::left << std::setw(14) << entries[names.first].name << std::setw(14)
         << entries[names.second].name;
    for (const auto& [p, v] : r.verdicts) text << " " << to_string(p) << "=" << to_string(v.kind);
    text << " conflict=" << (r.conflict ? "yes" : "no");
    if (r.tag) text << " tag=" << *r.tag;
    text << "\n";
  }
  return {opt.json ? dump(all) : text.str(), unknown ? kExitUnknown : kExitOk};
}

QueryResult demo_galileo(const RunOptions& opt) {
  const SetExpr naturals = SetExpr::naturals();
  const SetExpr squares = SetExpr::squares();
  const auto table = bijection_table(naturals, squares, opt.k);
  const auto report = galileo_report(squares, naturals, {kAllPrinciples.begin(), kAllPrinciples.end()},
                                     {opt.k});
  if (opt.json) {
    Json j;
    j["demo"] = "galileo";
    j["table"] = Json::array();
    for (const auto& [n, s] : table) j["table"].push_back(Json::array({n, s}));
    j["report"] = report_to_json(report);
    return {dump(j), kExitOk};
  }
  std::ostringstream out;
  out << "Galileo: every natural is matched with its square\n";
  out << std::left << std::setw(6) << "n" << "n^2\n";
  for (const auto& [n, s] : table) out << std::left << std::setw(6) << n << s << "\n";
  out << "\n" << report_to_text(report);
  return {out.str(), kExitOk};
}

QueryResult demo_peano1892(const DemoQuery& q, const RunOptions& opt) {
  const ProofTrace trace = infinitesimal_refutation("u", "v", q.semantics);
  if (opt.json) return {dump(trace.to_json()), kExitOk};
  return {trace.to_text(), kExitOk};
}

QueryResult demo_bettazzi(const RunOptions& opt) {
  const std::vector<std::pair<SetExpr, SetExpr>> cases = {
      {SetExpr::naturals(), SetExpr::naturals()},
      {SetExpr::naturals(), SetExpr::squares()},
      {SetExpr::finite({1, 2}), SetExpr::finite({3, 4})},
  };
  Json all = Json::array();
  std::ostringstream out;
  out << "Bettazzi: with a bijection present, must every injection be onto?\n";
  for (const auto& [a, b] : cases) {
    const Verdict v = bettazzi_check(a, b, {opt.k});
    if (opt.json) {
      all.push_back({{"pair", Json::array({a.to_string(), b.to_string()})},
                     {"verdict", to_string(v.kind)},
                     {"witness", witness_to_json(v.witness)}});
      continue;
    }
    out << a.to_string() << " -> " << b.to_string() << ": " << to_string(v.kind);
    const std::string w = witness_to_text(v.witness);
    if (!w.empty()) out << ", " << w;
    out << "\n";
  }
  if (opt.json) return {dump(Json{{"demo", "bettazzi"}, {"checks", all}}), kExitOk};
  return {out.str(), kExitOk};
}

QueryResult demo_formulaire(const RunOptions& opt) {
  const SetExpr n = SetExpr::naturals();
  const SetExpr r = SetExpr::reals_pos();
  const Verdict peano = peano_principle_verdict(n, r);
  const Verdict cp = cp_verdict(n, r);
  const std::vector<std::pair<SetExpr, SetExpr>> finite_pairs = {
      {SetExpr::finite({1, 2}), SetExpr::finite({8, 9})},
      {SetExpr::finite({1, 2, 3}), SetExpr::finite({4})},
      {SetExpr::finite({}), SetExpr::finite({0})},
      {SetExpr::finite({2, 3, 5, 7}), SetExpr::finite({0, 1, 4, 6, 8})},
  };
  Json rows = Json::array();
  std::ostringstream p211;
  bool all_agree = true;
  for (const auto& [a, b] : finite_pairs) {
    const Verdict c = cp_verdict(a, b);
    const Verdict p = peano_principle_verdict(a, b);
    const bool agree = c.kind == p.kind;
    all_agree = all_agree && agree;
    rows.push_back({{"pair", Json::array({a.to_string(), b.to_string()})},
                    {"cp", to_string(c.kind)},
                    {"peano", to_string(p.kind)},
                    {"agree", agree}});
    p211 << "  " << std::left << std::setw(40) << (a.to_string() + " vs " + b.to_string())
         << std::setw(14) << to_string(c.kind) << std::setw(14) << to_string(p.kind)
         << (agree ? "agree" : "differ") << "\n";
  }
  const std::string num_n = num_of_class(n).to_string();
  const std::string num_r = num_of_class(r).to_string();
  const std::string nc_n = cardinal_of(classify_size(n)).to_string();
  const std::string nc_r = cardinal_of(classify_size(r)).to_string();
  if (opt.json) {
    Json j;
    j["demo"] = "formulaire";
    j["pair"] = Json::array({n.to_string(), r.to_string()});
    j["num"] = Json::array({num_n, num_r});
    j["cardinal"] = Json::array({nc_n, nc_r});
    j["peano"] = to_string(peano.kind);
    j["cp"] = to_string(cp.kind);
    j["finite_pairs"] = rows;
    j["coincide_on_finite"] = all_agree;
    return {dump(j), kExitOk};
  }
  std::ostringstream out;
  out << "Formulaire: num counts both classes as infinite, Nc' separates them\n";
  out << std::left << std::setw(10) << "" << std::setw(12) << "naturals" << "realspos\n";
  out << std::left << std::setw(10) << "num" << std::setw(12) << num_n << num_r << "\n";
  out << std::left << std::setw(10) << "Nc'" << std::setw(12) << nc_n << nc_r << "\n";
  out << std::left << std::setw(10) << "peano" << to_string(peano.kind) << "\n";
  out << std::left << std::setw(10) << "cp" << to_string(cp.kind) << "\n";
  out << "finite classes (cp, peano):\n" << p211.str();
  out << "num and Nc' " << (all_agree ? "coincide" : "differ") << " on finite classes\n";
  return {out.str(), kExitOk};
}

QueryResult run_demo(const DemoQuery& q, const RunOptions& opt) {
  switch (q.name) {
    case DemoName::Galileo: return demo_galileo(opt);
    case DemoName::Peano1892: return demo_peano1892(q, opt);
    case DemoName::Bettazzi: return demo_bettazzi(opt);
    case DemoName::Formulaire: return demo_formulaire(opt);
  }
  return {};
}

QueryResult run_density(const DensityQuery& q, const RunOptions& opt) {
  const std::string d = to_string(natural_density(q.set));
  if (opt.json) return {dump(Json{{"set", q.set.to_string()}, {"density", d}}), kExitOk};
  return {d + "\n", kExitOk};
}

QueryResult run_enumerate(const EnumerateQuery& q, const RunOptions& opt) {
  const auto xs = enumerate(q.set, q.count);
  if (opt.json) return {dump(Json{{"set", q.set.to_string()}, {"elements", xs}}), kExitOk};
  std::string out;
  for (Element x : xs) {
    if (!out.empty()) out += " ";
    out += std::to_string(x);
  }
  return {out + "\n", kExitOk};
}

}  // namespace

std::optional<DemoName> demo_from_string(std::string_view name) {
  if (name == "galileo") return DemoName::Galileo;
  if (name == "peano1892") return DemoName::Peano1892;
  if (name == "bettazzi") return DemoName::Bettazzi;
  if (name == "formulaire") return DemoName::Formulaire;
  return std::nullopt;
}

std::vector<Principle> parse_principles(std::string_view list) {
  std::vector<Principle> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const std::size_t comma = std::min(list.find(',', start), list.size());
    const std::string_view name = list.substr(start, comma - start);
    const auto p = principle_from_string(name);
    if (!p) {
      throw Error(ErrorKind::Syntax, "cli", "unknown principle '" + std::string(name) + "'",
                  std::string(list), start);
    }
    out.push_back(*p);
    start = comma + 1;
  }
  return out;
}

QueryResult error_result(const Error& e, bool json) {
  const bool undecided = e.kind() == ErrorKind::UnknownResult || e.kind() == ErrorKind::UnknownSize;
  const int code = undecided ? kExitUnknown : kExitError;
  if (!json) return {"error: " + describe(e) + "\n", code, true};
  Json j;
  j["error"] = {{"kind", to_string(e.kind())},
                {"module", e.module()},
                {"message", e.what()},
                {"subject", e.subject().empty() ? Json(nullptr) : Json(e.subject())},
                {"position", e.position() ? Json(*e.position()) : Json(nullptr)}};
  return {dump(j), code, true};
}

QueryResult run_query(const Query& q, const Catalog& catalog, const RunOptions& options) {
  try {
    return std::visit(
        [&](const auto& query) -> QueryResult {
          using T = std::decay_t<decltype(query)>;
          if constexpr (std::is_same_v<T, CompareQuery>) {
            return run_compare(query, options);
          } else if constexpr (std::is_same_v<T, CompareAllQuery>) {
            return run_compare_all(query, catalog, options);
          } else if constexpr (std::is_same_v<T, DemoQuery>) {
            return run_demo(query, options);
          } else if constexpr (std::is_same_v<T, DensityQuery>) {
            return run_density(query, options);
          } else if constexpr (std::is_same_v<T, EnumerateQuery>) {
            return run_enumerate(query, options);
          } else if constexpr (std::is_same_v<T, OrdQuery>) {
            const Ordinal& o = query.value;
            if (options.json) {
              return {dump(Json{{"value", o.to_string()},
                                {"pretty", o.pretty()},
                                {"cardinality", ord_cardinality(o).to_string()}}),
                      kExitOk};
            }
            return {o.to_string() + "\n", kExitOk};
          } else if constexpr (std::is_same_v<T, CardQuery>) {
            const Cardinal& c = query.value;
            if (options.json) {
              return {dump(Json{{"value", c.to_string()}, {"pretty", c.pretty()}}), kExitOk};
            }
            return {c.to_string() + "\n", kExitOk};
          } else {
            if (options.json) return {dump(Json{{"value", query.value.to_string()}}), kExitOk};
            return {query.value.to_string() + "\n", kExitOk};
          }
        },
        q);
  } catch (const Error& e) {
    return error_result(e, options.json);
  }
}

}  // namespace cardlab
