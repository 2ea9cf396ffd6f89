#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "cardlab/cardinal.hpp"
#include "cardlab/catalog.hpp"
#include "cardlab/error.hpp"
#include "cardlab/ordinal.hpp"
#include "cardlab/peano_num.hpp"
#include "cardlab/principles.hpp"
#include "cardlab/segments.hpp"
#include "cardlab/set_expr.hpp"

namespace cardlab {

struct CompareQuery {
  SetExpr first;
  SetExpr second;
  std::vector<Principle> principles;
};

/// Every unordered pair of catalog entries.
struct CompareAllQuery {
  std::vector<Principle> principles;
};

enum class DemoName { Galileo, Peano1892, Bettazzi, Formulaire };

struct DemoQuery {
  DemoName name;
  Semantics semantics = Semantics::PeanoCollapse;
};

struct DensityQuery {
  SetExpr set;
};

struct EnumerateQuery {
  SetExpr set;
  std::size_t count;
};

struct OrdQuery {
  Ordinal value;
};

struct CardQuery {
  Cardinal value;
};

struct NumQuery {
  NumValue value;
};

using Query = std::variant<CompareQuery, CompareAllQuery, DemoQuery, DensityQuery,
                           EnumerateQuery, OrdQuery, CardQuery, NumQuery>;

struct RunOptions {
  bool continuum_hypothesis = false;
  bool json = false;
  /// Witness and table prefix length.
  std::size_t k = 4;
};

struct QueryResult {
  std::string output;
  int exit_code = 0;
  bool is_error = false;  // output is an error report
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitUnknown = 2;

std::optional<DemoName> demo_from_string(std::string_view name);
/// Comma-separated principle names; throws Error(Syntax) for unknown ones.
std::vector<Principle> parse_principles(std::string_view list);

/// Runs a parsed query. Module errors are reported in the result rather
/// than thrown.
QueryResult run_query(const Query& q, const Catalog& catalog, const RunOptions& options);

/// Error report: exit 2 for undecided results, 1 otherwise.
QueryResult error_result(const Error& e, bool json);

}  // namespace cardlab
