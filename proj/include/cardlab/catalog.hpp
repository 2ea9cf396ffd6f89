#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cardlab/set_expr.hpp"

namespace cardlab {

/// Named set expressions read from `name = expr` lines (`#` starts a comment).
/// Entries may refer to names defined above them. Names are unique, are not
/// DSL keywords, and every entry must parse.
class Catalog {
 public:
  struct Entry {
    std::string name;
    std::string source;
    SetExpr set;
  };

  Catalog() = default;

  /// Throws Error(Catalog) naming the offending line.
  static Catalog parse(std::string_view text, const std::string& origin = "catalog");
  static Catalog load_file(const std::string& path);
  /// The catalog compiled into the library.
  static const Catalog& builtin();

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::optional<SetExpr> find(std::string_view name) const;

 private:
  std::vector<Entry> entries_;
};

}  // namespace cardlab
