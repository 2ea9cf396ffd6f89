#include "cardlab/catalog.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "cardlab/default_catalog.hpp"
#include "cardlab/error.hpp"
#include "cardlab/parser.hpp"

namespace cardlab {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool valid_name(std::string_view name) {
  if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_')) {
    return false;
  }
  for (char c : name) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

}  // namespace

Catalog Catalog::parse(std::string_view text, const std::string& origin) {
  Catalog catalog;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(line_no);
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw Error(ErrorKind::Catalog, "cli", "expected `name = expression`", where);
    }
    const std::string name(trim(line.substr(0, eq)));
    const std::string source(trim(line.substr(eq + 1)));
    if (!valid_name(name)) throw Error(ErrorKind::Catalog, "cli", "bad name '" + name + "'", where);
    if (is_set_keyword(name)) {
      throw Error(ErrorKind::Catalog, "cli", "'" + name + "' is a reserved word", where);
    }
    if (catalog.find(name)) {
      throw Error(ErrorKind::Catalog, "cli", "duplicate name '" + name + "'", where);
    }
    try {
      catalog.entries_.push_back({name, source, parse_set_expr(source, &catalog)});
    } catch (const Error& e) {
      throw Error(ErrorKind::Catalog, "cli", "entry '" + name + "': " + describe(e), where);
    }
  }
  return catalog;
}

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Catalog, "cli", "cannot open catalog file", path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse(text.str(), path);
}

const Catalog& Catalog::builtin() {
  static const Catalog catalog = parse(kDefaultCatalogText, "builtin");
  return catalog;
}

std::optional<SetExpr> Catalog::find(std::string_view name) const {
  for (const auto& e : entries_) {
    if (e.name == name) return e.set;
  }
  return std::nullopt;
}

}  // namespace cardlab
