// Command-line front end: parses arguments into a Query and runs it.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cardlab/catalog.hpp"
#include "cardlab/parser.hpp"
#include "cardlab/query.hpp"

namespace {

using namespace cardlab;

struct Args {
  bool ch = false;
  bool json = false;
  std::string catalog_path;
  std::size_t k = 4;
  std::string principles = "cp,pwp,peano,bup,bettazzi";
  std::string semantics = "peano";
  std::string first;
  std::string second;
  std::string demo;
  std::string expr;
  std::size_t count = 0;
};

Semantics semantics_from(const std::string& name) {
  if (name == "peano") return Semantics::PeanoCollapse;
  if (name == "ordinal") return Semantics::OrdinalScaled;
  throw Error(ErrorKind::Syntax, "cli", "semantics must be peano or ordinal", name);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cardlab: sizes of infinite sets under competing principles"};
  app.require_subcommand(1);
  app.fallthrough();
  Args args;
  app.add_flag("--ch", args.ch, "assume the continuum hypothesis");
  app.add_flag("--json", args.json, "machine-readable output");
  app.add_option("--catalog", args.catalog_path, "catalog file of named sets");
  app.add_option("-k", args.k, "witness and table prefix length")->check(CLI::Range(1, 100000));
  app.add_option("--principles", args.principles, "comma-separated: cp,pwp,peano,bup,bettazzi");
  app.add_option("--semantics", args.semantics, "segment semantics: peano or ordinal");

  auto* compare = app.add_subcommand("compare", "compare two sets under each principle");
  compare->add_option("first", args.first)->required();
  compare->add_option("second", args.second)->required();
  auto* compare_all = app.add_subcommand("compare-all", "compare every pair of catalog sets");
  auto* demo = app.add_subcommand("demo", "run a worked example");
  demo->add_option("name", args.demo)
      ->required()
      ->check(CLI::IsMember({"galileo", "peano1892", "bettazzi", "formulaire"}));
  auto* density = app.add_subcommand("density", "natural density of a set");
  density->add_option("expr", args.expr)->required();
  auto* enumerate = app.add_subcommand("enumerate", "smallest elements of a set");
  enumerate->add_option("expr", args.expr)->required();
  enumerate->add_option("count", args.count)->required();
  auto* ord = app.add_subcommand("ord", "evaluate an ordinal expression");
  ord->add_option("expr", args.expr)->required();
  auto* card = app.add_subcommand("card", "evaluate a cardinal expression");
  card->add_option("expr", args.expr)->required();
  auto* num = app.add_subcommand("num", "evaluate a num expression");
  num->add_option("expr", args.expr)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    const Catalog catalog =
        args.catalog_path.empty() ? Catalog::builtin() : Catalog::load_file(args.catalog_path);
    const CardinalOptions card_options{args.ch};
    std::optional<Query> query;
    if (compare->parsed()) {
      query = CompareQuery{parse_set_expr(args.first, &catalog),
                           parse_set_expr(args.second, &catalog),
                           parse_principles(args.principles)};
    } else if (compare_all->parsed()) {
      query = CompareAllQuery{parse_principles(args.principles)};
    } else if (demo->parsed()) {
      query = DemoQuery{*demo_from_string(args.demo), semantics_from(args.semantics)};
    } else if (density->parsed()) {
      query = DensityQuery{parse_set_expr(args.expr, &catalog)};
    } else if (enumerate->parsed()) {
      query = EnumerateQuery{parse_set_expr(args.expr, &catalog), args.count};
    } else if (ord->parsed()) {
      query = OrdQuery{parse_ord_expr(args.expr)};
    } else if (card->parsed()) {
      query = CardQuery{parse_card_expr(args.expr, &catalog, card_options)};
    } else if (num->parsed()) {
      query = NumQuery{parse_num_expr(args.expr, &catalog)};
    }
    const RunOptions options{args.ch, args.json, args.k};
    const QueryResult result = run_query(*query, catalog, options);
    (result.is_error ? std::cerr : std::cout) << result.output;
    return result.exit_code;
  } catch (const Error& e) {
    const QueryResult result = error_result(e, args.json);
    std::cerr << result.output;
    return result.exit_code;
  }
}
