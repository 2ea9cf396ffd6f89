#include <doctest.h>

#include "cardlab/parser.hpp"
#include "cardlab/report.hpp"

using namespace cardlab;

namespace {

SetExpr S(const char* s) { return parse_set_expr(s); }

}  // namespace

TEST_CASE("witness rendering") {
  CHECK(witness_to_json(Witness{}).is_null());
  CHECK(witness_to_text(Witness{BijectionPrefix{{{0, 0}, {1, 1}, {2, 4}}}}) ==
        "bijection (0,0) (1,1) (2,4)");
  CHECK(witness_to_text(Witness{MissedElement{Rational(2)}}) == "missed 2");
  const Json j = witness_to_json(Witness{MissedElement{Rational(1, 2)}});
  CHECK(j["type"] == "missed-element");
  CHECK(j["element"] == "1/2");
}

TEST_CASE("JSON report layout") {
  const Json j = report_to_json(galileo_report(S("squares"), S("naturals")));
  CHECK(j["pair"] == Json::array({"squares", "naturals"}));
  CHECK(j["verdicts"]["cp"]["verdict"] == "Equal");
  CHECK(j["verdicts"]["cp"]["witness"]["type"] == "bijection-prefix");
  CHECK(j["verdicts"]["pwp"]["verdict"] == "FirstSmaller");
  CHECK(j["verdicts"]["bup"]["witness"]["type"] == "hilbert-hotel");
  CHECK(j["verdicts"]["bettazzi"]["verdict"] == "Refuted");
  CHECK(j["verdicts"]["bettazzi"]["witness"]["type"] == "injection");
  CHECK(j["conflict"] == true);
  CHECK(j["tag"] == "Galileo");
  CHECK(j["density"] == Json::array({"0", "1"}));
  // principles appear in evaluation order
  std::vector<std::string> keys;
  for (const auto& [k, v] : j["verdicts"].items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"cp", "pwp", "peano", "bup", "bettazzi"});
}

TEST_CASE("text report") {
  const std::string t = report_to_text(galileo_report(S("naturals"), S("realspos")));
  CHECK(t.find("pair      naturals  vs  realspos") != std::string::npos);
  CHECK(t.find("cp        FirstSmaller") != std::string::npos);
  CHECK(t.find("tag       Formulaire") != std::string::npos);
  CHECK(t.find("density   1  -") != std::string::npos);
}
