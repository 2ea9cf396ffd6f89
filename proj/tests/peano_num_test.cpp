#include <doctest.h>

#include <vector>

#include "cardlab/error.hpp"
#include "cardlab/parser.hpp"
#include "cardlab/peano_num.hpp"
#include "cardlab/sets.hpp"

using namespace cardlab;

namespace {

std::vector<NumValue> universe() {
  std::vector<NumValue> out{NumValue::zero()};
  for (int n = 1; n <= 20; ++n) out.push_back(NumValue::fin(n));
  out.push_back(NumValue::inf());
  return out;
}

SetExpr S(const char* s) { return parse_set_expr(s); }

}  // namespace

TEST_CASE("values") {
  CHECK(NumValue::fin(0) == NumValue::zero());
  CHECK(NumValue::fin(3).to_string() == "3");
  CHECK(NumValue::zero().to_string() == "0");
  CHECK(NumValue::inf().to_string() == "inf");
}

TEST_CASE("addition and order laws, exhaustively") {
  const auto vals = universe();
  const NumValue inf = NumValue::inf();
  for (const auto& a : vals) {
    CHECK(num_add(a, inf) == inf);
    CHECK(num_add(inf, a) == inf);
    CHECK(num_add(a, NumValue::zero()) == a);
    if (!a.is_infinite()) CHECK(num_cmp(a, inf) == NumOrder::Less);
    for (const auto& b : vals) {
      CHECK(num_add(a, b) == num_add(b, a));
      if (!a.is_infinite() && !b.is_infinite()) {
        CHECK(num_add(a, b) == NumValue::fin(a.count() + b.count()));
      }
      for (const auto& c : vals) {
        CHECK(num_add(num_add(a, b), c) == num_add(a, num_add(b, c)));
      }
    }
  }
}

TEST_CASE("order is total and strict on distinct values") {
  const auto vals = universe();
  for (std::size_t i = 0; i < vals.size(); ++i) {
    for (std::size_t j = 0; j < vals.size(); ++j) {
      const NumOrder expected = i < j ? NumOrder::Less : i == j ? NumOrder::Equal : NumOrder::Greater;
      CHECK(num_cmp(vals[i], vals[j]) == expected);
    }
  }
}

TEST_CASE("num of classes") {
  CHECK(num_of_class(S("finite{}")) == NumValue::zero());
  CHECK(num_of_class(S("finite{4,1,4}")) == NumValue::fin(2));
  CHECK(num_of_class(S("squares")) == NumValue::inf());
  CHECK(num_of_class(S("realspos")) == NumValue::inf());
  CHECK(num_of_class(S("naturals")) == num_of_class(S("reals")));
  CHECK(num_of_class(S("interval(0,1) & interval(1,2)")) == NumValue::zero());
  CHECK(num_of_size(SizeClass::finite(9)) == NumValue::fin(9));
  CHECK(num_of_size(SizeClass::continuum()) == NumValue::inf());
}

TEST_CASE("disjoint union") {
  CHECK(num_disjoint_union(S("finite{1,2}"), S("finite{3}")) == NumValue::fin(3));
  CHECK(num_disjoint_union(S("evens"), S("odds")) == NumValue::inf());
  CHECK(num_disjoint_union(S("finite{}"), S("finite{}")) == NumValue::zero());
  try {
    num_disjoint_union(S("evens"), S("squares"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDisjoint);
  }
}

TEST_CASE("num expressions") {
  CHECK(parse_num_expr("2 + 3") == NumValue::fin(5));
  CHECK(parse_num_expr("inf + 3") == NumValue::inf());
  CHECK(parse_num_expr("num(finite{1,2,3}) + num(finite{})") == NumValue::fin(3));
  CHECK(parse_num_expr("num(naturals) + num(realspos)") == NumValue::inf());
  CHECK_THROWS_AS(parse_num_expr("inf +"), Error);
}
