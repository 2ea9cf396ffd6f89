#include <doctest.h>

#include <optional>
#include <variant>
#include <vector>

#include "cardlab/catalog.hpp"
#include "cardlab/error.hpp"
#include "cardlab/parser.hpp"
#include "cardlab/sets.hpp"
#include "support/generators.hpp"

using namespace cardlab;
using V = std::vector<Element>;

namespace {

SetExpr S(const char* s) { return parse_set_expr(s); }

ErrorKind error_kind(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Syntax;
}

// The constructed set, or nullopt when the construction guard rejects it.
template <typename F>
std::optional<SetExpr> guarded(F make) {
  try {
    return make();
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Guard);
    return std::nullopt;
  }
}

}  // namespace

TEST_CASE("membership") {
  CHECK(contains(S("squares"), 49));
  CHECK_FALSE(contains(S("squares"), 50));
  // 25 = 3*8 + 1, so it is not in ap(3,2)
  CHECK_FALSE(contains(S("ap(3,2) & squares"), 25));
  CHECK(contains(S("ap(3,1) & squares"), 25));
  CHECK(contains(S("poly(1,0,1)"), 101));
  CHECK(contains(S("naturals \\ cubes"), 26));
  CHECK_FALSE(contains(S("naturals \\ cubes"), 27));
  CHECK(error_kind([] { contains(S("reals"), 1); }) == ErrorKind::Sort);
}

TEST_CASE("construction guard and sorts") {
  CHECK(error_kind([] { S("squares & cubes"); }) == ErrorKind::Guard);
  CHECK(error_kind([] { S("squares \\ poly(0,1,1)"); }) == ErrorKind::Guard);
  CHECK(error_kind([] { S("naturals | reals"); }) == ErrorKind::Sort);
  CHECK(error_kind([] { S("poly(0,-1,1)"); }) == ErrorKind::UndefinedInput);
  CHECK_NOTHROW(S("squares | cubes"));
  CHECK_NOTHROW(S("(squares & evens) | ap(5,1)"));
}

TEST_CASE("normal forms") {
  const auto nf = [](const char* s) { return std::get<CanonicalPeriodicSet>(normalize(S(s))); };
  CHECK(nf("evens | odds") == CanonicalPeriodicSet::naturals());
  CHECK(nf("ap(2,0) & ap(3,0)") == CanonicalPeriodicSet::progression(6, 0));
  // 5 is already in ap(4,1), so the minimal form has no exceptions
  CHECK(nf("finite{5} | ap(4,1)") == CanonicalPeriodicSet::progression(4, 1));
  const CanonicalPeriodicSet f = nf("finite{6} | ap(4,1)");
  CHECK(f.period() == 4);
  CHECK(f.residues() == V{1});
  CHECK(f.threshold() == 7);
  CHECK(f.exceptional() == V{1, 5, 6});
  CHECK(nf("poly(3,2)") == CanonicalPeriodicSet::progression(2, 3));
  CHECK(nf("squares \\ naturals").is_empty());
  CHECK(std::holds_alternative<NonPeriodic>(normalize(S("squares | evens"))));
}

TEST_CASE("membership agrees with the canonical form") {
  cardlab::testing::Gen g(41);
  int periodic = 0;
  for (int i = 0; i < 400; ++i) {
    const SetExpr s = g.nat_set();
    const auto nf = normalize(s);
    if (const auto* p = std::get_if<CanonicalPeriodicSet>(&nf)) {
      ++periodic;
      for (Element n = 0; n <= 10 * p->period() + p->threshold(); ++n) {
        CHECK(contains(s, n) == p->contains(n));
      }
    }
  }
  CHECK(periodic > 100);
}

TEST_CASE("size classes") {
  CHECK(classify_size(S("squares")) == SizeClass::countable());
  CHECK(classify_size(S("squares & ap(3,2)")) == SizeClass::empty());
  CHECK(classify_size(S("squares & ap(3,1)")) == SizeClass::countable());
  CHECK(classify_size(S("cubes & ap(9,4)")) == SizeClass::empty());
  CHECK(classify_size(S("cubes & ap(9,8)")) == SizeClass::countable());
  CHECK(classify_size(S("interval(0,1)")) == SizeClass::continuum());
  CHECK(classify_size(S("interval(0,1) & interval(1,2)")) == SizeClass::empty());
  CHECK(classify_size(S("finite{3,1,3}")) == SizeClass::finite(2));
  CHECK(classify_size(S("squares & finite{1,2,3,4}")) == SizeClass::finite(2));
  CHECK(classify_size(S("squares \\ (naturals \\ ap(3,2))")) == SizeClass::empty());
  CHECK(SizeClass::finite(4).to_string() == "finite(4)");
  CHECK(SizeClass::countable().to_string() == "countably-infinite");
  CHECK(cardinal_of(SizeClass::continuum()) == Cardinal::continuum());
  CHECK(cardinal_of(SizeClass::finite(3)) == Cardinal::finite(3));
}

TEST_CASE("size classes agree with brute-force counting") {
  constexpr Element kN = 1'000'000;
  std::vector<SetExpr> corpus;
  for (const auto& e : Catalog::builtin().entries()) {
    if (e.set.sort() == Sort::Naturals) corpus.push_back(e.set);
  }
  for (const char* extra : {"squares & ap(3,2)", "cubes & ap(7,3)", "squares & finite{0,1,2,3,4}",
                            "(squares | cubes) & finite{8,9,10}", "poly(0,0,1) & ap(5,3)",
                            "ap(4,1) \\ ap(2,1)", "evens & odds"}) {
    corpus.push_back(S(extra));
  }
  for (const auto& s : corpus) {
    CAPTURE(s.to_string());
    std::size_t count = 0;
    for (Element n = 0; n < kN; ++n) count += contains(s, n) ? 1 : 0;
    const SizeClass size = classify_size(s);
    if (size.is_finite()) {
      CHECK(count == size.count);
    } else {
      CHECK(count > 0);
      CHECK(next_element(s, kN).has_value());
    }
  }
}

TEST_CASE("densities") {
  CHECK(natural_density(S("evens")) == Rational(1, 2));
  CHECK(natural_density(S("naturals")) == 1);
  CHECK(natural_density(S("squares")) == 0);
  CHECK(natural_density(S("naturals \\ squares")) == 1);
  CHECK(natural_density(S("poly(1,3)")) == Rational(1, 3));
  CHECK(natural_density(S("evens | squares")) == Rational(1, 2));
  CHECK(natural_density(S("ap(4,1) | finite{5}")) == Rational(1, 4));
  CHECK(error_kind([] { natural_density(S("realspos")); }) == ErrorKind::Sort);
}

TEST_CASE("density is additive and monotone") {
  cardlab::testing::Gen g(42);
  for (int i = 0; i < 300; ++i) {
    const SetExpr a = g.nat_set(), b = g.nat_set();
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    // a \ b and b are disjoint
    if (const auto ab = guarded([&] { return SetExpr::subtract(a, b); })) {
      if (const auto u = guarded([&] { return SetExpr::unite(*ab, b); })) {
        CHECK(natural_density(*u) == natural_density(*ab) + natural_density(b));
      }
    }
    if (is_subset(a, b) == Truth::True) CHECK(natural_density(a) <= natural_density(b));
  }
}

TEST_CASE("subset relations") {
  CHECK(is_proper_subset(S("squares"), S("naturals")) == Truth::True);
  CHECK(is_proper_subset(S("evens"), S("evens")) == Truth::False);
  CHECK(is_proper_subset(S("ap(4,0)"), S("ap(2,0)")) == Truth::True);
  CHECK(is_subset(S("squares & evens"), S("ap(4,0)")) == Truth::True);
  CHECK(is_subset(S("cubes"), S("squares")) == Truth::False);
  CHECK(same_set(S("naturals \\ odds"), S("evens")) == Truth::True);
  CHECK(are_disjoint(S("squares"), S("ap(3,2)")) == Truth::True);
  CHECK(are_disjoint(S("squares"), S("cubes")) == Truth::False);
  CHECK(is_proper_subset(S("interval(0,1)"), S("realspos")) == Truth::True);
  CHECK(is_subset(S("realspos"), S("interval(0,1)")) == Truth::False);
  // the naturals sit inside the reals, but 0 is not positive
  CHECK(is_proper_subset(S("naturals"), S("reals")) == Truth::True);
  CHECK(is_subset(S("naturals"), S("realspos")) == Truth::False);
  CHECK(is_subset(S("naturals \\ finite{0}"), S("realspos")) == Truth::True);
  CHECK(is_subset(S("interval(0,1)"), S("naturals")) == Truth::False);
}

TEST_CASE("subset answers agree with membership") {
  cardlab::testing::Gen g(43);
  int decided = 0;
  for (int i = 0; i < 300; ++i) {
    const SetExpr a = g.nat_set(2), b = g.nat_set(2);
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    const Truth t = is_subset(a, b);
    if (t == Truth::True) {
      ++decided;
      for (Element n = 0; n < 2000; ++n) {
        if (contains(a, n)) CHECK(contains(b, n));
      }
    }
    if (t != Truth::Unknown) ++decided;
    if (const auto u = guarded([&] { return SetExpr::unite(a, b); })) CHECK(is_subset(a, *u) == Truth::True);
    CHECK(is_subset(a, a) == Truth::True);
  }
  CHECK(decided > 200);
}

TEST_CASE("enumeration") {
  CHECK(enumerate(S("squares"), 4) == V{0, 1, 4, 9});
  CHECK(enumerate(S("finite{3,1}"), 2) == V{1, 3});
  CHECK(enumerate(S("evens & squares"), 3) == V{0, 4, 16});
  CHECK(enumerate(S("naturals \\ squares"), 5) == V{2, 3, 5, 6, 7});
  CHECK(error_kind([] { enumerate(S("finite{3,1}"), 3); }) == ErrorKind::Exhausted);
  CHECK(next_element(S("cubes"), 28) == 64);
  CHECK_FALSE(next_element(S("finite{4}"), 5).has_value());

  SetCursor cur(S("odds & squares"));
  V got;
  for (int i = 0; i < 4; ++i) got.push_back(*cur.next());
  CHECK(got == V{1, 9, 25, 49});
}

TEST_CASE("enumeration agrees with membership") {
  cardlab::testing::Gen g(44);
  for (int i = 0; i < 200; ++i) {
    const SetExpr s = g.nat_set();
    CAPTURE(s.to_string());
    V expected;
    for (Element n = 0; n < 300; ++n) {
      if (contains(s, n)) expected.push_back(n);
    }
    SetCursor cur(s);
    V got;
    for (auto x = cur.next(); x && *x < 300; x = cur.next()) got.push_back(*x);
    CHECK(got == expected);
  }
}

TEST_CASE("bijection tables") {
  using P = std::vector<std::pair<Element, Element>>;
  CHECK(bijection_table(S("naturals"), S("squares"), 4) == P{{0, 0}, {1, 1}, {2, 4}, {3, 9}});
  CHECK(bijection_table(S("evens"), S("odds"), 3) == P{{0, 1}, {2, 3}, {4, 5}});
  CHECK(bijection_table(S("ap(5,2)"), S("ap(5,2)"), 3) == P{{2, 2}, {7, 7}, {12, 12}});
  CHECK(bijection_table(S("finite{9,4}"), S("finite{1,2}"), 2) == P{{4, 1}, {9, 2}});
  CHECK(error_kind([] { bijection_table(S("finite{1}"), S("finite{1,2}"), 1); }) ==
        ErrorKind::SizeMismatch);
  CHECK(error_kind([] { bijection_table(S("naturals"), S("finite{1,2}"), 1); }) ==
        ErrorKind::SizeMismatch);
  CHECK(error_kind([] { bijection_table(S("naturals"), S("reals"), 1); }) == ErrorKind::Sort);
}

TEST_CASE("Dedekind witnesses") {
  const auto nat = dedekind_witness(S("naturals"));
  REQUIRE(nat);
  CHECK(nat->formula() == "n ↦ n+1");
  CHECK(nat->missed() == 0);
  CHECK_FALSE(dedekind_witness(S("finite{1,2,3}")));

  const auto sq = dedekind_witness(S("squares"));
  REQUIRE(sq);
  CHECK(sq->formula() == "n^2 ↦ (n+1)^2");
  CHECK(sq->missed() == 0);
  CHECK(dedekind_witness(S("evens"))->formula() == "n ↦ n+2");

  // injective and never hits the minimum, on a prefix of every infinite catalog set
  for (const auto& e : Catalog::builtin().entries()) {
    if (e.set.sort() != Sort::Naturals || classify_size(e.set).is_finite()) continue;
    CAPTURE(e.name);
    const auto w = dedekind_witness(e.set);
    REQUIRE(w);
    const auto pairs = w->prefix(100);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      CHECK(contains(e.set, pairs[i].second));
      CHECK(pairs[i].second != w->missed());
      if (i > 0) CHECK(pairs[i - 1].second < pairs[i].second);
    }
    CHECK(pairs.front().first == w->missed());
  }
}

TEST_CASE("real sets") {
  CHECK(classify_size(S("interval(0,1) \\ interval(0,1)")) == SizeClass::empty());
  CHECK(same_set(S("realspos & interval(-1,1)"), S("interval(0,1)")) == Truth::True);
  CHECK(same_set(S("interval(0,2) \\ interval(0,1)"), S("interval(1,2)")) == Truth::False);
  CHECK(classify_size(S("interval(0,2) \\ (interval(0,1) | interval(1,2))")) == SizeClass::finite(1));
}
