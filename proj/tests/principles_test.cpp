#include <doctest.h>

#include <set>
#include <variant>
#include <vector>

#include "cardlab/catalog.hpp"
#include "cardlab/error.hpp"
#include "cardlab/parser.hpp"
#include "cardlab/principles.hpp"
#include "support/generators.hpp"

using namespace cardlab;
using VK = VerdictKind;

namespace {

SetExpr S(const char* s) { return parse_set_expr(s); }

VK kind(Principle p, const char* a, const char* b) { return evaluate(p, S(a), S(b)).kind; }

// All subsets of {0,...,4} with at most four elements.
std::vector<std::vector<Element>> small_subsets() {
  std::vector<std::vector<Element>> out;
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<Element> s;
    for (int i = 0; i < 5; ++i) {
      if (mask & (1 << i)) s.push_back(i);
    }
    if (s.size() <= 4) out.push_back(s);
  }
  return out;
}

}  // namespace

TEST_CASE("Cantor's principle") {
  const Verdict v = cp_verdict(S("naturals"), S("squares"));
  CHECK(v.kind == VK::Equal);
  const auto* table = std::get_if<BijectionPrefix>(&v.witness);
  REQUIRE(table);
  CHECK(table->pairs == std::vector<std::pair<Element, Element>>{{0, 0}, {1, 1}, {2, 4}, {3, 9}});
  CHECK(kind(Principle::Cp, "finite{1,2}", "finite{8,9}") == VK::Equal);
  CHECK(kind(Principle::Cp, "naturals", "realspos") == VK::FirstSmaller);
  CHECK(kind(Principle::Cp, "interval(0,1)", "squares") == VK::FirstGreater);
  CHECK(kind(Principle::Cp, "finite{1,2,3}", "finite{7}") == VK::FirstGreater);
  CHECK(kind(Principle::Cp, "interval(0,1)", "reals") == VK::Equal);
}

TEST_CASE("part-whole principle") {
  CHECK(kind(Principle::Pwp, "squares", "naturals") == VK::FirstSmaller);
  CHECK(kind(Principle::Pwp, "naturals", "squares") == VK::FirstGreater);
  CHECK(kind(Principle::Pwp, "evens", "odds") == VK::NoVerdict);
  CHECK(kind(Principle::Pwp, "ap(4,0)", "ap(2,0)") == VK::FirstSmaller);
  CHECK(kind(Principle::Pwp, "evens", "naturals \\ odds") == VK::Equal);
  CHECK(kind(Principle::Pwp, "naturals", "reals") == VK::FirstSmaller);
  CHECK(kind(Principle::Pwp, "naturals", "realspos") == VK::NoVerdict);
  const Verdict v = pwp_verdict(S("squares"), S("naturals"));
  const auto* missed = std::get_if<MissedElement>(&v.witness);
  REQUIRE(missed);
  CHECK(missed->element == 2);
}

TEST_CASE("Peano's principle") {
  CHECK(kind(Principle::Peano, "naturals", "realspos") == VK::Equal);
  CHECK(kind(Principle::Peano, "finite{1,2,3}", "finite{4,5,6}") == VK::Equal);
  CHECK(kind(Principle::Peano, "squares", "naturals") == VK::Equal);
  CHECK(kind(Principle::Peano, "finite{1}", "naturals") == VK::FirstSmaller);
  CHECK(kind(Principle::Peano, "interval(0,1)", "finite{1,2}") == VK::FirstGreater);
}

TEST_CASE("Buzaglo's principle") {
  CHECK(kind(Principle::Bup, "naturals", "reals") == VK::Equal);
  CHECK(kind(Principle::Bup, "finite{1,2}", "finite{1,2,3}") == VK::FirstSmaller);
  CHECK(kind(Principle::Bup, "finite{1,2}", "interval(0,1)") == VK::FirstSmaller);
  CHECK(kind(Principle::Bup, "naturals", "interval(0,1)") == VK::Equal);
  CHECK(kind(Principle::Bup, "interval(0,1) | interval(5,6)", "naturals") == VK::Equal);

  const Verdict v = bup_verdict(S("naturals"), S("reals"));
  const auto* hotel = std::get_if<HilbertHotelWitness>(&v.witness);
  REQUIRE(hotel);
  // f is injective on the chain and misses b; g(a_0) = b and g(a_{i+1}) = f(a_i),
  // so ran(g) = ran(f) ∪ {b}
  const std::size_t k = hotel->chain.size();
  REQUIRE(k >= 4);
  REQUIRE(hotel->f.size() == k);
  REQUIRE(hotel->g.size() == k);
  std::set<Rational> ran_f;
  for (std::size_t i = 0; i < k; ++i) {
    CHECK(hotel->f[i].first == hotel->chain[i]);
    CHECK(hotel->g[i].first == hotel->chain[i]);
    CHECK(ran_f.insert(hotel->f[i].second).second);
    CHECK(hotel->f[i].second != hotel->missed);
    if (i > 0) CHECK(hotel->g[i].second == hotel->f[i - 1].second);
  }
  CHECK(hotel->g[0].second == hotel->missed);

  const Verdict fin = bup_verdict(S("finite{1,2}"), S("finite{1,2,3}"));
  const auto* table = std::get_if<FunctionTable>(&fin.witness);
  REQUIRE(table);
  CHECK(table->f.size() == 2);
  for (const auto& [x, y] : table->f) CHECK(y != table->missed);
}

TEST_CASE("brute-force oracle") {
  CHECK(bup_bruteforce_oracle({1, 2}, {1, 2, 3}).kind == VK::FirstSmaller);
  CHECK(bup_bruteforce_oracle({1}, {1}).kind == VK::Equal);
  CHECK(bup_bruteforce_oracle({1, 2, 3}, {1, 2}).kind == VK::FirstGreater);
  CHECK(bup_bruteforce_oracle({}, {}).kind == VK::Equal);
  CHECK(bup_bruteforce_oracle({}, {4}).kind == VK::FirstSmaller);
  try {
    bup_bruteforce_oracle({1, 2, 3, 4, 5, 6}, {1});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SizeLimit);
  }
}

TEST_CASE("BuP matches the oracle on small explicit sets") {
  const auto subsets = small_subsets();
  for (const auto& a : subsets) {
    for (const auto& b : subsets) {
      const VK expected = bup_bruteforce_oracle(a, b).kind;
      CHECK(bup_verdict(SetExpr::finite(a), SetExpr::finite(b)).kind == expected);
    }
  }
}

TEST_CASE("Bettazzi's principle") {
  const Verdict nat = bettazzi_check(S("naturals"), S("naturals"));
  CHECK(nat.kind == VK::Refuted);
  const auto* w = std::get_if<InjectionWitness>(&nat.witness);
  REQUIRE(w);
  CHECK(w->formula == "n ↦ n+1");
  CHECK(w->missed == 0);

  const Verdict sq = bettazzi_check(S("naturals"), S("squares"));
  CHECK(sq.kind == VK::Refuted);
  CHECK(std::get<InjectionWitness>(sq.witness).formula == "n ↦ (n+1)^2");
  CHECK(kind(Principle::Bettazzi, "finite{1,2}", "finite{3,4}") == VK::Holds);
  CHECK(kind(Principle::Bettazzi, "reals", "realspos") == VK::Unknown);
}

TEST_CASE("Bettazzi witnesses are injective and miss a point") {
  for (const auto& e : Catalog::builtin().entries()) {
    if (e.set.sort() != Sort::Naturals || classify_size(e.set).is_finite()) continue;
    CAPTURE(e.name);
    const Verdict v = bettazzi_check(e.set, e.set, PrincipleOptions{200});
    REQUIRE(v.kind == VK::Refuted);
    const auto& w = std::get<InjectionWitness>(v.witness);
    REQUIRE(w.prefix.size() == 200);
    std::set<Element> seen;
    for (const auto& [x, y] : w.prefix) {
      CHECK(contains(e.set, x));
      CHECK(contains(e.set, y));
      CHECK(seen.insert(y).second);
      CHECK(y != w.missed);
    }
    CHECK(contains(e.set, w.missed));
  }
}

TEST_CASE("principle agreements") {
  cardlab::testing::Gen g(51);
  std::vector<SetExpr> pool;
  for (const auto& e : Catalog::builtin().entries()) pool.push_back(e.set);
  for (int i = 0; i < 60; ++i) pool.push_back(g.coin() ? g.nat_set() : g.real_set());
  for (const auto& a : pool) {
    for (const auto& b : pool) {
      const VK bup = bup_verdict(a, b).kind;
      CHECK(bup == peano_principle_verdict(a, b).kind);
      if (classify_size(a).is_finite() && classify_size(b).is_finite()) {
        CHECK(cp_verdict(a, b).kind == bup);
      }
    }
  }
}

TEST_CASE("conflict reports") {
  const ConflictReport r = galileo_report(S("squares"), S("naturals"));
  CHECK(r.find(Principle::Cp)->kind == VK::Equal);
  CHECK(r.find(Principle::Pwp)->kind == VK::FirstSmaller);
  CHECK(r.find(Principle::Peano)->kind == VK::Equal);
  CHECK(r.find(Principle::Bup)->kind == VK::Equal);
  CHECK(r.conflict);
  CHECK(r.tag == "Galileo");
  CHECK(r.density_first == Rational(0));
  CHECK(r.density_second == Rational(1));

  const ConflictReport same = galileo_report(S("evens"), S("evens"));
  CHECK_FALSE(same.conflict);
  for (Principle p : {Principle::Cp, Principle::Pwp, Principle::Peano, Principle::Bup}) {
    CHECK(same.find(p)->kind == VK::Equal);
  }

  const ConflictReport ev = galileo_report(S("evens"), S("naturals"));
  CHECK(ev.conflict);
  CHECK(ev.density_first == Rational(1, 2));

  const ConflictReport f = galileo_report(S("naturals"), S("realspos"));
  CHECK(f.tag == "Formulaire");
  CHECK_FALSE(f.density_second.has_value());

  const ConflictReport only = galileo_report(S("evens"), S("odds"), {Principle::Pwp});
  CHECK(only.verdicts.size() == 1);
  CHECK(only.find(Principle::Cp) == nullptr);
}

TEST_CASE("conflict flag is symmetric") {
  const auto& entries = Catalog::builtin().entries();
  for (const auto& a : entries) {
    for (const auto& b : entries) {
      CHECK(galileo_report(a.set, b.set).conflict == galileo_report(b.set, a.set).conflict);
    }
  }
}

TEST_CASE("contradiction relation") {
  const Verdict eq{VK::Equal, {}}, lt{VK::FirstSmaller, {}}, gt{VK::FirstGreater, {}},
      none{VK::NoVerdict, {}}, unknown{VK::Unknown, {}};
  CHECK(contradicts(eq, lt));
  CHECK(contradicts(gt, eq));
  CHECK(contradicts(lt, gt));
  CHECK_FALSE(contradicts(lt, lt));
  CHECK_FALSE(contradicts(eq, none));
  CHECK_FALSE(contradicts(unknown, lt));
}

TEST_CASE("principle names") {
  for (Principle p : kAllPrinciples) CHECK(principle_from_string(to_string(p)) == p);
  CHECK_FALSE(principle_from_string("euclid"));
}
