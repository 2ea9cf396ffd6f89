#include <doctest.h>

#include "cardlab/error.hpp"
#include "cardlab/ordinal.hpp"
#include "cardlab/parser.hpp"
#include "support/generators.hpp"
#include "support/ordinal_oracle.hpp"

using namespace cardlab;
using cardlab::testing::Gen;
using cardlab::testing::OrdinalOracle;

namespace {

Ordinal O(const char* s) { return parse_ord_expr(s); }
Ordinal fin(int n) { return Ordinal::finite(n); }
const Ordinal w = Ordinal::omega();

}  // namespace

TEST_CASE("ordinal construction and printing") {
  CHECK(Ordinal().is_zero());
  CHECK(fin(0).is_zero());
  CHECK(fin(7).finite_value() == Natural(7));
  CHECK(w.is_limit());
  CHECK_FALSE(ord_add(w, fin(1)).is_limit());
  CHECK(O("w^2*3 + w*2 + 5").to_string() == "w^2*3 + w*2 + 5");
  CHECK(O("w^2*3 + w*2 + 5").pretty() == "ω²·3+ω·2+5");
  CHECK(O("w^w").pretty() == "ω^ω");
  CHECK(O("w^(w+1)").to_string() == "w^(w + 1)");
  CHECK(O("w^(w+1)").leading_exponent() == ord_add(w, fin(1)));
}

TEST_CASE("from_terms rejects non-canonical term lists") {
  CHECK_NOTHROW(Ordinal::from_terms({{fin(2), 1}, {fin(0), 4}}));
  CHECK_THROWS_AS(Ordinal::from_terms({{fin(0), 1}, {fin(2), 1}}), Error);
  CHECK_THROWS_AS(Ordinal::from_terms({{fin(1), 0}}), Error);
  CHECK_THROWS_AS(Ordinal::from_terms({{fin(1), 1}, {fin(1), 2}}), Error);
}

TEST_CASE("absorption and non-commutativity") {
  CHECK(ord_add(fin(1), w) == w);
  CHECK(ord_add(w, fin(1)) != w);
  CHECK(ord_mul(fin(2), w) == w);
  CHECK(ord_mul(w, fin(2)) != w);
  CHECK(ord_add(w, ord_pow(w, fin(2))) == ord_pow(w, fin(2)));
  // (1+1)*w = w, but 1*w + 1*w = w*2
  CHECK(ord_mul(ord_add(fin(1), fin(1)), w) != ord_add(ord_mul(fin(1), w), ord_mul(fin(1), w)));
}

TEST_CASE("powers") {
  CHECK(ord_pow(fin(2), w) == w);
  CHECK(ord_pow(fin(2), ord_add(w, fin(1))) == ord_mul(w, fin(2)));
  CHECK(ord_pow(fin(3), O("w*2+2")) == O("w^2*9"));
  CHECK(ord_pow(O("w*2"), ord_add(w, fin(1))) == O("w^(w+1)*2"));
  CHECK(ord_pow(fin(2), O("w^2")) == O("w^w"));
  CHECK(ord_pow(fin(0), fin(3)).is_zero());
  CHECK(ord_pow(fin(0), w).is_zero());
  CHECK(ord_pow(fin(1), O("w^w")) == fin(1));
  CHECK(ord_pow(fin(2), fin(10)) == fin(1024));
  CHECK_THROWS_WITH_AS(ord_pow(fin(0), fin(0)), doctest::Contains("0^0"), Error);
}

TEST_CASE("cardinality of ordinals") {
  CHECK(ord_cardinality(fin(5)) == Cardinal::finite(5));
  CHECK(ord_cardinality(O("w^w + 3")) == Cardinal::aleph(0));
}

TEST_CASE("laws on random ordinals") {
  Gen g(11);
  for (int i = 0; i < 300; ++i) {
    const Ordinal a = g.ordinal(), b = g.ordinal(), c = g.ordinal();
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CAPTURE(c.to_string());
    CHECK(ord_add(ord_add(a, b), c) == ord_add(a, ord_add(b, c)));
    CHECK(ord_mul(ord_mul(a, b), c) == ord_mul(a, ord_mul(b, c)));
    // left distributivity holds
    CHECK(ord_mul(a, ord_add(b, c)) == ord_add(ord_mul(a, b), ord_mul(a, c)));
    CHECK(ord_add(a, b) >= b);
    if (!b.is_zero()) CHECK(ord_add(a, b) > a);
    CHECK(is_canonical(ord_add(a, b).terms()));
    CHECK(is_canonical(ord_mul(a, b).terms()));
    CHECK(parse_ord_expr(a.to_string()) == a);
  }
}

TEST_CASE("exponent laws on small ordinals") {
  Gen g(12);
  for (int i = 0; i < 200; ++i) {
    const Ordinal a = ord_add(Ordinal::omega_power(fin(g.uniform(0, 2)), g.uniform(1, 3)),
                              fin(g.uniform(0, 3)));
    const Ordinal b = O(g.coin() ? "w" : "2");
    const Ordinal c = fin(g.uniform(0, 3));
    CAPTURE(a.to_string());
    CHECK(ord_mul(ord_pow(a, b), ord_pow(a, c)) == ord_pow(a, ord_add(b, c)));
    CHECK(ord_pow(ord_pow(a, b), c) == ord_pow(a, ord_mul(b, c)));
  }
}

TEST_CASE("oracle agrees with CNF arithmetic on a sample") {
  OrdinalOracle oracle;
  Gen g(13);
  for (int i = 0; i < 100; ++i) {
    OrdinalOracle::Vec x{}, y{};
    for (int j = 0; j < 3; ++j) {
      x[j] = g.uniform(0, 3);
      y[j] = g.uniform(0, 3);
    }
    const Ordinal a = OrdinalOracle::to_ordinal(x), b = OrdinalOracle::to_ordinal(y);
    CAPTURE(a.to_string());
    CAPTURE(b.to_string());
    CHECK(OrdinalOracle::from_ordinal(ord_add(a, b)) == oracle.add(x, y));
    CHECK(OrdinalOracle::from_ordinal(ord_mul(a, b)) == oracle.mul(x, y));
    CHECK(OrdinalOracle::less(x, y) == (a < b));
  }
}

TEST_CASE("oracle agrees on powers below omega^8") {
  OrdinalOracle oracle;
  const char* bases[] = {"2", "3", "w", "w+1", "w*2", "w^2+3"};
  const char* exps[] = {"0", "1", "2", "3", "w", "w+1", "w+2", "w*2"};
  for (const char* bs : bases) {
    for (const char* es : exps) {
      const Ordinal r = ord_pow(O(bs), O(es));
      if (r.leading_exponent() >= fin(OrdinalOracle::K)) continue;
      CAPTURE(bs);
      CAPTURE(es);
      try {
        CHECK(OrdinalOracle::from_ordinal(r) ==
              oracle.pow(OrdinalOracle::from_ordinal(O(bs)), OrdinalOracle::from_ordinal(O(es))));
      } catch (const std::out_of_range&) {
        // the recursion passes through values past omega^8
      }
    }
  }
}
