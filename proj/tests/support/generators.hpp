#pragma once

// Seeded random generators shared by the property tests.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "cardlab/cardinal.hpp"
#include "cardlab/error.hpp"
#include "cardlab/ordinal.hpp"
#include "cardlab/set_expr.hpp"

namespace cardlab::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }
  bool coin() { return uniform(0, 1) == 1; }
  std::mt19937_64& engine() { return rng_; }

  std::vector<Element> elements(std::size_t max_count, Element max_value) {
    std::vector<Element> out(static_cast<std::size_t>(uniform(0, max_count)));
    for (auto& e : out) e = uniform(0, max_value);
    return out;
  }

  /// Ordinal below omega^omega^2 or so, built from random CNF terms.
  Ordinal ordinal(int depth = 2) {
    Ordinal out;
    const int terms = static_cast<int>(uniform(0, 3));
    std::vector<Ordinal> exps;
    for (int i = 0; i < terms; ++i) {
      exps.push_back(depth > 0 && uniform(0, 3) == 0 ? ordinal(depth - 1)
                                                     : Ordinal::finite(uniform(0, 4)));
    }
    std::sort(exps.begin(), exps.end(), std::greater<>());
    exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
    for (const auto& e : exps) out = ord_add(out, Ordinal::omega_power(e, uniform(1, 9)));
    return out;
  }

  Cardinal cardinal() {
    switch (uniform(0, 3)) {
      case 0: return Cardinal::aleph(static_cast<std::uint32_t>(uniform(0, 3)));
      case 1: return Cardinal::continuum();
      default: return Cardinal::finite(uniform(0, 1000));
    }
  }

  /// Random naturals-sort expression that passes the construction guard.
  SetExpr nat_set(int depth = 3) {
    for (;;) {
      try {
        return nat_set_unchecked(depth);
      } catch (const Error&) {
        // guard or resource rejection; draw again
      }
    }
  }

  /// Random reals-sort expression.
  SetExpr real_set(int depth = 2) {
    if (depth == 0 || uniform(0, 2) == 0) {
      switch (uniform(0, 3)) {
        case 0: return SetExpr::reals();
        case 1: return SetExpr::reals_pos();
        default: {
          const Rational lo(uniform(-20, 20), uniform(1, 6));
          const Rational hi = lo + Rational(uniform(1, 30), uniform(1, 6));
          return SetExpr::interval(lo, hi);
        }
      }
    }
    SetExpr l = real_set(depth - 1);
    SetExpr r = real_set(depth - 1);
    switch (uniform(0, 2)) {
      case 0: return SetExpr::unite(l, r);
      case 1: return SetExpr::intersect(l, r);
      default: return SetExpr::subtract(l, r);
    }
  }

  SetExpr nat_leaf() {
    switch (uniform(0, 7)) {
      case 0: return SetExpr::naturals();
      case 1: return SetExpr::evens();
      case 2: return SetExpr::odds();
      case 3: return SetExpr::squares();
      case 4: return SetExpr::cubes();
      case 5: return SetExpr::progression(uniform(1, 12), uniform(0, 12));
      case 6: {
        std::vector<Element> c{uniform(0, 5), uniform(0, 5), uniform(1, 3)};
        return SetExpr::poly(c);
      }
      default: return SetExpr::finite(elements(5, 40));
    }
  }

 private:
  SetExpr nat_set_unchecked(int depth) {
    if (depth == 0 || uniform(0, 2) == 0) return nat_leaf();
    SetExpr l = nat_set_unchecked(depth - 1);
    SetExpr r = nat_set_unchecked(depth - 1);
    switch (uniform(0, 2)) {
      case 0: return SetExpr::unite(l, r);
      case 1: return SetExpr::intersect(l, r);
      default: return SetExpr::subtract(l, r);
    }
  }

  std::mt19937_64 rng_;
};

}  // namespace cardlab::testing
