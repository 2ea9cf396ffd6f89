#include <set>
#include <vector>

#include "cardlab/error.hpp"
#include "cardlab/principles.hpp"

namespace cardlab {
namespace {

constexpr std::size_t kOracleLimit = 5;

// Range bitmask (over indices of `to`) of every function from a set of
// size `from_size` into `to_size` points.
std::vector<unsigned> all_ranges(std::size_t from_size, std::size_t to_size) {
  std::vector<unsigned> ranges;
  if (to_size == 0) {
    if (from_size == 0) ranges.push_back(0);  // the empty function
    return ranges;
  }
  std::vector<std::size_t> f(from_size, 0);
  for (;;) {
    unsigned mask = 0;
    for (std::size_t v : f) mask |= 1u << v;
    ranges.push_back(mask);
    std::size_t i = 0;
    while (i < from_size && ++f[i] == to_size) f[i++] = 0;
    if (i == from_size) break;
  }
  return ranges;
}

// |A| smaller than |B|: some f and some b outside ran(f) admit no g with
// ran(f) ⊂ ran(g) (proper) and b in ran(g).
bool smaller_than(std::size_t a_size, std::size_t b_size) {
  const auto ranges = all_ranges(a_size, b_size);
  for (unsigned f : ranges) {
    for (std::size_t b = 0; b < b_size; ++b) {
      const unsigned bit = 1u << b;
      if (f & bit) continue;
      bool greater_exists = false;
      for (unsigned g : ranges) {
        const bool proper_superset = (g & f) == f && g != f;
        if (proper_superset && (g & bit)) {
          greater_exists = true;
          break;
        }
      }
      if (!greater_exists) return true;
    }
  }
  return false;
}

std::size_t distinct_count(const std::vector<Element>& xs) {
  return std::set<Element>(xs.begin(), xs.end()).size();
}

}  // namespace

Verdict bup_bruteforce_oracle(const std::vector<Element>& a, const std::vector<Element>& b) {
  const std::size_t na = distinct_count(a);
  const std::size_t nb = distinct_count(b);
  if (na > kOracleLimit || nb > kOracleLimit) {
    throw Error(ErrorKind::SizeLimit, "principles",
                "brute-force oracle handles at most 5 elements per set");
  }
  const bool ab = smaller_than(na, nb);
  const bool ba = smaller_than(nb, na);
  if (ab && ba) return {VerdictKind::Unknown, {}};
  if (ab) return {VerdictKind::FirstSmaller, {}};
  if (ba) return {VerdictKind::FirstGreater, {}};
  return {VerdictKind::Equal, {}};
}

}  // namespace cardlab
