#pragma once

// Test-only reference implementations written straight from the definitions,
// deliberately sharing no code with the library paths they check.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cimset/graphs.hpp"
#include "cimset/imsets.hpp"
#include "cimset/scoring.hpp"

namespace testing_support {

using namespace cimset;

inline std::string fixture(const std::string& name) { return std::string(CIMSET_FIXTURE_DIR) + "/" + name; }

// c(T) = 1 iff some node of T has every other node of T among its parents.
inline std::uint8_t glossary_imset_value(const ParentMap& g, const std::vector<std::size_t>& t) {
  for (std::size_t head : t) {
    bool all = true;
    for (std::size_t other : t)
      if (other != head && !((g.parents(head) >> other) & 1)) all = false;
    if (all) return 1;
  }
  return 0;
}

// Value of the glossary imset at coordinate (child, parents).
inline std::uint8_t glossary_at(const ParentMap& g, std::size_t child, Subset parents) {
  std::vector<std::size_t> t{child};
  for (std::size_t k = 0; k < 64; ++k)
    if ((parents >> k) & 1) t.push_back(k);
  return glossary_imset_value(g, t);
}

// Inclusion-exclusion over all subsets, O(3^k).
inline double naive_mobius(const std::vector<double>& h, Subset f) {
  double total = 0.0;
  for (Subset g = f;; g = (g - 1) & f) {
    const int parity = __builtin_popcountll(f) - __builtin_popcountll(g);
    total += (parity % 2 == 0 ? 1.0 : -1.0) * h[g];
    if (g == 0) break;
  }
  return total;
}

inline ScoreTable random_table(const FamilySpec& spec, std::mt19937_64& rng, bool integers = false) {
  ScoreTable table(spec);
  std::uniform_real_distribution<double> real(-50.0, 0.0);
  std::uniform_int_distribution<int> whole(-20, 20);
  for (std::size_t i = 0; i < spec.size(); ++i)
    for (std::size_t pos = 0; pos < table.parent_sets(i).size(); ++pos)
      table.set_at(i, pos, integers ? double(whole(rng)) : real(rng));
  return table;
}

inline ParentMap random_member(const FamilySpec& spec, std::mt19937_64& rng) {
  std::vector<Subset> parents(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const auto sets = spec.admissible_sets(i);
    parents[i] = sets[rng() % sets.size()];
  }
  return ParentMap(spec.ordering_ptr(), parents);
}

inline std::vector<CharImset> cloud_of(const FamilySpec& spec, const IndexPtr& index) {
  std::vector<CharImset> out;
  for (const auto& g : enumerate_family(spec)) out.push_back(characteristic_imset(g, index));
  return out;
}

}  // namespace testing_support
