#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <vector>

namespace cimset {

// A set of nodes encoded by ordering position: bit k set means the node at
// position k is a member.
using Subset = std::uint64_t;

inline constexpr unsigned kMaxNodes = 64;
// Largest block lattice we are willing to materialise (2^22 subsets).
inline constexpr unsigned kMaxBlockWidth = 22;

inline unsigned cardinality(Subset s) { return static_cast<unsigned>(std::popcount(s)); }
inline bool is_subset(Subset a, Subset b) { return (a & ~b) == 0; }
inline Subset singleton(unsigned k) { return Subset{1} << k; }
inline Subset lower_set(unsigned k) { return k >= 64 ? ~Subset{0} : singleton(k) - 1; }

// Graded-lexicographic order: by cardinality, then lexicographically on the
// sorted member lists. For equal cardinality the set owning the lowest
// differing element comes first.
inline bool graded_lex_less(Subset a, Subset b) {
  const unsigned ca = cardinality(a);
  const unsigned cb = cardinality(b);
  if (ca != cb) return ca < cb;
  if (a == b) return false;
  const Subset lowest = (a ^ b) & (~(a ^ b) + 1);
  return (a & lowest) != 0;
}

// All 2^k subsets of {0..k-1} in graded-lex order together with the inverse
// permutation. Tables are built once per width and shared.
struct GradedLexTable {
  std::vector<Subset> order;        // position -> subset
  std::vector<std::uint32_t> rank;  // subset -> position
};
const GradedLexTable& graded_lex_table(unsigned k);

// Map a mask over positions 0..|members|-1 onto the listed global positions,
// and back.
Subset deposit(Subset local, std::span<const unsigned> members);
Subset extract(Subset global, std::span<const unsigned> members);

std::vector<unsigned> members_of(Subset s);

}  // namespace cimset
