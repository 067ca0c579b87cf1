#pragma once

// Brute-force certification of the closed-form geometry. Nothing here calls
// into geometry.hpp: verdicts come from exact linear programming and rank
// computations over the explicit vertex cloud.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cimset/graphs.hpp"
#include "cimset/imsets.hpp"
#include "cimset/rational.hpp"
#include "cimset/scoring.hpp"

namespace cimset {

inline constexpr std::size_t kMaxLpSize = 4096;
inline constexpr std::size_t kMaxCloudSize = std::size_t{1} << 16;

// Feasible point of { x >= 0 : A_i x = b_i for rows flagged in `equalities`,
// A_i x <= b_i otherwise }, or nullopt if the system is infeasible.
// Two-phase simplex (phase one only) with Bland's rule over exact rationals.
std::optional<RationalVector> lp_feasible(const RationalMatrix& a, const RationalVector& b,
                                          const std::vector<bool>& equalities);

enum class ClaimKind { adjacency, non_adjacency, facet, dimension, separation };
const char* to_string(ClaimKind kind);

// The verdict of one check together with the data needed to replay it:
//  adjacency      witness = cost vector w with w·v1 = w·v2 > w·u for other u
//                 (empty if synthesis was skipped)
//  non_adjacency  witness = convex weights on `support`, averaging to (v1+v2)/2
//  facet          witness = (constant, coefficients) of the inequality
//  separation     witness = cost vector, as for adjacency
//  dimension      witness = { rank }
struct Certificate {
  ClaimKind kind;
  bool verified = false;
  std::vector<std::size_t> subjects;  // cloud indices the claim is about
  RationalVector witness;
  std::vector<std::size_t> support;
  std::string note;
};

struct AdjacencyOptions {
  bool synthesize_witness = true;
};

// Two vertices of a 0/1 polytope are adjacent iff their midpoint is not a
// convex combination of the remaining vertices. Throws DegeneratePairError
// if the two cloud entries coincide.
Certificate oracle_adjacent(const std::vector<CharImset>& cloud, std::size_t first, std::size_t second,
                            const AdjacencyOptions& options = {});

// Exact rank over the rationals of { v - v0 : v in cloud }.
std::size_t affine_dimension(const std::vector<CharImset>& cloud);
std::size_t affine_dimension(const std::vector<std::vector<std::uint8_t>>& cloud);

// An inequality const + Σ coef·x ≥ 0 over the coordinates of a single-block
// family, claimed to be the facet opposite the vertex with parent set `row`
// (a local mask over the block's members).
struct FacetRow {
  Subset row;
  std::vector<std::int64_t> coefficients;  // [0] = constant, then block coordinates
};

// Dense form of row s of D_k, laid out as FacetRow expects.
FacetRow dense_facet_row(unsigned k, Subset s);

// cloud must be every vertex of a family with exactly one coordinate block.
Certificate oracle_facet_check(const FacetRow& row, const std::vector<CharImset>& cloud);

// Cost vectors built by the case analysis for one-block families:
// w·c(pa1) = w·c(pa2) > w·c(P) for every other admissible P. Parent sets are
// global subsets; the vector is laid out over the family coordinates and
// other blocks get a term that singles out `rest`'s parent set there.
RationalVector closed_form_witness(const CoordinateIndex& index, const ParentMap& g1, const ParentMap& g2);

// Checks a separation witness against the full vertex cloud.
Certificate check_separation(const RationalVector& w, const std::vector<CharImset>& cloud,
                             std::size_t first, std::size_t second);

// Re-verifies a certificate by direct arithmetic against the cloud.
bool replay(const Certificate& cert, const std::vector<CharImset>& cloud);

// Exhaustive maximiser of Σ_i local(i, pa(i)); ties go to the first member in
// canonical enumeration order.
inline constexpr std::uint64_t kBruteForceLimit = std::uint64_t{1} << 20;
ParentMap learn_bruteforce(const FamilySpec& spec, const ScoreTable& table);

}  // namespace cimset
