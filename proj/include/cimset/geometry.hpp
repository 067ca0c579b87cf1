#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cimset/graphs.hpp"
#include "cimset/imsets.hpp"
#include "cimset/rational.hpp"

namespace cimset {

// ---------------------------------------------------------------------------
// Product of simplices

// The block of one child is a (2^k - 1)-simplex, k = |ceiling \ floor|.
// `multiplicity` counts the coordinate groups {T : T ∩ floor = fixed part}
// that each carry an affine copy of that simplex. The copies move together,
// so they add coordinates but not dimension.
struct SimplexFactor {
  std::size_t child;
  unsigned free_parents;
  std::uint64_t dimension;
  std::uint64_t multiplicity;
};

struct ProductStructure {
  std::vector<SimplexFactor> factors;
  std::uint64_t total_dimension = 0;
};

// Throws UnsupportedError for capped families.
ProductStructure product_structure(const FamilySpec& spec);

// ---------------------------------------------------------------------------
// Facets of one simplex block

struct FacetEntry {
  Subset column;  // empty set = constant term
  int coefficient;
};

// Rows of D_k: for s ⊆ t, d(s, t) = (-1)^{|t|-|s|}, otherwise 0. Rows are
// produced on demand; each has 2^{k-|s|} nonzeros.
class FacetSystem {
 public:
  explicit FacetSystem(unsigned k);

  unsigned width() const { return width_; }
  std::size_t row_count() const { return std::size_t{1} << width_; }

  int coefficient(Subset s, Subset t) const;
  // Nonzero entries of row s, columns in graded-lex order (constant first).
  std::vector<FacetEntry> row(Subset s) const;
  // Full matrix, rows and columns in graded-lex order with the empty set
  // first. Only for k ≤ kDenseFacetWidth.
  std::vector<std::vector<int>> dense() const;

 private:
  unsigned width_;
};

inline constexpr unsigned kDenseFacetWidth = 10;

FacetSystem facet_matrix(unsigned k);

// d(s, ∅) + Σ_t d(s, t) x_t where `block` lists x over the nonempty subsets of
// {0..k-1} in graded-lex order. On the vertex with parent set s' this is
// [s == s'].
std::int64_t facet_evaluate(const FacetSystem& sys, Subset s, std::span<const std::uint8_t> block);
Rational facet_evaluate(const FacetSystem& sys, Subset s, std::span<const Rational> block);

// A facet of the whole family polytope: one block row padded with zeros.
// Coordinates are positions in the family's CoordinateIndex; on children with
// a floor the row acts on the group of coordinates that contain the floor.
struct BlockFacet {
  std::size_t child;
  Subset row;  // global subset of the child's free parents
  int constant;
  std::vector<std::pair<std::size_t, int>> terms;
};

std::vector<BlockFacet> block_facets(const CoordinateIndex& index, std::size_t child,
                                     std::optional<Subset> row = std::nullopt);

// ---------------------------------------------------------------------------
// Edges

// True iff exactly one child has different parent sets. Throws
// DegeneratePairError for identical graphs.
bool are_neighbors(const ParentMap& g1, const ParentMap& g2, const FamilySpec& spec);

// Streams the neighbours of g: child by child, every other admissible parent
// set in graded-lex order.
class NeighborEnumerator {
 public:
  NeighborEnumerator(const FamilySpec& spec, const ParentMap& g,
                     std::uint64_t limit = enumeration_limit());

  std::uint64_t size() const { return size_; }
  std::optional<ParentMap> next();

 private:
  ParentMap base_;
  std::vector<std::vector<Subset>> candidates_;
  std::size_t child_ = 0;
  std::size_t cursor_ = 0;
  std::uint64_t size_ = 0;
};

std::vector<ParentMap> neighbors(const ParentMap& g, const FamilySpec& spec,
                                 std::uint64_t limit = enumeration_limit());

// Location of a point relative to the edge structure. When every block is a
// vertex, `is_vertex` is set, first == second and lambda == 1.
struct EdgeDecomposition {
  std::size_t child;
  ParentMap first;
  ParentMap second;
  Rational lambda;  // weight of `first`
  bool is_vertex;
};

// Returns the decomposition when all blocks but at most one are vertices and
// the remaining block is a proper convex combination of exactly two block
// vertices; nullopt otherwise (including points outside the polytope).
std::optional<EdgeDecomposition> edge_point_decompose(std::span<const Rational> x,
                                                      const CoordinateIndex& index);

}  // namespace cimset
