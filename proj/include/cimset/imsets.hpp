#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cimset/graphs.hpp"

namespace cimset {

// One imset entry: the set T = parents ∪ {child}. `parents` is a global
// subset, nonempty and contained in the child's ceiling.
struct Coordinate {
  std::size_t child;
  Subset parents;
};

// The block coordinate system of a family. Each child with a nonempty
// ceiling owns a contiguous block of 2^|ceiling| - 1 coordinates, one per
// nonempty subset of its ceiling, in graded-lex order. Subsets outside the
// ceiling are identically zero on the family and are not stored.
class CoordinateIndex {
 public:
  struct Block {
    std::size_t child;
    std::vector<unsigned> members;  // ceiling positions, ascending
    std::size_t offset;
    std::size_t length;
  };

  // Throws UnsupportedError for capped families.
  explicit CoordinateIndex(FamilySpec spec);

  const FamilySpec& spec() const { return spec_; }
  std::size_t size() const { return size_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  // nullptr when the child has an empty ceiling.
  const Block* block_of(std::size_t child) const;
  const Block& require_block(std::size_t child) const;

  Coordinate coordinate(std::size_t position) const;
  // Throws DomainError if the subset is empty or leaves the ceiling.
  std::size_t position(std::size_t child, Subset parents) const;
  // Offset of a nonempty local mask inside a block.
  std::size_t local_position(const Block& block, Subset local) const;
  Subset local_subset(const Block& block, std::size_t offset_in_block) const;

  // "<child> <comma-separated parents>"
  std::string label(std::size_t position) const;

 private:
  FamilySpec spec_;
  std::vector<Block> blocks_;
  std::vector<std::size_t> block_lookup_;
  std::size_t size_ = 0;
};

using IndexPtr = std::shared_ptr<const CoordinateIndex>;
IndexPtr coordinate_index(const FamilySpec& spec);

// Characteristic imset of a family member restricted to the family's
// coordinates: bit (i, S) is 1 iff S is contained in the parent set of i.
class CharImset {
 public:
  CharImset(IndexPtr index, std::vector<std::uint8_t> bits);

  const CoordinateIndex& index() const { return *index_; }
  const IndexPtr& index_ptr() const { return index_; }
  std::size_t size() const { return bits_.size(); }
  std::span<const std::uint8_t> bits() const { return bits_; }
  std::uint8_t operator[](std::size_t position) const { return bits_[position]; }
  std::size_t weight() const;

  friend bool operator==(const CharImset& a, const CharImset& b) {
    return a.bits_ == b.bits_ && (a.index_ == b.index_ || a.index_->spec() == b.index_->spec());
  }

 private:
  IndexPtr index_;
  std::vector<std::uint8_t> bits_;
};

CharImset characteristic_imset(const ParentMap& g, const IndexPtr& index);
// Inverse of characteristic_imset. Throws NotAVertexError naming the first
// coordinate that breaks the product formula.
ParentMap imset_to_graph(const CharImset& c);
// Contiguous block of one child; throws DomainError if the child has none.
std::span<const std::uint8_t> block_slice(const CharImset& c, std::size_t child);

// One line per coordinate: "<child> <parents> <0|1>".
std::string imset_text(const CharImset& c);

// The imset over every T ⊆ N with |T| ≥ 2, graded-lex order over global
// positions. Only for cross-tool comparison; requires |N| ≤ 24.
struct FullEntry {
  Subset set;
  std::uint8_t value;
};
std::vector<FullEntry> full_imset(const ParentMap& g);

}  // namespace cimset
