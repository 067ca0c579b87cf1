#include "cimset/imsets.hpp"

#include <algorithm>
#include <limits>

#include "cimset/errors.hpp"

namespace cimset {

namespace {
constexpr std::size_t kNoBlock = std::numeric_limits<std::size_t>::max();
}

CoordinateIndex::CoordinateIndex(FamilySpec spec) : spec_(std::move(spec)) {
  if (spec_.has_cap())
    throw UnsupportedError(
        "families with a max_parents cap have no closed-form coordinate system; only learning "
        "accepts them");
  block_lookup_.assign(spec_.size(), kNoBlock);
  for (std::size_t child = 0; child < spec_.size(); ++child) {
    const Subset ceiling = spec_.ceiling(child);
    if (ceiling == 0) continue;
    const unsigned k = cardinality(ceiling);
    if (k > kMaxBlockWidth)
      throw LimitError("node '" + spec_.ordering().name(child) + "' has a block of 2^" +
                       std::to_string(k) + " - 1 coordinates; the limit is 2^" +
                       std::to_string(kMaxBlockWidth));
    graded_lex_table(k);
    const std::size_t length = (std::size_t{1} << k) - 1;
    block_lookup_[child] = blocks_.size();
    blocks_.push_back(Block{child, members_of(ceiling), size_, length});
    size_ += length;
  }
}

const CoordinateIndex::Block* CoordinateIndex::block_of(std::size_t child) const {
  if (child >= block_lookup_.size() || block_lookup_[child] == kNoBlock) return nullptr;
  return &blocks_[block_lookup_[child]];
}

const CoordinateIndex::Block& CoordinateIndex::require_block(std::size_t child) const {
  if (child >= block_lookup_.size())
    throw DomainError("child position " + std::to_string(child) + " is out of range");
  if (const Block* b = block_of(child)) return *b;
  throw DomainError("node '" + spec_.ordering().name(child) + "' has no coordinate block");
}

std::size_t CoordinateIndex::local_position(const Block& block, Subset local) const {
  const auto& table = graded_lex_table(static_cast<unsigned>(block.members.size()));
  return table.rank[local] - 1;
}

Subset CoordinateIndex::local_subset(const Block& block, std::size_t offset_in_block) const {
  const auto& table = graded_lex_table(static_cast<unsigned>(block.members.size()));
  return table.order[offset_in_block + 1];
}

Coordinate CoordinateIndex::coordinate(std::size_t position) const {
  if (position >= size_) throw DomainError("coordinate position out of range");
  auto it = std::upper_bound(blocks_.begin(), blocks_.end(), position,
                             [](std::size_t p, const Block& b) { return p < b.offset; });
  const Block& block = *(it - 1);
  return Coordinate{block.child, deposit(local_subset(block, position - block.offset), block.members)};
}

std::size_t CoordinateIndex::position(std::size_t child, Subset parents) const {
  const Block& block = require_block(child);
  if (parents == 0 || !is_subset(parents, spec_.ceiling(child)))
    throw DomainError("no coordinate for node '" + spec_.ordering().name(child) + "' with parents {" +
                      spec_.ordering().format(parents) + "}");
  return block.offset + local_position(block, extract(parents, block.members));
}

std::string CoordinateIndex::label(std::size_t position) const {
  const Coordinate c = coordinate(position);
  return spec_.ordering().name(c.child) + " " + spec_.ordering().format(c.parents);
}

IndexPtr coordinate_index(const FamilySpec& spec) {
  return std::make_shared<const CoordinateIndex>(spec);
}

// ---------------------------------------------------------------------------

CharImset::CharImset(IndexPtr index, std::vector<std::uint8_t> bits)
    : index_(std::move(index)), bits_(std::move(bits)) {
  if (!index_) throw DomainError("imset without coordinate index");
  if (bits_.size() != index_->size())
    throw DomainError("imset has " + std::to_string(bits_.size()) + " entries; the index has " +
                      std::to_string(index_->size()));
  for (auto b : bits_)
    if (b > 1) throw DomainError("imset entries must be 0 or 1");
}

std::size_t CharImset::weight() const {
  return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

CharImset characteristic_imset(const ParentMap& g, const IndexPtr& index) {
  if (!index) throw DomainError("null coordinate index");
  require_member(index->spec(), g);
  std::vector<std::uint8_t> bits(index->size(), 0);
  for (const auto& block : index->blocks()) {
    const Subset pa = extract(g.parents(block.child), block.members);
    // Every nonempty submask of the parent set is a 1-coordinate.
    for (Subset s = pa; s != 0; s = (s - 1) & pa)
      bits[block.offset + index->local_position(block, s)] = 1;
  }
  return CharImset(index, std::move(bits));
}

ParentMap imset_to_graph(const CharImset& c) {
  const auto& index = c.index();
  const auto& ordering = index.spec().ordering();
  std::vector<Subset> parents(index.spec().size(), 0);
  for (const auto& block : index.blocks()) {
    const unsigned k = static_cast<unsigned>(block.members.size());
    Subset pa = 0;
    for (unsigned j = 0; j < k; ++j)
      if (c[block.offset + index.local_position(block, singleton(j))]) pa |= singleton(j);
    for (std::size_t off = 0; off < block.length; ++off) {
      const Subset s = index.local_subset(block, off);
      const std::uint8_t expected = is_subset(s, pa) ? 1 : 0;
      if (c[block.offset + off] != expected)
        throw NotAVertexError("coordinate (" + index.label(block.offset + off) + ") is " +
                              std::to_string(c[block.offset + off]) +
                              " but the product of its singleton coordinates is " +
                              std::to_string(expected));
    }
    parents[block.child] = deposit(pa, block.members);
  }
  ParentMap g(index.spec().ordering_ptr(), std::move(parents));
  for (std::size_t i = 0; i < g.size(); ++i)
    if (!index.spec().admissible(i, g.parents(i)))
      throw NotAVertexError("parent set {" + ordering.format(g.parents(i)) + "} of '" +
                            ordering.name(i) + "' lies outside the family");
  return g;
}

std::span<const std::uint8_t> block_slice(const CharImset& c, std::size_t child) {
  const auto& block = c.index().require_block(child);
  return c.bits().subspan(block.offset, block.length);
}

std::string imset_text(const CharImset& c) {
  std::string out;
  for (std::size_t p = 0; p < c.size(); ++p) {
    out += c.index().label(p);
    out += ' ';
    out += static_cast<char>('0' + c[p]);
    out += '\n';
  }
  return out;
}

std::vector<FullEntry> full_imset(const ParentMap& g) {
  const std::size_t n = g.size();
  if (n > 24) throw LimitError("full imset export is limited to 24 nodes");
  const auto& table = graded_lex_table(static_cast<unsigned>(n));
  std::vector<FullEntry> out;
  out.reserve(table.order.size() - n - 1);
  for (Subset t : table.order) {
    if (cardinality(t) < 2) continue;
    const unsigned last = 63 - static_cast<unsigned>(std::countl_zero(t));
    const Subset rest = t & ~singleton(last);
    out.push_back(FullEntry{t, static_cast<std::uint8_t>(is_subset(rest, g.parents(last)) ? 1 : 0)});
  }
  return out;
}

}  // namespace cimset
