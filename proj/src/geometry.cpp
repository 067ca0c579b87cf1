#include "cimset/geometry.hpp"

#include <algorithm>

#include "cimset/errors.hpp"

namespace cimset {

ProductStructure product_structure(const FamilySpec& spec) {
  if (spec.has_cap())
    throw UnsupportedError(
        "facets of cim-polytopes under a max_parents cap are not known in closed form; "
        "only the one-block edge rule is available");
  ProductStructure out;
  for (std::size_t child = 0; child < spec.size(); ++child) {
    const unsigned k = cardinality(spec.free(child));
    if (k == 0) continue;
    if (k >= 64) throw LimitError("block too wide");
    SimplexFactor f{child, k, (std::uint64_t{1} << k) - 1,
                    std::uint64_t{1} << cardinality(spec.floor(child))};
    out.total_dimension += f.dimension;
    out.factors.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------------------

FacetSystem::FacetSystem(unsigned k) : width_(k) {
  if (k == 0) throw DomainError("facet matrix needs k >= 1");
  if (k > kMaxBlockWidth)
    throw LimitError("facet matrix D_" + std::to_string(k) + " has 2^" + std::to_string(k) +
                     " rows; the limit is k <= " + std::to_string(kMaxBlockWidth));
}

int FacetSystem::coefficient(Subset s, Subset t) const {
  const Subset all = lower_set(width_);
  if (!is_subset(s, all) || !is_subset(t, all)) throw DomainError("subset outside the facet lattice");
  if (!is_subset(s, t)) return 0;
  return ((cardinality(t) - cardinality(s)) % 2 == 0) ? 1 : -1;
}

std::vector<FacetEntry> FacetSystem::row(Subset s) const {
  const Subset all = lower_set(width_);
  if (!is_subset(s, all)) throw DomainError("row subset outside the facet lattice");
  const Subset rest = all & ~s;
  std::vector<FacetEntry> out;
  out.reserve(std::size_t{1} << cardinality(rest));
  // Enumerate supersets of s as s ∪ (submask of rest).
  Subset extra = 0;
  do {
    const Subset t = s | extra;
    out.push_back(FacetEntry{t, (cardinality(extra) % 2 == 0) ? 1 : -1});
    extra = (extra - rest) & rest;
  } while (extra != 0);
  std::sort(out.begin(), out.end(),
            [](const FacetEntry& a, const FacetEntry& b) { return graded_lex_less(a.column, b.column); });
  return out;
}

std::vector<std::vector<int>> FacetSystem::dense() const {
  if (width_ > kDenseFacetWidth)
    throw LimitError("dense facet matrix is only available for k <= " + std::to_string(kDenseFacetWidth));
  const auto& table = graded_lex_table(width_);
  const std::size_t n = table.order.size();
  std::vector<std::vector<int>> out(n, std::vector<int>(n, 0));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) out[r][c] = coefficient(table.order[r], table.order[c]);
  return out;
}

FacetSystem facet_matrix(unsigned k) { return FacetSystem(k); }

namespace {

template <class T>
T evaluate_row(const FacetSystem& sys, Subset s, std::span<const T> block) {
  const unsigned k = sys.width();
  const std::size_t expected = (std::size_t{1} << k) - 1;
  if (block.size() != expected)
    throw DomainError("block has " + std::to_string(block.size()) + " entries; D_" +
                      std::to_string(k) + " expects " + std::to_string(expected));
  const Subset all = lower_set(k);
  if (!is_subset(s, all)) throw DomainError("row subset outside the facet lattice");
  const auto& table = graded_lex_table(k);
  const Subset rest = all & ~s;
  T total = 0;
  Subset extra = 0;
  do {
    const Subset t = s | extra;
    const int sign = (cardinality(extra) % 2 == 0) ? 1 : -1;
    if (t == 0) {
      total += sign;
    } else {
      const T& x = block[table.rank[t] - 1];
      if (sign > 0) total += x; else total -= x;
    }
    extra = (extra - rest) & rest;
  } while (extra != 0);
  return total;
}

}  // namespace

std::int64_t facet_evaluate(const FacetSystem& sys, Subset s, std::span<const std::uint8_t> block) {
  std::vector<std::int64_t> widened(block.begin(), block.end());
  return evaluate_row<std::int64_t>(sys, s, widened);
}

Rational facet_evaluate(const FacetSystem& sys, Subset s, std::span<const Rational> block) {
  return evaluate_row<Rational>(sys, s, block);
}

std::vector<BlockFacet> block_facets(const CoordinateIndex& index, std::size_t child,
                                     std::optional<Subset> row) {
  const auto& spec = index.spec();
  index.require_block(child);
  const Subset floor = spec.floor(child);
  const auto free_members = members_of(spec.free(child));
  const unsigned k = static_cast<unsigned>(free_members.size());
  if (k == 0) return {};
  const FacetSystem sys(k);
  std::vector<Subset> rows;
  if (row) {
    if (!is_subset(*row, spec.free(child)))
      throw DomainError("facet row {" + spec.ordering().format(*row) + "} is not a set of free parents of '" +
                        spec.ordering().name(child) + "'");
    rows.push_back(extract(*row, free_members));
  } else {
    rows = graded_lex_table(k).order;
  }
  std::vector<BlockFacet> out;
  out.reserve(rows.size());
  for (Subset s : rows) {
    BlockFacet f{child, deposit(s, free_members), 0, {}};
    for (const auto& e : sys.row(s)) {
      if (e.column == 0) {
        f.constant = e.coefficient;
        continue;
      }
      f.terms.emplace_back(index.position(child, floor | deposit(e.column, free_members)), e.coefficient);
    }
    out.push_back(std::move(f));
  }
  return out;
}

// ---------------------------------------------------------------------------

bool are_neighbors(const ParentMap& g1, const ParentMap& g2, const FamilySpec& spec) {
  require_member(spec, g1);
  require_member(spec, g2);
  std::size_t differing = 0;
  for (std::size_t i = 0; i < spec.size(); ++i)
    if (g1.parents(i) != g2.parents(i)) ++differing;
  if (differing == 0) throw DegeneratePairError("a vertex is not its own neighbour");
  return differing == 1;
}

NeighborEnumerator::NeighborEnumerator(const FamilySpec& spec, const ParentMap& g, std::uint64_t limit)
    : base_(g) {
  require_member(spec, g);
  candidates_.resize(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) {
    const std::uint64_t c = spec.admissible_count(i);
    size_ += c - 1;
    if (size_ > limit)
      throw LimitError("vertex has more than " + std::to_string(limit) +
                       " neighbours; enumeration limit exceeded");
  }
  for (std::size_t i = 0; i < spec.size(); ++i) {
    auto sets = spec.admissible_sets(i);
    std::erase(sets, g.parents(i));
    candidates_[i] = std::move(sets);
  }
}

std::optional<ParentMap> NeighborEnumerator::next() {
  while (child_ < candidates_.size() && cursor_ >= candidates_[child_].size()) {
    ++child_;
    cursor_ = 0;
  }
  if (child_ >= candidates_.size()) return std::nullopt;
  return base_.with_parents(child_, candidates_[child_][cursor_++]);
}

std::vector<ParentMap> neighbors(const ParentMap& g, const FamilySpec& spec, std::uint64_t limit) {
  NeighborEnumerator it(spec, g, limit);
  std::vector<ParentMap> out;
  out.reserve(it.size());
  while (auto h = it.next()) out.push_back(std::move(*h));
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Barycentric coordinates of one block of x over the block's simplex
// vertices, indexed by free-lattice mask; nullopt if the block is not in the
// simplex.
std::optional<std::vector<Rational>> block_barycentric(std::span<const Rational> x,
                                                       const CoordinateIndex& index,
                                                       const CoordinateIndex::Block& block) {
  const auto& spec = index.spec();
  const Subset floor = spec.floor(block.child);
  const auto free_members = members_of(spec.free(block.child));
  const unsigned k = static_cast<unsigned>(free_members.size());
  const std::size_t lattice = std::size_t{1} << k;

  // y(t) = x at coordinate floor ∪ t, with y(∅) = x(floor) or 1 when the floor is empty.
  std::vector<Rational> lambda(lattice);
  for (Subset t = 0; t < lattice; ++t) {
    const Subset global = floor | deposit(t, free_members);
    lambda[t] = global == 0 ? Rational(1) : x[index.position(block.child, global)];
  }
  // Superset Möbius transform: λ(s) = Σ_{t ⊇ s} (-1)^{|t|-|s|} y(t).
  for (unsigned b = 0; b < k; ++b)
    for (Subset s = 0; s < lattice; ++s)
      if (!(s & singleton(b))) lambda[s] -= lambda[s | singleton(b)];

  for (const auto& l : lambda)
    if (sgn(l) < 0) return std::nullopt;

  // The vertex floor ∪ F has a 1 at S iff S ∩ free ⊆ F, so the block must
  // equal the superset sums of λ.
  std::vector<Rational> upward = lambda;
  for (unsigned b = 0; b < k; ++b)
    for (Subset s = 0; s < lattice; ++s)
      if (!(s & singleton(b))) upward[s] += upward[s | singleton(b)];
  if (upward[0] != 1) return std::nullopt;
  for (std::size_t off = 0; off < block.length; ++off) {
    const Subset global = deposit(index.local_subset(block, off), block.members);
    const Subset free_part = extract(global & ~floor, free_members);
    if (x[block.offset + off] != upward[free_part]) return std::nullopt;
  }
  return lambda;
}

}  // namespace

std::optional<EdgeDecomposition> edge_point_decompose(std::span<const Rational> x,
                                                      const CoordinateIndex& index) {
  if (x.size() != index.size())
    throw DomainError("point has " + std::to_string(x.size()) + " coordinates; the family has " +
                      std::to_string(index.size()));
  for (const auto& v : x)
    if (sgn(v) < 0 || v > 1) throw DomainError("point coordinates must lie in [0, 1]");

  const auto& spec = index.spec();
  std::vector<Subset> parents(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) parents[i] = spec.floor(i);

  std::optional<std::size_t> edge_child;
  Subset first = 0, second = 0;
  Rational weight(1);
  for (const auto& block : index.blocks()) {
    auto lambda = block_barycentric(x, index, block);
    if (!lambda) return std::nullopt;
    const auto free_members = members_of(spec.free(block.child));
    std::vector<Subset> support;
    for (Subset s = 0; s < lambda->size(); ++s)
      if (sgn((*lambda)[s]) != 0) support.push_back(s);
    if (support.size() == 1) {
      parents[block.child] |= deposit(support[0], free_members);
      continue;
    }
    if (support.size() != 2 || edge_child) return std::nullopt;
    std::sort(support.begin(), support.end(), graded_lex_less);
    edge_child = block.child;
    first = spec.floor(block.child) | deposit(support[0], free_members);
    second = spec.floor(block.child) | deposit(support[1], free_members);
    weight = (*lambda)[support[0]];
  }

  ParentMap base(spec.ordering_ptr(), parents);
  if (!edge_child) return EdgeDecomposition{0, base, base, Rational(1), true};
  return EdgeDecomposition{*edge_child, base.with_parents(*edge_child, first),
                           base.with_parents(*edge_child, second), weight, false};
}

}  // namespace cimset
