#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cimset/errors.hpp"
#include "cimset/graphs.hpp"
#include "cimset/imsets.hpp"
#include "cimset/rational.hpp"

namespace cimset {

// ---------------------------------------------------------------------------
// Data

// Complete categorical observations, one column per ordering position.
class Dataset {
 public:
  Dataset(OrderingPtr ordering, std::vector<std::vector<std::uint32_t>> columns,
          std::vector<std::vector<std::string>> state_labels);

  const NodeOrdering& ordering() const { return *ordering_; }
  const OrderingPtr& ordering_ptr() const { return ordering_; }
  std::size_t rows() const { return columns_.front().size(); }
  std::uint32_t cardinality(std::size_t variable) const {
    return static_cast<std::uint32_t>(labels_.at(variable).size());
  }
  std::span<const std::uint32_t> column(std::size_t variable) const { return columns_.at(variable); }
  const std::vector<std::string>& states(std::size_t variable) const { return labels_.at(variable); }

 private:
  OrderingPtr ordering_;
  std::vector<std::vector<std::uint32_t>> columns_;
  std::vector<std::vector<std::string>> labels_;
};

// Header row names a superset of the ordering; columns are reordered to the
// ordering and states numbered in order of first appearance.
Dataset load_csv(const std::string& path, const OrderingPtr& ordering);
Dataset parse_csv(std::istream& in, const OrderingPtr& ordering, const std::string& source = "<input>");

enum class Criterion { ll, bic, aic };
Criterion parse_criterion(std::string_view name);
const char* to_string(Criterion c);

// Log-likelihood of the child given the parents, optionally penalised:
//   LL  = Σ N(x, π) ln(N(x, π) / N(π))
//   BIC = LL - (ln N / 2) q (r - 1)
//   AIC = LL - q (r - 1)
// with q = Π card(parent), r = card(child).
double local_score(const Dataset& data, std::size_t child, Subset parents, Criterion criterion);

// Rounds to a 1e-12 grid so that equal scores compare bit-identically.
inline double snap(double x) { return std::round(x * 1e12) / 1e12; }

// ---------------------------------------------------------------------------
// Score tables

// Local scores of every admissible parent set of every child. Entries are
// stored per child in graded-lex order of the parent sets.
template <class T>
class BasicScoreTable {
 public:
  explicit BasicScoreTable(FamilySpec spec) : spec_(std::move(spec)) {
    sets_.resize(spec_.size());
    values_.resize(spec_.size());
    dense_rank_.resize(spec_.size());
    sparse_rank_.resize(spec_.size());
    for (std::size_t i = 0; i < spec_.size(); ++i) {
      const Subset free_set = spec_.free(i);
      const unsigned k = cardinality(free_set);
      if (k <= kMaxBlockWidth) {
        sets_[i] = spec_.admissible_sets(i);
        dense_rank_[i].assign(std::size_t{1} << k, kAbsent);
        const auto members = members_of(free_set);
        for (std::size_t pos = 0; pos < sets_[i].size(); ++pos)
          dense_rank_[i][extract(sets_[i][pos] & ~spec_.floor(i), members)] =
              static_cast<std::uint32_t>(pos);
      } else {
        collect_capped(i);
      }
      values_[i].assign(sets_[i].size(), T(0));
    }
  }

  const FamilySpec& spec() const { return spec_; }
  std::size_t size() const { return spec_.size(); }

  // Admissible parent sets of one child, graded-lex.
  const std::vector<Subset>& parent_sets(std::size_t child) const { return sets_.at(child); }
  std::span<const T> scores(std::size_t child) const { return values_.at(child); }
  std::size_t entry_count() const {
    std::size_t n = 0;
    for (const auto& v : values_) n += v.size();
    return n;
  }

  const T& local(std::size_t child, Subset parents) const { return values_[child][slot(child, parents)]; }
  void set(std::size_t child, Subset parents, T value) { values_[child][slot(child, parents)] = std::move(value); }
  void set_at(std::size_t child, std::size_t position, T value) { values_.at(child).at(position) = std::move(value); }

  std::size_t slot(std::size_t child, Subset parents) const {
    if (child >= spec_.size()) throw DomainError("child position out of range");
    if (!spec_.admissible(child, parents))
      throw DomainError("parent set {" + spec_.ordering().format(parents) + "} is not admissible for '" +
                        spec_.ordering().name(child) + "'");
    const auto members = members_of(spec_.free(child));
    const Subset local = extract(parents & ~spec_.floor(child), members);
    if (!dense_rank_[child].empty()) return dense_rank_[child][local];
    return sparse_rank_[child].at(parents);
  }

 private:
  static constexpr std::uint32_t kAbsent = ~std::uint32_t{0};

  // Children with very wide ceilings are only representable under a cap.
  void collect_capped(std::size_t child) {
    const auto count = spec_.admissible_count(child);
    if (!spec_.has_cap() || count > (std::uint64_t{1} << kMaxBlockWidth))
      throw LimitError("node '" + spec_.ordering().name(child) + "' has " + std::to_string(count) +
                       " candidate parent sets; the per-child limit is 2^" + std::to_string(kMaxBlockWidth));
    const auto members = members_of(spec_.free(child));
    const unsigned room = *spec_.max_parents() - cardinality(spec_.floor(child));
    std::vector<Subset> out{spec_.floor(child)};
    // Grow graded-lex layer by layer: extend each set by members above its maximum.
    std::vector<std::vector<unsigned>> layer{{}};
    for (unsigned size = 1; size <= room && size <= members.size(); ++size) {
      std::vector<std::vector<unsigned>> next;
      for (const auto& combo : layer) {
        const unsigned start = combo.empty() ? 0 : combo.back() + 1;
        for (unsigned j = start; j < members.size(); ++j) {
          auto c = combo;
          c.push_back(j);
          next.push_back(std::move(c));
        }
      }
      for (const auto& combo : next) {
        Subset p = spec_.floor(child);
        for (unsigned j : combo) p |= singleton(members[j]);
        out.push_back(p);
      }
      layer = std::move(next);
    }
    sets_[child] = std::move(out);
    for (std::size_t pos = 0; pos < sets_[child].size(); ++pos) sparse_rank_[child][sets_[child][pos]] = pos;
  }

  FamilySpec spec_;
  std::vector<std::vector<Subset>> sets_;
  std::vector<std::vector<T>> values_;
  std::vector<std::vector<std::uint32_t>> dense_rank_;
  std::vector<std::unordered_map<Subset, std::size_t>> sparse_rank_;
};

using ScoreTable = BasicScoreTable<double>;
using ExactScoreTable = BasicScoreTable<Rational>;

// Fills every admissible cell. `threads` > 1 splits the cells across workers;
// results are identical for any thread count.
ScoreTable build_score_table(const Dataset& data, const FamilySpec& spec, Criterion criterion,
                             unsigned threads = 1);

ExactScoreTable to_exact(const ScoreTable& table);

// ---------------------------------------------------------------------------
// Data vector

// The linear objective r_D and per-child offsets with
//   Σ_i local(i, pa(i)) = Σ_i offset_i - <r_D, c_G>
// for every member G of the family.
template <class T>
class BasicDataVector {
 public:
  BasicDataVector(IndexPtr index, std::vector<T> values, std::vector<T> offsets)
      : index_(std::move(index)), values_(std::move(values)), offsets_(std::move(offsets)) {
    if (values_.size() != index_->size() || offsets_.size() != index_->spec().size())
      throw DomainError("data vector does not match its coordinate index");
  }

  const CoordinateIndex& index() const { return *index_; }
  const IndexPtr& index_ptr() const { return index_; }
  std::span<const T> values() const { return values_; }
  const T& value(std::size_t child, Subset parents) const { return values_[index_->position(child, parents)]; }
  const T& offset(std::size_t child) const { return offsets_.at(child); }
  // s(D)
  T total_offset() const {
    T s(0);
    for (const auto& o : offsets_) s += o;
    return s;
  }

 private:
  IndexPtr index_;
  std::vector<T> values_;
  std::vector<T> offsets_;
};

using DataVector = BasicDataVector<double>;
using ExactDataVector = BasicDataVector<Rational>;

namespace detail {

template <class T>
void require_uncapped(const BasicScoreTable<T>& table, const CoordinateIndex& index) {
  if (table.spec().has_cap())
    throw UnsupportedError("the data vector is only defined for families without a max_parents cap");
  if (!(table.spec() == index.spec())) throw DomainError("score table and coordinate index describe different families");
}

}  // namespace detail

// Möbius inversion of each child's local scores over its free lattice.
// r(i, floor ∪ F) = -Σ_{F' ⊆ F} (-1)^{|F|-|F'|} local(i, floor ∪ F') for
// nonempty F; every other coordinate gets 0; offset_i = local(i, floor).
template <class T>
BasicDataVector<T> mobius_data_vector(const BasicScoreTable<T>& table, const IndexPtr& index) {
  detail::require_uncapped(table, *index);
  const auto& spec = table.spec();
  std::vector<T> values(index->size(), T(0));
  std::vector<T> offsets(spec.size(), T(0));
  for (std::size_t child = 0; child < spec.size(); ++child) {
    const Subset floor = spec.floor(child);
    offsets[child] = table.local(child, floor);
    const auto members = members_of(spec.free(child));
    const unsigned k = static_cast<unsigned>(members.size());
    if (k == 0) continue;
    const std::size_t lattice = std::size_t{1} << k;
    std::vector<T> h(lattice);
    for (Subset f = 0; f < lattice; ++f) h[f] = table.local(child, floor | deposit(f, members));
    for (unsigned b = 0; b < k; ++b)
      for (Subset f = 0; f < lattice; ++f)
        if (f & singleton(b)) h[f] -= h[f ^ singleton(b)];
    for (Subset f = 1; f < lattice; ++f) values[index->position(child, floor | deposit(f, members))] = -h[f];
  }
  return BasicDataVector<T>(index, std::move(values), std::move(offsets));
}

// Inverse direction: local(i, P) = offset_i - Σ_{S ⊆ P, S indexed} r(i, S).
template <class T>
BasicScoreTable<T> score_table_from_data_vector(const BasicDataVector<T>& dv) {
  const auto& index = dv.index();
  BasicScoreTable<T> table(index.spec());
  for (std::size_t child = 0; child < index.spec().size(); ++child) {
    const auto* block = index.block_of(child);
    const auto& sets = table.parent_sets(child);
    for (std::size_t pos = 0; pos < sets.size(); ++pos) {
      T total = dv.offset(child);
      if (block) {
        const Subset pa = extract(sets[pos], block->members);
        for (Subset s = pa; s != 0; s = (s - 1) & pa) total -= dv.values()[block->offset + index.local_position(*block, s)];
      }
      table.set_at(child, pos, std::move(total));
    }
  }
  return table;
}

// <r_D, c_G>, accumulated block by block.
template <class T>
T inner_product(const BasicDataVector<T>& dv, const ParentMap& g) {
  const auto& index = dv.index();
  require_member(index.spec(), g);
  T total(0);
  for (const auto& block : index.blocks()) {
    const Subset pa = extract(g.parents(block.child), block.members);
    for (Subset s = pa; s != 0; s = (s - 1) & pa) total += dv.values()[block.offset + index.local_position(block, s)];
  }
  return total;
}

// Q(G) = s(D) - <r_D, c_G>.
template <class T>
T score_graph(const BasicDataVector<T>& dv, const ParentMap& g) {
  return dv.total_offset() - inner_product(dv, g);
}

// Σ_i local(i, pa(i)) read straight from the table.
template <class T>
T table_score(const BasicScoreTable<T>& table, const ParentMap& g) {
  require_member(table.spec(), g);
  T total(0);
  for (std::size_t i = 0; i < table.size(); ++i) total += table.local(i, g.parents(i));
  return total;
}

}  // namespace cimset
