#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cimset/subset.hpp"

namespace cimset {

// Default refusal threshold for exhaustive enumeration. The environment
// variable CIMSET_ENUM_LIMIT overrides it.
inline constexpr std::uint64_t kDefaultEnumerationLimit = std::uint64_t{1} << 24;
std::uint64_t enumeration_limit();

// The fixed total order over the variables. Every edge points from an earlier
// to a later position.
class NodeOrdering {
 public:
  explicit NodeOrdering(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t position) const { return names_.at(position); }
  const std::vector<std::string>& names() const { return names_; }

  std::optional<std::size_t> find(std::string_view name) const;
  // Throws DomainError for unknown names.
  std::size_t position(std::string_view name) const;

  Subset subset_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(Subset s) const;
  // Comma-joined member names in ordering order; empty string for the empty set.
  std::string format(Subset s) const;

  friend bool operator==(const NodeOrdering& a, const NodeOrdering& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, std::size_t> position_;
};

using OrderingPtr = std::shared_ptr<const NodeOrdering>;

OrderingPtr make_ordering(std::vector<std::string> names);
bool same_ordering(const OrderingPtr& a, const OrderingPtr& b);

// A DAG compatible with the ordering, stored as one parent set per child.
// Parent sets only ever contain strict predecessors, so acyclicity holds by
// construction.
class ParentMap {
 public:
  ParentMap(OrderingPtr ordering, std::vector<Subset> parents);
  static ParentMap empty(OrderingPtr ordering);

  const NodeOrdering& ordering() const { return *ordering_; }
  const OrderingPtr& ordering_ptr() const { return ordering_; }
  std::size_t size() const { return parents_.size(); }
  Subset parents(std::size_t child) const { return parents_.at(child); }
  const std::vector<Subset>& parent_sets() const { return parents_; }

  // Copy with one child's parent set replaced.
  ParentMap with_parents(std::size_t child, Subset parents) const;

  // Derived edge list (parent, child), children ascending, parents ascending.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;
  std::size_t edge_count() const;

  friend bool operator==(const ParentMap& a, const ParentMap& b) {
    return a.parents_ == b.parents_ && same_ordering(a.ordering_, b.ordering_);
  }

 private:
  OrderingPtr ordering_;
  std::vector<Subset> parents_;
};

// Symmetric difference of the two edge sets.
std::size_t structural_hamming_distance(const ParentMap& a, const ParentMap& b);

// A family of DAGs over one ordering given by per-child floor (required
// parents) and ceiling (allowed parents), with an optional in-degree cap.
class FamilySpec {
 public:
  FamilySpec(OrderingPtr ordering, std::vector<Subset> floor, std::vector<Subset> ceiling,
             std::optional<unsigned> max_parents = std::nullopt);

  const NodeOrdering& ordering() const { return *ordering_; }
  const OrderingPtr& ordering_ptr() const { return ordering_; }
  std::size_t size() const { return floor_.size(); }

  Subset floor(std::size_t child) const { return floor_.at(child); }
  Subset ceiling(std::size_t child) const { return ceiling_.at(child); }
  // Parents that may or may not be present.
  Subset free(std::size_t child) const { return ceiling_.at(child) & ~floor_.at(child); }
  std::optional<unsigned> max_parents() const { return max_parents_; }
  bool has_cap() const { return max_parents_.has_value(); }

  bool admissible(std::size_t child, Subset parents) const;
  // Number of admissible parent sets of one child (respects the cap).
  std::uint64_t admissible_count(std::size_t child) const;
  // Admissible parent sets in graded-lex order. Refuses children with more
  // than 2^22 candidates.
  std::vector<Subset> admissible_sets(std::size_t child) const;
  // Product of per-child counts, or nullopt if it does not fit in 64 bits.
  std::optional<std::uint64_t> family_size() const;

  friend bool operator==(const FamilySpec& a, const FamilySpec& b) {
    return same_ordering(a.ordering_, b.ordering_) && a.floor_ == b.floor_ &&
           a.ceiling_ == b.ceiling_ && a.max_parents_ == b.max_parents_;
  }

 private:
  OrderingPtr ordering_;
  std::vector<Subset> floor_;
  std::vector<Subset> ceiling_;
  std::optional<unsigned> max_parents_;
};

// Bipartite disease -> symptom model: ordering (a1..am, b1..bn), each symptom
// may take any subset of the diseases as parents.
FamilySpec diagnosis_family(int m, int n);
// Every DAG whose edges respect the ordering.
FamilySpec full_ordered_family(OrderingPtr ordering);
FamilySpec full_ordered_family(std::size_t n);

// Throws DomainError when the graph uses a different ordering.
bool family_contains(const FamilySpec& spec, const ParentMap& g);
void require_member(const FamilySpec& spec, const ParentMap& g);

// Streams the members of a family in canonical order: the tuple of parent
// sets compared child by child, each child's sets in graded-lex order.
class FamilyEnumerator {
 public:
  explicit FamilyEnumerator(const FamilySpec& spec, std::uint64_t limit = enumeration_limit());

  std::uint64_t size() const { return size_; }
  std::optional<ParentMap> next();

 private:
  OrderingPtr ordering_;
  std::vector<std::vector<Subset>> candidates_;
  std::vector<std::size_t> cursor_;
  std::uint64_t size_ = 0;
  bool done_ = false;
};

std::vector<ParentMap> enumerate_family(const FamilySpec& spec,
                                        std::uint64_t limit = enumeration_limit());

}  // namespace cimset
