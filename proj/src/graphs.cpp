#include "cimset/graphs.hpp"

#include <algorithm>
#include <cstdlib>
#include <unordered_set>

#include "cimset/errors.hpp"

namespace cimset {

std::uint64_t enumeration_limit() {
  if (const char* env = std::getenv("CIMSET_ENUM_LIMIT")) {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0') return value;
    throw DomainError(std::string("CIMSET_ENUM_LIMIT is not a nonnegative integer: ") + env);
  }
  return kDefaultEnumerationLimit;
}

// ---------------------------------------------------------------------------
// NodeOrdering

NodeOrdering::NodeOrdering(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.empty()) throw DomainError("ordering must contain at least one node");
  if (names_.size() > kMaxNodes)
    throw LimitError("ordering has " + std::to_string(names_.size()) + " nodes; at most " +
                     std::to_string(kMaxNodes) + " are supported");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw DomainError("node names must be nonempty");
    if (!position_.emplace(names_[i], i).second)
      throw DomainError("duplicate node name '" + names_[i] + "'");
  }
}

std::optional<std::size_t> NodeOrdering::find(std::string_view name) const {
  auto it = position_.find(std::string(name));
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

std::size_t NodeOrdering::position(std::string_view name) const {
  if (auto p = find(name)) return *p;
  throw DomainError("unknown node '" + std::string(name) + "'");
}

Subset NodeOrdering::subset_of(const std::vector<std::string>& names) const {
  Subset s = 0;
  for (const auto& n : names) {
    const Subset bit = singleton(static_cast<unsigned>(position(n)));
    if (s & bit) throw DomainError("node '" + n + "' listed twice");
    s |= bit;
  }
  return s;
}

std::vector<std::string> NodeOrdering::names_of(Subset s) const {
  std::vector<std::string> out;
  for (unsigned k : members_of(s)) out.push_back(name(k));
  return out;
}

std::string NodeOrdering::format(Subset s) const {
  std::string out;
  for (unsigned k : members_of(s)) {
    if (!out.empty()) out += ',';
    out += name(k);
  }
  return out;
}

OrderingPtr make_ordering(std::vector<std::string> names) {
  return std::make_shared<const NodeOrdering>(std::move(names));
}

bool same_ordering(const OrderingPtr& a, const OrderingPtr& b) {
  return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// ParentMap

ParentMap::ParentMap(OrderingPtr ordering, std::vector<Subset> parents)
    : ordering_(std::move(ordering)), parents_(std::move(parents)) {
  if (!ordering_) throw DomainError("graph without ordering");
  if (parents_.size() != ordering_->size())
    throw DomainError("graph has " + std::to_string(parents_.size()) + " parent sets for " +
                      std::to_string(ordering_->size()) + " nodes");
  for (std::size_t i = 0; i < parents_.size(); ++i)
    if (!is_subset(parents_[i], lower_set(static_cast<unsigned>(i))))
      throw DomainError("node '" + ordering_->name(i) + "' has a parent that does not precede it");
}

ParentMap ParentMap::empty(OrderingPtr ordering) {
  const std::size_t n = ordering ? ordering->size() : 0;
  return ParentMap(std::move(ordering), std::vector<Subset>(n, 0));
}

ParentMap ParentMap::with_parents(std::size_t child, Subset parents) const {
  auto copy = parents_;
  copy.at(child) = parents;
  return ParentMap(ordering_, std::move(copy));
}

std::vector<std::pair<std::size_t, std::size_t>> ParentMap::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t child = 0; child < parents_.size(); ++child)
    for (unsigned p : members_of(parents_[child])) out.emplace_back(p, child);
  return out;
}

std::size_t ParentMap::edge_count() const {
  std::size_t count = 0;
  for (Subset s : parents_) count += cardinality(s);
  return count;
}

std::size_t structural_hamming_distance(const ParentMap& a, const ParentMap& b) {
  if (!same_ordering(a.ordering_ptr(), b.ordering_ptr()))
    throw DomainError("graphs use different orderings");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += cardinality(a.parents(i) ^ b.parents(i));
  return d;
}

// ---------------------------------------------------------------------------
// FamilySpec

FamilySpec::FamilySpec(OrderingPtr ordering, std::vector<Subset> floor, std::vector<Subset> ceiling,
                       std::optional<unsigned> max_parents)
    : ordering_(std::move(ordering)),
      floor_(std::move(floor)),
      ceiling_(std::move(ceiling)),
      max_parents_(max_parents) {
  if (!ordering_) throw DomainError("family without ordering");
  const std::size_t n = ordering_->size();
  if (floor_.size() != n || ceiling_.size() != n)
    throw DomainError("floor and ceiling need one entry per node");
  for (std::size_t i = 0; i < n; ++i) {
    const auto& name = ordering_->name(i);
    if (!is_subset(ceiling_[i], lower_set(static_cast<unsigned>(i))))
      throw DomainError("ceiling of '" + name + "' contains a node that does not precede it");
    if (!is_subset(floor_[i], ceiling_[i]))
      throw DomainError("floor of '" + name + "' is not contained in its ceiling");
    if (max_parents_ && cardinality(floor_[i]) > *max_parents_)
      throw DomainError("floor of '" + name + "' exceeds max_parents; the family is empty");
  }
}

bool FamilySpec::admissible(std::size_t child, Subset parents) const {
  return is_subset(floor_.at(child), parents) && is_subset(parents, ceiling_.at(child)) &&
         (!max_parents_ || cardinality(parents) <= *max_parents_);
}

namespace {

std::uint64_t binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (unsigned j = 1; j <= k; ++j) r = r * (n - k + j) / j;
  return r;
}

}  // namespace

std::uint64_t FamilySpec::admissible_count(std::size_t child) const {
  const unsigned k = cardinality(free(child));
  if (!max_parents_) return k >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << k;
  const unsigned base = cardinality(floor_.at(child));
  const unsigned room = std::min(k, *max_parents_ - base);
  std::uint64_t total = 0;
  for (unsigned j = 0; j <= room; ++j) total += binomial(k, j);
  return total;
}

std::vector<Subset> FamilySpec::admissible_sets(std::size_t child) const {
  const Subset free_set = free(child);
  const unsigned k = cardinality(free_set);
  if (k > kMaxBlockWidth)
    throw LimitError("node '" + ordering_->name(child) + "' has 2^" + std::to_string(k) +
                     " candidate parent sets; the per-child limit is 2^" +
                     std::to_string(kMaxBlockWidth));
  const auto members = members_of(free_set);
  const auto& table = graded_lex_table(k);
  std::vector<Subset> out;
  out.reserve(admissible_count(child));
  for (Subset local : table.order) {
    const Subset p = floor_[child] | deposit(local, members);
    if (!max_parents_ || cardinality(p) <= *max_parents_) out.push_back(p);
  }
  return out;
}

std::optional<std::uint64_t> FamilySpec::family_size() const {
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < size(); ++i) {
    const std::uint64_t c = admissible_count(i);
    if (c != 0 && total > ~std::uint64_t{0} / c) return std::nullopt;
    total *= c;
  }
  return total;
}

FamilySpec diagnosis_family(int m, int n) {
  if (m <= 0 || n <= 0)
    throw DomainError("diagnosis family needs m >= 1 and n >= 1 (got m=" + std::to_string(m) +
                      ", n=" + std::to_string(n) + ")");
  if (m + n > static_cast<int>(kMaxNodes)) throw LimitError("diagnosis family has too many nodes");
  std::vector<std::string> names;
  for (int i = 1; i <= m; ++i) names.push_back("a" + std::to_string(i));
  for (int j = 1; j <= n; ++j) names.push_back("b" + std::to_string(j));
  const std::size_t total = names.size();
  std::vector<Subset> floor(total, 0), ceiling(total, 0);
  for (std::size_t j = m; j < total; ++j) ceiling[j] = lower_set(static_cast<unsigned>(m));
  return FamilySpec(make_ordering(std::move(names)), std::move(floor), std::move(ceiling));
}

FamilySpec full_ordered_family(OrderingPtr ordering) {
  if (!ordering) throw DomainError("family without ordering");
  const std::size_t n = ordering->size();
  std::vector<Subset> floor(n, 0), ceiling(n, 0);
  for (std::size_t i = 0; i < n; ++i) ceiling[i] = lower_set(static_cast<unsigned>(i));
  return FamilySpec(std::move(ordering), std::move(floor), std::move(ceiling));
}

FamilySpec full_ordered_family(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  return full_ordered_family(make_ordering(std::move(names)));
}

bool family_contains(const FamilySpec& spec, const ParentMap& g) {
  if (!same_ordering(spec.ordering_ptr(), g.ordering_ptr()))
    throw DomainError("graph and family use different orderings");
  for (std::size_t i = 0; i < spec.size(); ++i)
    if (!spec.admissible(i, g.parents(i))) return false;
  return true;
}

void require_member(const FamilySpec& spec, const ParentMap& g) {
  if (!family_contains(spec, g)) throw DomainError("graph is not a member of the family");
}

// ---------------------------------------------------------------------------
// Enumeration

FamilyEnumerator::FamilyEnumerator(const FamilySpec& spec, std::uint64_t limit)
    : ordering_(spec.ordering_ptr()) {
  const auto size = spec.family_size();
  if (!size || *size > limit)
    throw LimitError("family has " + (size ? std::to_string(*size) : std::string("more than 2^64")) +
                     " members; enumeration limit is " + std::to_string(limit));
  size_ = *size;
  candidates_.reserve(spec.size());
  for (std::size_t i = 0; i < spec.size(); ++i) candidates_.push_back(spec.admissible_sets(i));
  cursor_.assign(spec.size(), 0);
}

std::optional<ParentMap> FamilyEnumerator::next() {
  if (done_) return std::nullopt;
  std::vector<Subset> parents(candidates_.size());
  for (std::size_t i = 0; i < candidates_.size(); ++i) parents[i] = candidates_[i][cursor_[i]];
  // Odometer: the last child moves fastest.
  std::size_t i = candidates_.size();
  while (i > 0) {
    --i;
    if (++cursor_[i] < candidates_[i].size()) break;
    cursor_[i] = 0;
    if (i == 0) done_ = true;
  }
  return ParentMap(ordering_, std::move(parents));
}

std::vector<ParentMap> enumerate_family(const FamilySpec& spec, std::uint64_t limit) {
  FamilyEnumerator it(spec, limit);
  std::vector<ParentMap> out;
  out.reserve(it.size());
  while (auto g = it.next()) out.push_back(std::move(*g));
  return out;
}

}  // namespace cimset
