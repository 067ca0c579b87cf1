#include "cimset/subset.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>

#include "cimset/errors.hpp"

namespace cimset {

const GradedLexTable& graded_lex_table(unsigned k) {
  static std::array<std::unique_ptr<GradedLexTable>, kMaxBlockWidth + 1> tables;
  static std::mutex guard;
  if (k > kMaxBlockWidth)
    throw LimitError("subset lattice of width " + std::to_string(k) + " exceeds the limit of " +
                     std::to_string(kMaxBlockWidth));
  std::lock_guard lock(guard);
  if (!tables[k]) {
    auto table = std::make_unique<GradedLexTable>();
    const std::size_t count = std::size_t{1} << k;
    table->order.resize(count);
    for (std::size_t s = 0; s < count; ++s) table->order[s] = s;
    std::sort(table->order.begin(), table->order.end(), graded_lex_less);
    table->rank.resize(count);
    for (std::size_t pos = 0; pos < count; ++pos)
      table->rank[table->order[pos]] = static_cast<std::uint32_t>(pos);
    tables[k] = std::move(table);
  }
  return *tables[k];
}

Subset deposit(Subset local, std::span<const unsigned> members) {
  Subset global = 0;
  for (std::size_t j = 0; j < members.size(); ++j)
    if (local & singleton(static_cast<unsigned>(j))) global |= singleton(members[j]);
  return global;
}

Subset extract(Subset global, std::span<const unsigned> members) {
  Subset local = 0;
  for (std::size_t j = 0; j < members.size(); ++j)
    if (global & singleton(members[j])) local |= singleton(static_cast<unsigned>(j));
  return local;
}

std::vector<unsigned> members_of(Subset s) {
  std::vector<unsigned> out;
  out.reserve(cardinality(s));
  while (s) {
    out.push_back(static_cast<unsigned>(std::countr_zero(s)));
    s &= s - 1;
  }
  return out;
}

}  // namespace cimset
