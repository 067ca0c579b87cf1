#include "cimset/scoring.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>
#include <thread>

namespace cimset {

Dataset::Dataset(OrderingPtr ordering, std::vector<std::vector<std::uint32_t>> columns,
                 std::vector<std::vector<std::string>> state_labels)
    : ordering_(std::move(ordering)), columns_(std::move(columns)), labels_(std::move(state_labels)) {
  if (!ordering_) throw DomainError("dataset without ordering");
  if (columns_.size() != ordering_->size() || labels_.size() != ordering_->size())
    throw DomainError("dataset needs one column per ordered variable");
  if (columns_.front().empty()) throw FormatError("dataset has no rows");
  for (std::size_t v = 0; v < columns_.size(); ++v) {
    if (columns_[v].size() != columns_.front().size()) throw DomainError("dataset columns differ in length");
    if (labels_[v].empty()) throw DomainError("variable '" + ordering_->name(v) + "' has no states");
    for (auto s : columns_[v])
      if (s >= labels_[v].size()) throw DomainError("state index out of range in '" + ordering_->name(v) + "'");
  }
}

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::istringstream in(line);
  while (std::getline(in, cell, ',')) {
    const auto first = cell.find_first_not_of(" \t");
    const auto last = cell.find_last_not_of(" \t\r");
    out.push_back(first == std::string::npos ? std::string() : cell.substr(first, last - first + 1));
  }
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

}  // namespace

Dataset parse_csv(std::istream& in, const OrderingPtr& ordering, const std::string& source) {
  std::string line;
  if (!std::getline(in, line)) throw FormatError(source + ": missing header row");
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  const auto header = split_line(line);

  const std::size_t n = ordering->size();
  std::vector<std::size_t> source_column(n);
  for (std::size_t v = 0; v < n; ++v) {
    auto it = std::find(header.begin(), header.end(), ordering->name(v));
    if (it == header.end()) throw FormatError(source + ": missing column '" + ordering->name(v) + "'");
    source_column[v] = static_cast<std::size_t>(it - header.begin());
  }

  std::vector<std::vector<std::uint32_t>> columns(n);
  std::vector<std::vector<std::string>> labels(n);
  std::vector<std::unordered_map<std::string, std::uint32_t>> lookup(n);
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto cells = split_line(line);
    if (cells.size() != header.size())
      throw FormatError(source + ": row " + std::to_string(line_no) + " has " + std::to_string(cells.size()) +
                        " cells; the header has " + std::to_string(header.size()));
    for (std::size_t v = 0; v < n; ++v) {
      const auto& value = cells[source_column[v]];
      if (value.empty())
        throw FormatError(source + ": empty cell at row " + std::to_string(line_no) + ", column " +
                          std::to_string(source_column[v] + 1) + " ('" + ordering->name(v) + "')");
      auto [it, inserted] = lookup[v].emplace(value, static_cast<std::uint32_t>(labels[v].size()));
      if (inserted) labels[v].push_back(value);
      columns[v].push_back(it->second);
    }
  }
  if (columns.front().empty()) throw FormatError(source + ": no data rows");
  return Dataset(ordering, std::move(columns), std::move(labels));
}

Dataset load_csv(const std::string& path, const OrderingPtr& ordering) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open '" + path + "'");
  return parse_csv(in, ordering, path);
}

Criterion parse_criterion(std::string_view name) {
  if (name == "ll") return Criterion::ll;
  if (name == "bic") return Criterion::bic;
  if (name == "aic") return Criterion::aic;
  throw DomainError("unknown criterion '" + std::string(name) + "' (expected ll, bic or aic)");
}

const char* to_string(Criterion c) {
  switch (c) {
    case Criterion::ll: return "ll";
    case Criterion::bic: return "bic";
    case Criterion::aic: return "aic";
  }
  return "?";
}

namespace {

// Dense ids for the joint parent configuration of every row. Keys are
// re-compressed whenever the mixed-radix value grows large.
std::vector<std::uint64_t> configuration_keys(const Dataset& data, Subset parents) {
  const std::size_t rows = data.rows();
  std::vector<std::uint64_t> keys(rows, 0);
  constexpr std::uint64_t kCompressAbove = std::uint64_t{1} << 40;
  std::uint64_t range = 1;
  for (unsigned p : members_of(parents)) {
    const std::uint64_t card = data.cardinality(p);
    if (range > kCompressAbove / card) {
      std::vector<std::uint64_t> distinct = keys;
      std::sort(distinct.begin(), distinct.end());
      distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
      for (auto& k : keys)
        k = static_cast<std::uint64_t>(std::lower_bound(distinct.begin(), distinct.end(), k) - distinct.begin());
      range = distinct.size();
    }
    const auto column = data.column(p);
    for (std::size_t r = 0; r < rows; ++r) keys[r] = keys[r] * card + column[r];
    range *= card;
  }
  return keys;
}

}  // namespace

double local_score(const Dataset& data, std::size_t child, Subset parents, Criterion criterion) {
  if (child >= data.ordering().size()) throw DomainError("child position out of range");
  if (!is_subset(parents, lower_set(static_cast<unsigned>(child))))
    throw DomainError("parents of '" + data.ordering().name(child) + "' must precede it");

  const std::uint64_t r = data.cardinality(child);
  auto keys = configuration_keys(data, parents);
  const auto child_column = data.column(child);
  for (std::size_t row = 0; row < keys.size(); ++row) keys[row] = keys[row] * r + child_column[row];
  std::sort(keys.begin(), keys.end());

  double ll = 0.0;
  std::size_t i = 0;
  while (i < keys.size()) {
    const std::uint64_t config = keys[i] / r;
    std::size_t j = i;
    std::vector<double> cell_counts;
    while (j < keys.size() && keys[j] / r == config) {
      std::size_t k = j;
      while (k < keys.size() && keys[k] == keys[j]) ++k;
      cell_counts.push_back(static_cast<double>(k - j));
      j = k;
    }
    const double parent_count = static_cast<double>(j - i);
    for (double c : cell_counts) ll += c * std::log(c / parent_count);
    i = j;
  }

  if (criterion == Criterion::ll) return ll;
  double q = 1.0;
  for (unsigned p : members_of(parents)) q *= data.cardinality(p);
  const double parameters = q * static_cast<double>(r - 1);
  if (criterion == Criterion::aic) return ll - parameters;
  return ll - 0.5 * std::log(static_cast<double>(data.rows())) * parameters;
}

ScoreTable build_score_table(const Dataset& data, const FamilySpec& spec, Criterion criterion, unsigned threads) {
  if (!same_ordering(data.ordering_ptr(), spec.ordering_ptr()))
    throw DomainError("dataset and family use different orderings");
  ScoreTable table(spec);

  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t child = 0; child < spec.size(); ++child)
    for (std::size_t pos = 0; pos < table.parent_sets(child).size(); ++pos) cells.emplace_back(child, pos);

  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t c = begin; c < end; ++c) {
      const auto [child, pos] = cells[c];
      table.set_at(child, pos, local_score(data, child, table.parent_sets(child)[pos], criterion));
    }
  };
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(cells.size())));
  if (threads == 1) {
    work(0, cells.size());
    return table;
  }
  // Each worker writes a disjoint range of cells.
  std::vector<std::thread> pool;
  const std::size_t chunk = (cells.size() + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t begin = t * chunk;
    const std::size_t end = std::min(cells.size(), begin + chunk);
    if (begin >= end) break;
    pool.emplace_back(work, begin, end);
  }
  for (auto& th : pool) th.join();
  return table;
}

ExactScoreTable to_exact(const ScoreTable& table) {
  ExactScoreTable exact(table.spec());
  for (std::size_t child = 0; child < table.size(); ++child) {
    const auto scores = table.scores(child);
    for (std::size_t pos = 0; pos < scores.size(); ++pos) exact.set_at(child, pos, from_double(scores[pos]));
  }
  return exact;
}

}  // namespace cimset
