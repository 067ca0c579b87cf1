#include "cimset/oracle.hpp"

#include <algorithm>
#include <bit>

#include "cimset/errors.hpp"

namespace cimset {

// ---------------------------------------------------------------------------
// Exact LP feasibility

namespace {

class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * (cols + 1)) {}

  Rational& at(std::size_t r, std::size_t c) { return cells_[r * (cols_ + 1) + c]; }
  Rational& rhs(std::size_t r) { return cells_[r * (cols_ + 1) + cols_]; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  // Gauss-Jordan pivot on (pr, pc), also applied to the objective row.
  void pivot(std::size_t pr, std::size_t pc, std::vector<Rational>& objective) {
    const Rational inv = 1 / at(pr, pc);
    std::vector<std::size_t> nonzero;
    for (std::size_t c = 0; c <= cols_; ++c) {
      Rational& v = cells_[pr * (cols_ + 1) + c];
      if (sgn(v) != 0) {
        v *= inv;
        nonzero.push_back(c);
      }
    }
    auto eliminate = [&](Rational* row) {
      const Rational factor = row[pc];
      if (sgn(factor) == 0) return;
      const Rational* p = &cells_[pr * (cols_ + 1)];
      for (std::size_t c : nonzero) row[c] -= factor * p[c];
    };
    for (std::size_t r = 0; r < rows_; ++r)
      if (r != pr) eliminate(&cells_[r * (cols_ + 1)]);
    eliminate(objective.data());
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> cells_;
};

}  // namespace

std::optional<RationalVector> lp_feasible(const RationalMatrix& a, const RationalVector& b,
                                          const std::vector<bool>& equalities) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  if (b.size() != m || equalities.size() != m) throw DomainError("LP dimensions are inconsistent");
  if (m > kMaxLpSize || n > kMaxLpSize)
    throw LimitError("LP of size " + std::to_string(m) + " x " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxLpSize) + " x " + std::to_string(kMaxLpSize));
  if (m == 0) return RationalVector(n, Rational(0));

  // Column layout: original variables, one slack per inequality, one
  // artificial per row that has no natural basic column.
  std::vector<std::size_t> slack_of(m, 0);
  std::size_t cols = n;
  for (std::size_t r = 0; r < m; ++r)
    if (!equalities[r]) slack_of[r] = cols++;
  std::vector<bool> needs_artificial(m);
  for (std::size_t r = 0; r < m; ++r) needs_artificial[r] = equalities[r] || sgn(b[r]) < 0;
  const std::size_t first_artificial = cols;
  std::vector<std::size_t> artificial_of(m, 0);
  for (std::size_t r = 0; r < m; ++r)
    if (needs_artificial[r]) artificial_of[r] = cols++;

  Tableau t(m, cols);
  std::vector<std::size_t> basis(m);
  for (std::size_t r = 0; r < m; ++r) {
    const int sign = sgn(b[r]) < 0 ? -1 : 1;
    for (std::size_t c = 0; c < n; ++c)
      if (sgn(a(r, c)) != 0) t.at(r, c) = sign > 0 ? a(r, c) : Rational(-a(r, c));
    t.rhs(r) = sign > 0 ? b[r] : Rational(-b[r]);
    if (!equalities[r]) t.at(r, slack_of[r]) = sign;
    if (needs_artificial[r]) {
      t.at(r, artificial_of[r]) = 1;
      basis[r] = artificial_of[r];
    } else {
      basis[r] = slack_of[r];
    }
  }

  // Phase-one objective: minimise the sum of artificials. Reduced costs are
  // minus the column sums over artificial rows.
  std::vector<Rational> objective(cols + 1);
  for (std::size_t r = 0; r < m; ++r) {
    if (!needs_artificial[r]) continue;
    for (std::size_t c = 0; c <= cols; ++c)
      if (c < first_artificial || c == cols) objective[c] -= t.at(r, c);
  }

  for (;;) {
    // Bland: lowest-index improving column, lowest-index leaving variable.
    std::size_t enter = cols;
    for (std::size_t c = 0; c < cols; ++c)
      if (sgn(objective[c]) < 0) {
        enter = c;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best;
    for (std::size_t r = 0; r < m; ++r) {
      if (sgn(t.at(r, enter)) <= 0) continue;
      Rational ratio = t.rhs(r) / t.at(r, enter);
      if (leave == m || ratio < best || (ratio == best && basis[r] < basis[leave])) {
        best = std::move(ratio);
        leave = r;
      }
    }
    // Phase one is bounded below by zero, so some row always limits the step.
    if (leave == m) throw Error("internal: unbounded phase-one LP");
    t.pivot(leave, enter, objective);
    basis[leave] = enter;
  }

  // objective[cols] holds minus the optimal sum of artificials.
  if (sgn(objective[cols]) != 0) return std::nullopt;
  RationalVector x(n, Rational(0));
  for (std::size_t r = 0; r < m; ++r)
    if (basis[r] < n) x[basis[r]] = t.rhs(r);
  return x;
}

const char* to_string(ClaimKind kind) {
  switch (kind) {
    case ClaimKind::adjacency: return "adjacency";
    case ClaimKind::non_adjacency: return "non-adjacency";
    case ClaimKind::facet: return "facet";
    case ClaimKind::dimension: return "dimension";
    case ClaimKind::separation: return "separation";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Adjacency

namespace {

Rational dot(const RationalVector& w, std::span<const std::uint8_t> v) {
  Rational s(0);
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j]) s += w[j];
  return s;
}

void check_cloud(const std::vector<CharImset>& cloud, std::size_t first, std::size_t second) {
  if (cloud.size() > kMaxCloudSize) throw LimitError("vertex cloud larger than 2^16 points");
  if (first >= cloud.size() || second >= cloud.size()) throw DomainError("vertex index outside the cloud");
  for (const auto& v : cloud)
    if (v.size() != cloud.front().size()) throw DomainError("cloud points differ in dimension");
}

// w with w·v1 = w·v2 and w·v1 >= w·u + 1 for every other cloud point u.
std::optional<RationalVector> synthesize_separator(const std::vector<CharImset>& cloud, std::size_t first,
                                                   std::size_t second) {
  const auto v1 = cloud[first].bits();
  const auto v2 = cloud[second].bits();
  const std::size_t d = v1.size();
  std::vector<std::size_t> others;
  for (std::size_t u = 0; u < cloud.size(); ++u)
    if (cloud[u] != cloud[first] && cloud[u] != cloud[second]) others.push_back(u);

  // w = p - q with p, q >= 0.
  RationalMatrix a(others.size() + 1, 2 * d);
  RationalVector b(others.size() + 1);
  std::vector<bool> eq(others.size() + 1, false);
  for (std::size_t j = 0; j < d; ++j) {
    const int diff = int(v1[j]) - int(v2[j]);
    a(0, j) = diff;
    a(0, d + j) = -diff;
  }
  eq[0] = true;
  for (std::size_t r = 0; r < others.size(); ++r) {
    const auto u = cloud[others[r]].bits();
    for (std::size_t j = 0; j < d; ++j) {
      const int diff = int(u[j]) - int(v1[j]);
      if (diff == 0) continue;
      a(r + 1, j) = diff;
      a(r + 1, d + j) = -diff;
    }
    b[r + 1] = -1;
  }
  auto x = lp_feasible(a, b, eq);
  if (!x) return std::nullopt;
  RationalVector w(d);
  for (std::size_t j = 0; j < d; ++j) w[j] = (*x)[j] - (*x)[d + j];
  return w;
}

}  // namespace

Certificate oracle_adjacent(const std::vector<CharImset>& cloud, std::size_t first, std::size_t second,
                            const AdjacencyOptions& options) {
  check_cloud(cloud, first, second);
  if (cloud[first] == cloud[second]) throw DegeneratePairError("a vertex is not adjacent to itself");
  const auto v1 = cloud[first].bits();
  const auto v2 = cloud[second].bits();
  const std::size_t d = v1.size();

  // Midpoint coordinates are 0, 1/2 or 1. Because every λ and every u is
  // nonnegative and Σλ = 1, a 0 (resp. 1) in the midpoint forces u_j = 0
  // (resp. 1) on the support; only the 1/2 coordinates remain as rows.
  std::vector<std::size_t> half_rows;
  for (std::size_t j = 0; j < d; ++j)
    if (v1[j] != v2[j]) half_rows.push_back(j);
  std::vector<std::size_t> columns;
  for (std::size_t u = 0; u < cloud.size(); ++u) {
    if (cloud[u] == cloud[first] || cloud[u] == cloud[second]) continue;
    const auto bits = cloud[u].bits();
    bool compatible = true;
    for (std::size_t j = 0; j < d && compatible; ++j)
      if (v1[j] == v2[j] && bits[j] != v1[j]) compatible = false;
    if (compatible) columns.push_back(u);
  }

  Certificate cert{ClaimKind::adjacency, false, {first, second}, {}, {}, {}};
  std::optional<RationalVector> lambda;
  if (!columns.empty()) {
    RationalMatrix a(half_rows.size() + 1, columns.size());
    RationalVector b(half_rows.size() + 1, Rational(1, 2));
    for (std::size_t r = 0; r < half_rows.size(); ++r)
      for (std::size_t c = 0; c < columns.size(); ++c) a(r, c) = cloud[columns[c]][half_rows[r]];
    for (std::size_t c = 0; c < columns.size(); ++c) a(half_rows.size(), c) = 1;
    b[half_rows.size()] = 1;
    lambda = lp_feasible(a, b, std::vector<bool>(half_rows.size() + 1, true));
  }

  if (lambda) {
    cert.kind = ClaimKind::non_adjacency;
    for (std::size_t c = 0; c < columns.size(); ++c)
      if (sgn((*lambda)[c]) != 0) {
        cert.support.push_back(columns[c]);
        cert.witness.push_back((*lambda)[c]);
      }
  } else if (options.synthesize_witness) {
    auto w = synthesize_separator(cloud, first, second);
    if (!w) {
      cert.note = "midpoint test says adjacent but no separating cost vector exists";
      return cert;
    }
    cert.witness = std::move(*w);
  }
  cert.verified = replay(cert, cloud);
  if (!cert.verified && cert.note.empty()) cert.note = "witness failed to replay";
  return cert;
}

Certificate check_separation(const RationalVector& w, const std::vector<CharImset>& cloud, std::size_t first,
                             std::size_t second) {
  check_cloud(cloud, first, second);
  Certificate cert{ClaimKind::separation, false, {first, second}, w, {}, {}};
  cert.verified = replay(cert, cloud);
  if (!cert.verified) cert.note = "cost vector does not single out the pair";
  return cert;
}

// ---------------------------------------------------------------------------
// Rank

namespace {

// Rank over GF(2), rows packed into 64-bit words. Any nonzero minor modulo 2
// is nonzero over the integers, so this is a lower bound on the rational rank.
std::size_t rank_mod2(const std::vector<std::vector<std::int8_t>>& rows, std::size_t cols) {
  const std::size_t words = (cols + 63) / 64;
  std::vector<std::vector<std::uint64_t>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<std::uint64_t> packed(words, 0);
    for (std::size_t c = 0; c < cols; ++c)
      if (row[c] & 1) packed[c / 64] |= std::uint64_t{1} << (c % 64);
    m.push_back(std::move(packed));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    const std::size_t w = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < m.size() && !(m[pivot][w] & bit)) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t r = 0; r < m.size(); ++r)
      if (r != rank && (m[r][w] & bit))
        for (std::size_t k = w; k < words; ++k) m[r][k] ^= m[rank][k];
    ++rank;
  }
  return rank;
}

// Fraction-free elimination over the integers; rows are divided by their
// content after each step to keep entries small.
std::size_t rank_exact(const std::vector<std::vector<std::int8_t>>& rows, std::size_t cols) {
  std::vector<std::vector<mpz_class>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) m.emplace_back(row.begin(), row.end());
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && sgn(m[pivot][c]) == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    const mpz_class p = m[rank][c];
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (sgn(m[r][c]) == 0) continue;
      const mpz_class f = m[r][c];
      mpz_class content = 0;
      for (std::size_t k = c; k < cols; ++k) {
        m[r][k] = m[r][k] * p - f * m[rank][k];
        mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), m[r][k].get_mpz_t());
      }
      if (content > 1)
        for (std::size_t k = c; k < cols; ++k) mpz_divexact(m[r][k].get_mpz_t(), m[r][k].get_mpz_t(), content.get_mpz_t());
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t affine_dimension(const std::vector<std::vector<std::uint8_t>>& cloud) {
  if (cloud.empty()) throw DomainError("affine dimension of an empty cloud");
  if (cloud.size() > kMaxCloudSize || cloud.front().size() > kMaxCloudSize)
    throw LimitError("cloud exceeds 2^16 points or coordinates");
  const std::size_t cols = cloud.front().size();
  std::vector<std::vector<std::int8_t>> diffs;
  diffs.reserve(cloud.size() - 1);
  for (std::size_t i = 1; i < cloud.size(); ++i) {
    if (cloud[i].size() != cols) throw DomainError("cloud points differ in dimension");
    std::vector<std::int8_t> row(cols);
    for (std::size_t c = 0; c < cols; ++c) row[c] = static_cast<std::int8_t>(int(cloud[i][c]) - int(cloud[0][c]));
    diffs.push_back(std::move(row));
  }
  if (diffs.empty() || cols == 0) return 0;
  const std::size_t ceiling = std::min(diffs.size(), cols);
  // GF(2) rank <= rational rank <= min(rows, cols): a full mod-2 rank settles it.
  if (rank_mod2(diffs, cols) == ceiling) return ceiling;
  return rank_exact(diffs, cols);
}

std::size_t affine_dimension(const std::vector<CharImset>& cloud) {
  std::vector<std::vector<std::uint8_t>> points;
  points.reserve(cloud.size());
  for (const auto& v : cloud) points.emplace_back(v.bits().begin(), v.bits().end());
  return affine_dimension(points);
}

// ---------------------------------------------------------------------------
// Facets

FacetRow dense_facet_row(unsigned k, Subset s) {
  if (k == 0 || k > kMaxBlockWidth) throw DomainError("facet row width out of range");
  const Subset all = lower_set(k);
  if (!is_subset(s, all)) throw DomainError("facet row subset outside the lattice");
  const auto& table = graded_lex_table(k);
  FacetRow row{s, std::vector<std::int64_t>(table.order.size(), 0)};
  // Written out from the sign rule directly: entry t is (-1)^{|t|-|s|} when s ⊆ t.
  for (std::size_t pos = 0; pos < table.order.size(); ++pos) {
    const Subset t = table.order[pos];
    if (is_subset(s, t)) row.coefficients[pos] = ((cardinality(t) - cardinality(s)) % 2 == 0) ? 1 : -1;
  }
  return row;
}

namespace {

const CoordinateIndex::Block& single_block(const std::vector<CharImset>& cloud) {
  if (cloud.empty()) throw DomainError("empty vertex cloud");
  const auto& index = cloud.front().index();
  if (index.blocks().size() != 1) throw DomainError("facet checks need a family with exactly one block");
  return index.blocks().front();
}

std::int64_t evaluate_dense(const std::vector<std::int64_t>& coefficients, std::span<const std::uint8_t> v) {
  std::int64_t total = coefficients[0];
  for (std::size_t j = 0; j < v.size(); ++j)
    if (v[j]) total += coefficients[j + 1];
  return total;
}

}  // namespace

Certificate oracle_facet_check(const FacetRow& row, const std::vector<CharImset>& cloud) {
  const auto& block = single_block(cloud);
  const std::size_t d = cloud.front().size();
  Certificate cert{ClaimKind::facet, false, {}, {}, {}, {}};
  for (auto c : row.coefficients) cert.witness.emplace_back(static_cast<long>(c));
  if (row.coefficients.size() != d + 1) {
    cert.note = "row has " + std::to_string(row.coefficients.size()) + " entries; expected " + std::to_string(d + 1);
    return cert;
  }
  const auto& ordering = cloud.front().index().spec().ordering();
  const Subset target = deposit(row.row, block.members);

  std::vector<CharImset> tight;
  std::optional<std::size_t> opposite;
  for (std::size_t i = 0; i < cloud.size(); ++i) {
    const std::int64_t value = evaluate_dense(row.coefficients, cloud[i].bits());
    const Subset pa = imset_to_graph(cloud[i]).parents(block.child);
    if (value < 0) {
      cert.note = "inequality is violated at the vertex with parents {" + ordering.format(pa) + "}";
      return cert;
    }
    if (pa == target) {
      opposite = i;
      if (value == 0) {
        cert.note = "the vertex with parents {" + ordering.format(pa) + "} should lie off the facet";
        return cert;
      }
    } else if (value != 0) {
      cert.note = "the vertex with parents {" + ordering.format(pa) + "} should lie on the facet";
      return cert;
    } else {
      tight.push_back(cloud[i]);
    }
  }
  if (!opposite) {
    cert.note = "no vertex with parents {" + ordering.format(target) + "} in the cloud";
    return cert;
  }
  cert.subjects.push_back(*opposite);
  const std::size_t expected = cloud.size() - 2;
  const std::size_t rank = tight.empty() ? 0 : affine_dimension(tight);
  if (rank != expected) {
    cert.note = "equality set has affine rank " + std::to_string(rank) + "; a facet needs " + std::to_string(expected);
    return cert;
  }
  cert.verified = true;
  return cert;
}

// ---------------------------------------------------------------------------
// Explicit separating cost vectors

namespace {

// Cost vector for one block that is maximised exactly by the two parent sets
// (free-lattice local masks) `x` and `y`, following the case split:
// nested sets with |difference| > 1 or = 1, and incomparable sets with
// both differences > 1, one of them = 1, or both = 1.
std::vector<std::pair<Subset, long>> pair_weights(Subset x, Subset y, unsigned k) {
  std::vector<std::pair<Subset, long>> w;
  auto singletons = [&](auto positive) {
    for (unsigned a = 0; a < k; ++a) w.emplace_back(singleton(a), positive(singleton(a)) ? 1 : -1);
  };
  if (is_subset(y, x)) std::swap(x, y);
  if (is_subset(x, y)) {
    const Subset a1 = x, a2 = y, diff = y & ~x;
    if (cardinality(diff) > 1) {
      singletons([&](Subset a) { return (a & a1) != 0; });
      w.emplace_back(diff, static_cast<long>(cardinality(diff)));
    } else {
      for (unsigned a = 0; a < k; ++a) {
        const Subset s = singleton(a);
        if (s & a1) w.emplace_back(s, 1);
        else if (!(s & a2)) w.emplace_back(s, -1);
      }
    }
    return w;
  }
  Subset only1 = x & ~y, only2 = y & ~x;
  const Subset both = x & y;
  const unsigned n1 = cardinality(only1), n2 = cardinality(only2);
  if (n1 > 1 && n2 > 1) {
    singletons([&](Subset a) { return (a & both) != 0; });
    w.emplace_back(only1 | only2, -2);
    w.emplace_back(only1, static_cast<long>(n1 + 1));
    w.emplace_back(only2, static_cast<long>(n2 + 1));
  } else if (n1 == 1 && n2 == 1) {
    singletons([&](Subset a) { return (a & (x | y)) != 0; });
    w.emplace_back(only1 | only2, -2);
  } else {
    // Exactly one side differs by a single node; name that side "1".
    Subset a1 = x;
    if (n2 == 1) {
      std::swap(only1, only2);
      a1 = y;
    }
    singletons([&](Subset a) { return (a & a1) != 0; });
    w.emplace_back(only1 | only2, -2);
    w.emplace_back(only2, static_cast<long>(cardinality(only2) + 1));
  }
  return w;
}

}  // namespace

RationalVector closed_form_witness(const CoordinateIndex& index, const ParentMap& g1, const ParentMap& g2) {
  const auto& spec = index.spec();
  require_member(spec, g1);
  require_member(spec, g2);
  std::optional<std::size_t> differing;
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (g1.parents(i) == g2.parents(i)) continue;
    if (differing) throw DomainError("the graphs differ in more than one parent set; they are not neighbours");
    differing = i;
  }
  if (!differing) throw DegeneratePairError("a vertex is not its own neighbour");

  RationalVector w(index.size(), Rational(0));
  for (const auto& block : index.blocks()) {
    const std::size_t child = block.child;
    const Subset floor = spec.floor(child);
    const auto free_members = members_of(spec.free(child));
    const unsigned k = static_cast<unsigned>(free_members.size());
    if (k == 0) continue;
    const Subset x = extract(g1.parents(child) & ~floor, free_members);
    std::vector<std::pair<Subset, long>> weights;
    if (child == *differing) {
      weights = pair_weights(x, extract(g2.parents(child) & ~floor, free_members), k);
    } else {
      // Unique maximiser x: reward its members, penalise the rest.
      for (unsigned a = 0; a < k; ++a) weights.emplace_back(singleton(a), (x & singleton(a)) ? 1 : -1);
    }
    for (const auto& [local, value] : weights)
      w[index.position(child, floor | deposit(local, free_members))] = value;
  }
  return w;
}

// ---------------------------------------------------------------------------

bool replay(const Certificate& cert, const std::vector<CharImset>& cloud) {
  switch (cert.kind) {
    case ClaimKind::adjacency:
    case ClaimKind::separation: {
      if (cert.subjects.size() != 2) return false;
      const auto& v1 = cloud.at(cert.subjects[0]);
      const auto& v2 = cloud.at(cert.subjects[1]);
      if (cert.witness.empty()) return cert.kind == ClaimKind::adjacency;
      if (cert.witness.size() != v1.size()) return false;
      const Rational top = dot(cert.witness, v1.bits());
      if (dot(cert.witness, v2.bits()) != top) return false;
      for (const auto& u : cloud) {
        if (u == v1 || u == v2) continue;
        if (!(dot(cert.witness, u.bits()) < top)) return false;
      }
      return true;
    }
    case ClaimKind::non_adjacency: {
      if (cert.subjects.size() != 2 || cert.support.size() != cert.witness.size() || cert.support.empty()) return false;
      const auto& v1 = cloud.at(cert.subjects[0]);
      const auto& v2 = cloud.at(cert.subjects[1]);
      RationalVector combo(v1.size(), Rational(0));
      Rational total(0);
      for (std::size_t i = 0; i < cert.support.size(); ++i) {
        const auto& u = cloud.at(cert.support[i]);
        if (u == v1 || u == v2 || sgn(cert.witness[i]) < 0) return false;
        total += cert.witness[i];
        for (std::size_t j = 0; j < u.size(); ++j)
          if (u[j]) combo[j] += cert.witness[i];
      }
      if (total != 1) return false;
      for (std::size_t j = 0; j < v1.size(); ++j)
        if (combo[j] * 2 != int(v1[j]) + int(v2[j])) return false;
      return true;
    }
    case ClaimKind::facet: {
      if (cert.subjects.size() != 1 || cert.witness.empty()) return false;
      for (std::size_t i = 0; i < cloud.size(); ++i) {
        Rational value = cert.witness[0];
        for (std::size_t j = 0; j < cloud[i].size(); ++j)
          if (cloud[i][j]) value += cert.witness[j + 1];
        if (sgn(value) < 0) return false;
        if ((i == cert.subjects[0]) != (sgn(value) > 0)) return false;
      }
      return true;
    }
    case ClaimKind::dimension:
      return cert.witness.size() == 1 && cert.witness[0] == static_cast<long>(affine_dimension(cloud));
  }
  return false;
}

// ---------------------------------------------------------------------------

ParentMap learn_bruteforce(const FamilySpec& spec, const ScoreTable& table) {
  if (!(table.spec() == spec)) throw DomainError("score table does not cover the family");
  FamilyEnumerator it(spec, kBruteForceLimit);
  std::optional<ParentMap> best;
  double best_score = 0.0;
  while (auto g = it.next()) {
    double total = 0.0;
    for (std::size_t i = 0; i < spec.size(); ++i) total += table.local(i, g->parents(i));
    total = snap(total);
    if (!best || total > best_score) {
      best_score = total;
      best = std::move(g);
    }
  }
  return *best;
}

}  // namespace cimset
