#include "cimset/learn.hpp"

#include "cimset/errors.hpp"
#include "cimset/oracle.hpp"

namespace cimset {

const char* to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::k2_forward: return "k2-forward";
    case Method::k2_backward: return "k2-backward";
    case Method::bruteforce: return "bruteforce";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "exact") return Method::exact;
  if (name == "k2f" || name == "k2-forward") return Method::k2_forward;
  if (name == "k2b" || name == "k2-backward") return Method::k2_backward;
  if (name == "bruteforce") return Method::bruteforce;
  throw DomainError("unknown method '" + std::string(name) + "' (expected exact, k2f, k2b or bruteforce)");
}

namespace {

void require_cover(const ScoreTable& table, const FamilySpec& spec) {
  if (!(table.spec() == spec)) throw DomainError("score table does not cover the family");
}

LearnResult assemble(const FamilySpec& spec, std::vector<ChildChoice> choices, Method method) {
  std::vector<Subset> parents(spec.size());
  double total = 0.0;
  for (const auto& c : choices) {
    parents[c.child] = c.parents;
    total += c.score;
  }
  return LearnResult{ParentMap(spec.ordering_ptr(), std::move(parents)), snap(total), std::move(choices), method};
}

bool room_for(const FamilySpec& spec, Subset p) {
  return !spec.has_cap() || cardinality(p) < *spec.max_parents();
}

}  // namespace

LearnResult optimize_exact(const ScoreTable& table, const FamilySpec& spec) {
  require_cover(table, spec);
  std::vector<ChildChoice> choices;
  for (std::size_t child = 0; child < spec.size(); ++child) {
    // parent_sets is graded-lex, so keeping the first strict maximum
    // implements the tie-break.
    const auto& sets = table.parent_sets(child);
    const auto scores = table.scores(child);
    std::size_t best = 0;
    for (std::size_t pos = 1; pos < sets.size(); ++pos)
      if (snap(scores[pos]) > snap(scores[best])) best = pos;
    choices.push_back(ChildChoice{child, sets[best], scores[best], sets.size()});
  }
  return assemble(spec, std::move(choices), Method::exact);
}

LearnResult k2_forward(const ScoreTable& table, const FamilySpec& spec) {
  require_cover(table, spec);
  std::vector<ChildChoice> choices;
  for (std::size_t child = 0; child < spec.size(); ++child) {
    Subset current = spec.floor(child);
    double score = table.local(child, current);
    std::uint64_t consulted = 1;
    for (;;) {
      if (!room_for(spec, current)) break;
      std::optional<Subset> best;
      double best_score = score;
      for (unsigned a : members_of(spec.free(child) & ~current)) {
        const Subset next = current | singleton(a);
        const double s = table.local(child, next);
        ++consulted;
        if (snap(s) > snap(best_score)) {
          best = next;
          best_score = s;
        }
      }
      if (!best) break;
      current = *best;
      score = best_score;
    }
    choices.push_back(ChildChoice{child, current, score, consulted});
  }
  return assemble(spec, std::move(choices), Method::k2_forward);
}

namespace {

// The largest admissible set: the ceiling, or under a cap the floor plus the
// lowest-positioned free parents (the graded-lex-first set of maximal size).
Subset backward_start(const FamilySpec& spec, std::size_t child) {
  Subset p = spec.ceiling(child);
  if (!spec.has_cap() || cardinality(p) <= *spec.max_parents()) return p;
  p = spec.floor(child);
  for (unsigned a : members_of(spec.free(child))) {
    if (cardinality(p) >= *spec.max_parents()) break;
    p |= singleton(a);
  }
  return p;
}

}  // namespace

LearnResult k2_backward(const ScoreTable& table, const FamilySpec& spec) {
  require_cover(table, spec);
  std::vector<ChildChoice> choices;
  for (std::size_t child = 0; child < spec.size(); ++child) {
    Subset current = backward_start(spec, child);
    double score = table.local(child, current);
    std::uint64_t consulted = 1;
    for (;;) {
      std::optional<Subset> best;
      double best_score = score;
      for (unsigned a : members_of(current & ~spec.floor(child))) {
        const Subset next = current & ~singleton(a);
        const double s = table.local(child, next);
        ++consulted;
        if (snap(s) > snap(best_score)) {
          best = next;
          best_score = s;
        }
      }
      if (!best) break;
      current = *best;
      score = best_score;
    }
    choices.push_back(ChildChoice{child, current, score, consulted});
  }
  return assemble(spec, std::move(choices), Method::k2_backward);
}

LearnResult learn(const ScoreTable& table, const FamilySpec& spec, Method method) {
  switch (method) {
    case Method::exact: return optimize_exact(table, spec);
    case Method::k2_forward: return k2_forward(table, spec);
    case Method::k2_backward: return k2_backward(table, spec);
    case Method::bruteforce: {
      require_cover(table, spec);
      const ParentMap g = learn_bruteforce(spec, table);
      std::vector<ChildChoice> choices;
      const auto total = FamilyEnumerator(spec, kBruteForceLimit).size();
      for (std::size_t child = 0; child < spec.size(); ++child)
        choices.push_back(ChildChoice{child, g.parents(child), table.local(child, g.parents(child)), total});
      return assemble(spec, std::move(choices), Method::bruteforce);
    }
  }
  throw DomainError("unknown learning method");
}

ComparisonReport compare(const ScoreTable& table, const FamilySpec& spec) {
  auto exact = optimize_exact(table, spec);
  auto report = [&](LearnResult r) {
    MethodReport m{std::move(r), 0.0, 0, {}};
    m.gap = snap(exact.total_score - m.result.total_score);
    m.shd = structural_hamming_distance(exact.graph, m.result.graph);
    for (std::size_t i = 0; i < spec.size(); ++i)
      m.agrees.push_back(exact.graph.parents(i) == m.result.graph.parents(i));
    return m;
  };
  ComparisonReport out{report(exact), report(k2_forward(table, spec)), report(k2_backward(table, spec))};
  return out;
}

}  // namespace cimset
