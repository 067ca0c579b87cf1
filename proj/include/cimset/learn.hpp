#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cimset/graphs.hpp"
#include "cimset/scoring.hpp"

namespace cimset {

enum class Method { exact, k2_forward, k2_backward, bruteforce };
const char* to_string(Method m);
// Accepts the CLI spellings exact, k2f, k2b, bruteforce as well as k2-forward / k2-backward.
Method parse_method(std::string_view name);

struct ChildChoice {
  std::size_t child;
  Subset parents;
  double score;
  std::uint64_t candidates;  // parent sets whose local score was consulted
};

struct LearnResult {
  ParentMap graph;
  double total_score;
  std::vector<ChildChoice> per_child;
  Method method;
};

// Per child, the admissible parent set with the highest local score; ties go
// to the graded-lex smallest set. Block independence makes this the global
// maximum over the family.
LearnResult optimize_exact(const ScoreTable& table, const FamilySpec& spec);

// Greedy single-node additions from the floor, strict improvement only,
// ties to the lowest node position.
LearnResult k2_forward(const ScoreTable& table, const FamilySpec& spec);

// Greedy single-node removals from the ceiling (under a cap: the first
// maximal admissible set in graded-lex order).
LearnResult k2_backward(const ScoreTable& table, const FamilySpec& spec);

LearnResult learn(const ScoreTable& table, const FamilySpec& spec, Method method);

struct MethodReport {
  LearnResult result;
  double gap;                  // exact total minus this total, >= 0
  std::size_t shd;             // against the exact graph
  std::vector<bool> agrees;    // per child, same parent set as exact
};

struct ComparisonReport {
  MethodReport exact;
  MethodReport forward;
  MethodReport backward;
};

ComparisonReport compare(const ScoreTable& table, const FamilySpec& spec);

}  // namespace cimset
