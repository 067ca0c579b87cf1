#include <random>

#include "doctest.h"
#include "support.hpp"

#include "cimset/errors.hpp"
#include "cimset/io.hpp"
#include "cimset/learn.hpp"
#include "cimset/oracle.hpp"

using namespace cimset;

namespace {

ScoreFixture fixture(const char* name) { return load_score_fixture(testing_support::fixture(name)); }

}  // namespace

TEST_CASE("forward worked example: exact finds {a1,a3}, greedy stops at {a2,a3}") {
  const auto fx = fixture("k2_forward.json");
  const auto exact = optimize_exact(fx.table, fx.family);
  CHECK(exact.graph.parents(3) == 0b101);
  CHECK(exact.total_score == 12);  // -<r, c> = 12
  const auto greedy = k2_forward(fx.table, fx.family);
  CHECK(greedy.graph.parents(3) == 0b110);
  CHECK(greedy.total_score == 7);
  CHECK(greedy.method == Method::k2_forward);
  // ∅, then {a1},{a2},{a3}, then {a1,a2},{a2,a3}, then {a1,a2,a3}.
  CHECK(greedy.per_child[3].candidates == 1 + 3 + 2 + 1);
}

TEST_CASE("backward worked example: exact finds {a1}, greedy stops at {a2,a3}") {
  const auto fx = fixture("k2_backward.json");
  const auto exact = optimize_exact(fx.table, fx.family);
  CHECK(exact.graph.parents(3) == 0b001);
  CHECK(exact.total_score == 3);
  const auto greedy = k2_backward(fx.table, fx.family);
  CHECK(greedy.graph.parents(3) == 0b110);
  CHECK(greedy.total_score == 2);
}

TEST_CASE("constant tables fall back to the floor graph") {
  auto o = make_ordering({"x", "y", "z"});
  FamilySpec spec(o, {0, 0, 0b01}, {0, 0b1, 0b11});
  ScoreTable table(spec);
  for (const auto m : {Method::exact, Method::k2_forward, Method::bruteforce}) {
    const auto r = learn(table, spec, m);
    CHECK(r.graph.parent_sets() == std::vector<Subset>{0, 0, 0b01});
  }
  // Backward never improves from the ceiling on a constant table.
  CHECK(k2_backward(table, spec).graph.parent_sets() == std::vector<Subset>{0, 0b1, 0b11});
  const auto report = compare(table, spec);
  CHECK(report.forward.gap == 0);
  CHECK(report.backward.gap == 0);
  CHECK(report.backward.shd == 2);
}

TEST_CASE("monotone tables") {
  const auto spec = diagnosis_family(3, 1);
  ScoreTable shrinking(spec), growing(spec);
  for (std::size_t pos = 0; pos < shrinking.parent_sets(3).size(); ++pos) {
    const double size = cardinality(shrinking.parent_sets(3)[pos]);
    shrinking.set_at(3, pos, -size);
    growing.set_at(3, pos, size);
  }
  CHECK(k2_forward(shrinking, spec).graph.parents(3) == 0);
  CHECK(k2_backward(shrinking, spec).graph.parents(3) == 0);
  CHECK(k2_forward(growing, spec).graph.parents(3) == 0b111);
}

TEST_CASE("greedy ties go to the lowest node") {
  const auto spec = diagnosis_family(3, 1);
  ScoreTable t(spec);
  t.set(3, 0b010, 1.0);
  t.set(3, 0b100, 1.0);
  CHECK(k2_forward(t, spec).graph.parents(3) == 0b010);
  CHECK(optimize_exact(t, spec).graph.parents(3) == 0b010);
}

TEST_CASE("caps restrict every method") {
  const auto base = diagnosis_family(3, 1);
  FamilySpec capped(base.ordering_ptr(), {0, 0, 0, 0}, {0, 0, 0, 0b111}, 2);
  ScoreTable t(capped);
  for (std::size_t pos = 0; pos < t.parent_sets(3).size(); ++pos)
    t.set_at(3, pos, static_cast<double>(cardinality(t.parent_sets(3)[pos])));
  CHECK(optimize_exact(t, capped).graph.parents(3) == 0b011);
  CHECK(k2_forward(t, capped).graph.parents(3) == 0b011);
  // Backward starts from the first two-element set and cannot improve.
  CHECK(k2_backward(t, capped).graph.parents(3) == 0b011);
}

TEST_CASE("exact learning matches exhaustive search and dominates greedy") {
  std::mt19937_64 rng(21);
  auto o = make_ordering({"p", "q", "r", "s", "t"});
  const std::vector<FamilySpec> specs{
      diagnosis_family(3, 1), diagnosis_family(2, 3), full_ordered_family(4),
      FamilySpec(o, {0, 0, 0b01, 0, 0b0011}, {0, 0b1, 0b11, 0b101, 0b1011}),
      FamilySpec(o, {0, 0, 0, 0, 0}, {0, 0b1, 0b11, 0b111, 0b1111}, 2)};
  for (const auto& spec : specs)
    for (int trial = 0; trial < 40; ++trial) {
      const auto table = testing_support::random_table(spec, rng, trial % 2 == 0);
      const auto exact = optimize_exact(table, spec);
      CHECK(exact.graph == learn_bruteforce(spec, table));
      CHECK(k2_forward(table, spec).total_score <= exact.total_score);
      CHECK(k2_backward(table, spec).total_score <= exact.total_score);
      double sum = 0;
      for (const auto& c : exact.per_child) sum += c.score;
      CHECK(exact.total_score == snap(sum));
    }
}

TEST_CASE("shifting one child's scores leaves the argmax alone") {
  std::mt19937_64 rng(23);
  const auto spec = diagnosis_family(3, 2);
  auto table = testing_support::random_table(spec, rng);
  const auto before = optimize_exact(table, spec);
  for (std::size_t pos = 0; pos < table.parent_sets(3).size(); ++pos)
    table.set_at(3, pos, table.scores(3)[pos] + 17.25);
  CHECK(optimize_exact(table, spec).graph == before.graph);

  // Perturbing child b2 only changes b2's choice.
  table.set(4, 0b101, 1e6);
  const auto after = optimize_exact(table, spec);
  CHECK(after.graph.parents(3) == before.graph.parents(3));
  CHECK(after.graph.parents(4) == 0b101);
}

TEST_CASE("learning is deterministic") {
  std::mt19937_64 a(31), b(31);
  const auto spec = full_ordered_family(5);
  const auto t1 = testing_support::random_table(spec, a);
  const auto t2 = testing_support::random_table(spec, b);
  for (const auto m : {Method::exact, Method::k2_forward, Method::k2_backward}) {
    const auto r1 = learn(t1, spec, m), r2 = learn(t2, spec, m);
    CHECK(r1.graph == r2.graph);
    CHECK(r1.total_score == r2.total_score);
  }
}

TEST_CASE("comparison report") {
  const auto fx = fixture("k2_forward.json");
  const auto report = compare(fx.table, fx.family);
  CHECK(report.exact.gap == 0);
  CHECK(report.forward.gap == 5);
  CHECK(report.forward.shd == 2);
  CHECK(report.forward.agrees == std::vector<bool>{true, true, true, false});
  const auto j = comparison_to_json(report);
  CHECK(j["k2-forward"]["gap"] == 5.0);
  CHECK(j["exact"]["graph"]["parents"][3] == Json({"a1", "a3"}));
}

TEST_CASE("methods parse from CLI spellings") {
  CHECK(parse_method("k2f") == Method::k2_forward);
  CHECK(parse_method("k2-backward") == Method::k2_backward);
  CHECK_THROWS_AS(parse_method("ilp"), DomainError);
  const auto spec = diagnosis_family(2, 1);
  CHECK_THROWS_AS(optimize_exact(ScoreTable(diagnosis_family(2, 2)), spec), DomainError);
}
