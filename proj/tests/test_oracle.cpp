#include "doctest.h"
#include "support.hpp"

#include "cimset/errors.hpp"
#include "cimset/geometry.hpp"
#include "cimset/io.hpp"
#include "cimset/oracle.hpp"

using namespace cimset;
using testing_support::cloud_of;

namespace {

std::size_t index_of(const std::vector<ParentMap>& members, const ParentMap& g) {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i] == g) return i;
  FAIL("graph not in family");
  return 0;
}

}  // namespace

TEST_CASE("exact LP feasibility") {
  RationalMatrix a(1, 1);
  a(0, 0) = 1;
  auto x = lp_feasible(a, {Rational(1)}, {false});
  REQUIRE(x);
  CHECK(((*x)[0] >= 0 && (*x)[0] <= 1));
  CHECK_FALSE(lp_feasible(a, {Rational(-1)}, {false}));

  // x + y = 1, x - y = 1/2
  RationalMatrix b(2, 2);
  b(0, 0) = 1, b(0, 1) = 1, b(1, 0) = 1, b(1, 1) = -1;
  auto z = lp_feasible(b, {Rational(1), Rational(1, 2)}, {true, true});
  REQUIRE(z);
  CHECK((*z)[0] == Rational(3, 4));
  CHECK((*z)[1] == Rational(1, 4));

  // x - y = 1 with y <= -1 forces y < 0: infeasible under x, y >= 0.
  RationalMatrix c(2, 2);
  c(0, 0) = 1, c(0, 1) = -1, c(1, 1) = 1;
  CHECK_FALSE(lp_feasible(c, {Rational(1), Rational(-1)}, {true, false}));

  // -x <= -2 means x >= 2.
  RationalMatrix d(1, 1);
  d(0, 0) = -1;
  auto w = lp_feasible(d, {Rational(-2)}, {false});
  REQUIRE(w);
  CHECK((*w)[0] >= 2);

  CHECK_THROWS_AS(lp_feasible(RationalMatrix(kMaxLpSize + 1, 1), RationalVector(kMaxLpSize + 1), std::vector<bool>(kMaxLpSize + 1)),
                  LimitError);
  CHECK_THROWS_AS(lp_feasible(a, {}, {}), DomainError);
}

TEST_CASE("every pair of P_{2,1} vertices is adjacent") {
  const auto spec = diagnosis_family(2, 1);
  const auto cloud = cloud_of(spec, coordinate_index(spec));
  for (std::size_t i = 0; i < cloud.size(); ++i)
    for (std::size_t j = i + 1; j < cloud.size(); ++j) {
      const auto cert = oracle_adjacent(cloud, i, j);
      CHECK(cert.kind == ClaimKind::adjacency);
      CHECK(cert.verified);
      CHECK(cert.witness.size() == cloud[i].size());
      CHECK(replay(cert, cloud));
      CHECK(check_separation(cert.witness, cloud, i, j).verified);
    }
  CHECK_THROWS_AS(oracle_adjacent(cloud, 1, 1), DegeneratePairError);
}

TEST_CASE("P_{2,2}: one-block differences are edges, two-block differences are not") {
  const auto spec = diagnosis_family(2, 2);
  const auto members = enumerate_family(spec);
  const auto cloud = cloud_of(spec, coordinate_index(spec));
  const auto o = spec.ordering_ptr();
  const ParentMap g1(o, {0, 0, 0b01, 0b11});
  const ParentMap g2(o, {0, 0, 0b10, 0b00});
  const auto i = index_of(members, g1), j = index_of(members, g2);
  const auto cert = oracle_adjacent(cloud, i, j);
  CHECK(cert.kind == ClaimKind::non_adjacency);
  CHECK(cert.verified);
  CHECK(replay(cert, cloud));

  // The swap pattern: the midpoint is also the average of the two cross graphs.
  Certificate swap{ClaimKind::non_adjacency, false, {i, j}, {Rational(1, 2), Rational(1, 2)},
                   {index_of(members, ParentMap(o, {0, 0, 0b01, 0b00})), index_of(members, ParentMap(o, {0, 0, 0b10, 0b11}))},
                   {}};
  CHECK(replay(swap, cloud));

  const auto k = index_of(members, g1.with_parents(3, 0b10));
  const auto edge = oracle_adjacent(cloud, i, k);
  CHECK(edge.kind == ClaimKind::adjacency);
  CHECK(edge.verified);
}

TEST_CASE("adjacency oracle agrees with the closed form") {
  std::vector<FamilySpec> specs{diagnosis_family(1, 3), diagnosis_family(3, 1), diagnosis_family(2, 2),
                                full_ordered_family(3)};
  auto o = make_ordering({"x", "y", "z", "w"});
  specs.emplace_back(o, std::vector<Subset>{0, 0, 0b01, 0b001}, std::vector<Subset>{0, 0b1, 0b11, 0b101});
  for (const auto& spec : specs) {
    const auto members = enumerate_family(spec);
    const auto cloud = cloud_of(spec, coordinate_index(spec));
    for (std::size_t i = 0; i < cloud.size(); ++i)
      for (std::size_t j = i + 1; j < cloud.size(); ++j) {
        const auto cert = oracle_adjacent(cloud, i, j);
        CHECK(cert.verified);
        CHECK((cert.kind == ClaimKind::adjacency) == are_neighbors(members[i], members[j], spec));
      }
  }
}

TEST_CASE("tampered certificates fail replay") {
  const auto spec = diagnosis_family(2, 1);
  const auto cloud = cloud_of(spec, coordinate_index(spec));
  auto cert = oracle_adjacent(cloud, 0, 3);
  REQUIRE(cert.verified);
  for (auto& w : cert.witness) w = 0;
  CHECK_FALSE(replay(cert, cloud));

  const auto spec22 = diagnosis_family(2, 2);
  const auto cloud22 = cloud_of(spec22, coordinate_index(spec22));
  auto non = oracle_adjacent(cloud22, 0, cloud22.size() - 1);
  REQUIRE(non.kind == ClaimKind::non_adjacency);
  non.witness[0] += Rational(1, 8);
  CHECK_FALSE(replay(non, cloud22));
}

TEST_CASE("affine dimension") {
  const auto p22 = diagnosis_family(2, 2);
  CHECK(affine_dimension(cloud_of(p22, coordinate_index(p22))) == 6);
  const auto p3 = full_ordered_family(3);
  CHECK(affine_dimension(cloud_of(p3, coordinate_index(p3))) == 4);
  CHECK(affine_dimension(std::vector<std::vector<std::uint8_t>>{{1, 0, 1}}) == 0);
  CHECK_THROWS_AS(affine_dimension(std::vector<std::vector<std::uint8_t>>{}), DomainError);

  // Rank 2 modulo 2 but 3 over the rationals (determinant 2).
  const std::vector<std::vector<std::uint8_t>> odd{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 0, 1}};
  CHECK(affine_dimension(odd) == 3);
  const std::vector<std::vector<std::uint8_t>> flat{{0, 0, 0}, {1, 1, 0}, {0, 1, 1}, {1, 1, 0}};
  CHECK(affine_dimension(flat) == 2);
}

TEST_CASE("facet checks") {
  const auto spec21 = diagnosis_family(2, 1);
  const auto cloud21 = cloud_of(spec21, coordinate_index(spec21));
  const auto row = dense_facet_row(2, 0);
  CHECK(row.coefficients == std::vector<std::int64_t>{1, -1, -1, 1});
  const auto cert = oracle_facet_check(row, cloud21);
  CHECK(cert.verified);
  REQUIRE(cert.subjects.size() == 1);
  CHECK(cert.subjects[0] == 0);  // c_{G_0}
  CHECK(replay(cert, cloud21));

  const auto spec31 = diagnosis_family(3, 1);
  const auto cloud31 = cloud_of(spec31, coordinate_index(spec31));
  for (Subset s = 0; s < 8; ++s) {
    const auto c = oracle_facet_check(dense_facet_row(3, s), cloud31);
    CHECK(c.verified);
    CHECK(replay(c, cloud31));
  }

  auto flipped = dense_facet_row(3, 0b001);
  flipped.coefficients[4] = -flipped.coefficients[4];
  const auto bad = oracle_facet_check(flipped, cloud31);
  CHECK_FALSE(bad.verified);
  CHECK(bad.note.find("parents") != std::string::npos);

  auto short_row = dense_facet_row(2, 0);
  CHECK_FALSE(oracle_facet_check(short_row, cloud31).verified);

  const auto spec22 = diagnosis_family(2, 2);
  CHECK_THROWS_AS(oracle_facet_check(row, cloud_of(spec22, coordinate_index(spec22))), DomainError);
  CHECK_THROWS_AS(dense_facet_row(2, 0b100), DomainError);
}

TEST_CASE("explicit cost vectors separate every adjacent pair") {
  for (int m = 1; m <= 4; ++m) {
    const auto spec = diagnosis_family(m, 1);
    const auto index = coordinate_index(spec);
    const auto members = enumerate_family(spec);
    const auto cloud = cloud_of(spec, index);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const auto w = closed_form_witness(*index, members[i], members[j]);
        const auto cert = check_separation(w, cloud, i, j);
        INFO("m=", m, " pa1=", members[i].parents(m), " pa2=", members[j].parents(m));
        CHECK(cert.verified);
      }
  }
}

TEST_CASE("explicit cost vectors on product families and floors") {
  auto o = make_ordering({"x", "y", "z", "w", "v"});
  const std::vector<FamilySpec> specs{
      diagnosis_family(2, 2), full_ordered_family(4),
      FamilySpec(o, {0, 0, 0b01, 0, 0b0011}, {0, 0b1, 0b11, 0b101, 0b1011})};
  for (const auto& spec : specs) {
    const auto index = coordinate_index(spec);
    const auto members = enumerate_family(spec);
    const auto cloud = cloud_of(spec, index);
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        if (!are_neighbors(members[i], members[j], spec)) {
          CHECK_THROWS_AS(closed_form_witness(*index, members[i], members[j]), DomainError);
          continue;
        }
        CHECK(check_separation(closed_form_witness(*index, members[i], members[j]), cloud, i, j).verified);
      }
  }
  CHECK_THROWS_AS(closed_form_witness(*coordinate_index(specs[0]), ParentMap::empty(specs[0].ordering_ptr()),
                                  ParentMap::empty(specs[0].ordering_ptr())),
                  DegeneratePairError);
}

TEST_CASE("brute-force learning") {
  const auto forward = load_score_fixture(testing_support::fixture("k2_forward.json"));
  CHECK(learn_bruteforce(forward.family, forward.table).parents(3) == 0b101);
  const auto backward = load_score_fixture(testing_support::fixture("k2_backward.json"));
  CHECK(learn_bruteforce(backward.family, backward.table).parents(3) == 0b001);

  const auto spec = diagnosis_family(2, 2);
  CHECK(learn_bruteforce(spec, ScoreTable(spec)) == ParentMap::empty(spec.ordering_ptr()));
  CHECK_THROWS_AS(learn_bruteforce(diagnosis_family(3, 7), ScoreTable(diagnosis_family(3, 7))), LimitError);
  CHECK_THROWS_AS(learn_bruteforce(spec, ScoreTable(diagnosis_family(2, 1))), DomainError);
}
