#include "doctest.h"
#include "helpers.hpp"
#include "symgraph/checks.hpp"
#include "symgraph/constructions.hpp"
#include "symgraph/tuples.hpp"

using namespace symgraph;

TEST_SUITE("construct") {
  TEST_CASE("beta, wp and varpi at n = 15") {
    CHECK(beta(15) == 5);
    CHECK(beta(14) == 4);
    CHECK(beta(1) == 1);
    CHECK(wp(1, 15) == PartTuple{7, 8});
    CHECK(wp(2, 15) == PartTuple{4, 5, 6});
    CHECK(wp(3, 15) == PartTuple{2, 3, 4, 6});
    CHECK(wp(4, 15) == PartTuple{1, 2, 3, 4, 5});
    const std::int64_t want[] = {56, 74, 80, 85};
    for (int s = 1; s <= 4; ++s) CHECK(varpi(s, 15) == want[s - 1]);
  }

  TEST_CASE("varpi small values") {
    CHECK(varpi(1, 3) == 2);
    CHECK(varpi(1, 4) == 3);
    CHECK(varpi(1, 5) == 6);
    CHECK(varpi(1, 6) == 8);
    CHECK(varpi(2, 6) == 11);
    CHECK(varpi(1, 7) == 12);
    CHECK(varpi(2, 7) == 14);
  }

  TEST_CASE("wt and membership") {
    CHECK(wt(15, {1, 2, 3, 9}) == 65);
    CHECK_THROWS_AS(wt(15, {1, 2, 3}), DomainError);
    CHECK(in_P(3, 15, {1, 2, 3, 9}));
    CHECK_FALSE(in_P(3, 15, {0, 2, 4, 9}));
    CHECK(in_I(3, 15, {0, 2, 4, 9}));
    CHECK_FALSE(in_I(3, 15, {1, 1, 4, 9}));
    CHECK(v_tuple(3, 15) == PartTuple{1, 2, 3, 9});
    CHECK(enumerate_P(4, 15) == std::vector<PartTuple>{{1, 2, 3, 4, 5}});
    CHECK(enumerate_P(5, 15).empty());
  }

  TEST_CASE("elementary modifications reach wp with increasing weight") {
    CHECK_FALSE(modify({1, 2, 3, 9}, 1, 4).has_value());
    CHECK(modify({1, 2, 3, 9}, 3, 4) == std::optional<PartTuple>(PartTuple{1, 2, 4, 8}));
    CHECK_THROWS_AS(modify({1, 2, 3}, 2, 2), DomainError);
    const auto path = modification_path(15, {1, 2, 3, 9});
    CHECK(path.front() == PartTuple{1, 2, 3, 9});
    CHECK(path.back() == wp(3, 15));
    for (std::size_t k = 1; k < path.size(); ++k) CHECK(wt(15, path[k]) > wt(15, path[k - 1]));
  }

  TEST_CASE("nu and d") {
    const PartTuple a{1, 2, 3, 9};
    for (std::int64_t n = 1; n <= 5; ++n) CHECK(nu(65 + n, 15, a) == (n + 2) * (n + 1) / 2);
    CHECK_THROWS_AS(nu(65, 15, a), DomainError);
    CHECK(composition_count(3, 3) == 10);
    CHECK(compositions(2, 2) == std::vector<std::vector<std::int64_t>>{{2, 0}, {1, 1}, {0, 2}});
    const DegreeBound d = d_of(12, 6, {1, 2, 3});
    CHECK(d.value == 6);
    CHECK_FALSE(d.formula_discrepancy);
    CHECK(d_of(95, 15, wp(4, 15)).value == 24);
  }

  TEST_CASE("even regular matrices") {
    for (auto [n, d] : std::vector<std::pair<std::size_t, std::int64_t>>{{2, 2}, {3, 4}, {4, 2}, {5, 4}, {6, 6}, {7, 8}}) {
      const EdgeMatrix e = even_regular(n, d);
      CHECK(e.size() == n);
      CHECK(e.regular_degree() == std::optional<std::int64_t>(d));
      CHECK(e.all_even());
      CHECK(nonzero_test(e).reason == NonzeroReason::kEvenEntries);
    }
    CHECK_THROWS_AS(even_regular(3, 2), DomainError);
    CHECK_THROWS_AS(even_regular(4, 3), DomainError);
  }

  TEST_CASE("balanced fill") {
    const IntMatrix f = balanced_fill(3, 4, {3, 5, 2});
    CHECK(f.row_sums() == std::vector<std::int64_t>{3, 5, 2});
    CHECK(f.col_sums() == std::vector<std::int64_t>{3, 3, 2, 2});
    CHECK_THROWS_AS(balanced_fill(2, 2, {1}), DomainError);
  }

  TEST_CASE("block constructions") {
    const Construction i = thm2_uniform(2, 2, 1, 1);
    CHECK(i.matrix.size() == 4);
    CHECK(i.degree == 2 * 1 * 1 + 1 * 1 * 1);
    CHECK(check_theorem1(i.matrix, i.shape).passes());

    const Construction iv = thm2_skew(0, 2, 1, 1);
    CHECK(iv.matrix.size() == 10);
    CHECK(iv.degree == 21);
    CHECK(iv.weight == 105);
    CHECK(iv.shape.parts() == std::vector<std::size_t>{1, 1, 1, 1, 1, 1, 1, 3});

    const ThreePartBlocks k = y_membership(2, 5, 6, 40);
    CHECK(k.integral);
    CHECK(std::tuple{k.a, k.b, k.c} == std::tuple{2, 5, 6});
    CHECK(y_minimum(2, 5, 6) == 40);
    CHECK_FALSE(y_membership(2, 5, 6, 20).integral);
    CHECK(y_membership(2, 5, 6, 20).reason.find("not an integer") != std::string::npos);
    CHECK_THROWS_AS(thm2_three_part(2, 5, 6, 20), DomainError);
    CHECK_THROWS_AS(y_membership(2, 5, 8, 40), DomainError);

    const Construction v = thm2_bordered(quintic_example(1));
    CHECK(v.matrix.size() == 9);
    CHECK(v.degree == 90);
    CHECK(v.weight == 405);
    REQUIRE(v.input_witness.has_value());
    CHECK(v.input_witness->verdict == Verdict::kNonzero);
    CHECK_THROWS_AS(thm2_bordered(sextic_example(2)), DomainError);  // E_2 is not regular
    CHECK_THROWS_AS(thm2_padded(2, 2, 2, 1, 1), DomainError);
    CHECK_THROWS_AS(thm2_skew(0, 1, 1, 1), DomainError);
  }

  TEST_CASE("desk-scale independent family") {
    const FamilyInstance f = independent_family(6, {1, 2, 3}, 12);
    CHECK(f.theta == 1);
    CHECK(f.nu == 2);
    CHECK(f.degree == 6);
    REQUIRE(f.family.size() == 2);
    for (const auto& m : f.family) {
      CHECK(m.m.norm() == 24);
      CHECK(m.certificate->passes());
      CHECK(block_decompose(m.m, Shape::parse("1,2,3")).star.is_zero());
      const auto r = m.m.row_sums();
      CHECK(r[0] == m.r1);
      for (std::size_t i = 1; i < r.size(); ++i) CHECK(r[i] < r[0]);
    }
    CHECK(f.family[0].theta == std::vector<std::int64_t>{1, 0});
    CHECK(f.family[1].theta == std::vector<std::int64_t>{0, 1});
    CHECK_THROWS_AS(independent_family(6, {1, 2, 3}, 11), DomainError);
  }

  TEST_CASE("family at N = 15 has 286 members at w = 95") {
    FamilyOptions o;
    o.certify = false;
    const FamilyInstance f = independent_family(15, wp(4, 15), 95, o);
    CHECK(f.family.size() == 286);
    CHECK(f.degree == 24);
    for (const auto& m : f.family) CHECK(m.m.norm() == 190);
  }
}
