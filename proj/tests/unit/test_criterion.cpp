#include "doctest.h"
#include "helpers.hpp"
#include "symgraph/checks.hpp"
#include "symgraph/constructions.hpp"
#include "symgraph/criterion.hpp"

using namespace symgraph;

TEST_SUITE("thm1") {
  TEST_CASE("sextic E_1 passes on route 1&2") {
    const Thm1Certificate c = check_theorem1(sextic_example(1), Shape::parse("3,3"));
    CHECK(c.route == Route::kOneTwo);
    CHECK(c.route_1_2);
    CHECK(c.passes());
    CHECK(c.conclusion() == "CERTIFIED-NONZERO");
    CHECK(c.b_table.at({3, 3}) == 28);
    CHECK(c.cond_i.holds());  // M* = 0
    CHECK(c.repeated_parts_branch);
  }

  TEST_CASE("sextic E_2 and E_3 fail: the off-diagonal norm 29 is odd") {
    for (int j : {2, 3}) {
      const Thm1Certificate c = check_theorem1(sextic_example(j), Shape::parse("3,3"));
      CHECK(c.route == Route::kFail);
      CHECK(c.conclusion() == "UNDECIDED-BY-THM1");
      CHECK(c.cond2.status == CondStatus::kFails);
      CHECK(c.cond3.status == CondStatus::kFails);
      CHECK(c.b_table.at({3, 3}) == 29);
    }
  }

  TEST_CASE("condition 1 names the offending entry") {
    // quintic E_1 has a zero in its off-diagonal block at (1, 5) 1-based
    const Thm1Certificate c = check_theorem1(quintic_example(1), Shape::parse("2,3"));
    CHECK(c.cond1.status == CondStatus::kFails);
    REQUIRE(c.cond1.entry.has_value());
    CHECK(*c.cond1.entry == std::pair<std::size_t, std::size_t>{0, 4});
    CHECK_FALSE(c.passes());
  }

  TEST_CASE("condition iv compares M** with M*") {
    // bordered quintic: M** = 18 everywhere off the diagonal blocks, max of M* is 13
    const Construction b = thm2_bordered(quintic_example(1));
    const Thm1Certificate c = check_theorem1(b.matrix, b.shape);
    CHECK(c.cond_iv.holds());
    CHECK(c.min_offdiag == std::optional<std::int64_t>(18));
    CHECK(c.max_diagblock == 13);
    CHECK(c.cond_ii.holds());
    CHECK(c.route == Route::kOneTwo);
    CHECK_FALSE(c.cond_iii.holds());
  }

  TEST_CASE("route 1&3 with even diagonal blocks") {
    // shape (1, 2): M* = diag(0, 2D_2), off-diagonal blocks constant 3 (norm 6, even)
    const EdgeMatrix m = EdgeMatrix::validate(IntMatrix::from_rows({{0, 3, 3}, {3, 0, 2}, {3, 2, 0}}));
    const Thm1Certificate c = check_theorem1(m, Shape::parse("1,2"));
    CHECK(c.cond3.holds());
    CHECK(c.cond_iii.holds());
    CHECK(c.cond_iv.holds());
    CHECK(c.passes());
  }

  TEST_CASE("repeated parts with nonzero M* fail condition i") {
    const EdgeMatrix m = EdgeMatrix::validate(IntMatrix::from_rows(
        {{0, 1, 3, 3}, {1, 0, 3, 3}, {3, 3, 0, 1}, {3, 3, 1, 0}}));
    const Thm1Certificate c = check_theorem1(m, Shape::parse("2,2"));
    CHECK(c.cond_i.status == CondStatus::kFails);
    CHECK_FALSE(c.passes());
  }

  TEST_CASE("condition ii can be inconclusive when a block is too big") {
    const Construction b = thm2_bordered(quintic_example(1));
    CheckOptions tight;
    tight.block_symmetrize.budget.max_degree = 10;
    const Thm1Certificate c = check_theorem1(b.matrix, b.shape, tight);
    CHECK(c.cond_ii.status == CondStatus::kInconclusive);
    CHECK_FALSE(c.route_1_2);
  }

  TEST_CASE("a certified matrix is nonzero by symmetrization") {
    SeededRng rng(8);
    int certified = 0;
    for (int k = 0; k < 60; ++k) {
      const EdgeMatrix m = testutil::random_edge_matrix(rng, 4 + rng.between(0, 1), 4);
      const ShapeSearchResult r = search_shape(m);
      if (!r.certificate) continue;
      ++certified;
      CHECK(nonzero_test(m).verdict == Verdict::kNonzero);
    }
    CHECK(certified > 0);
  }

  TEST_CASE("shape search and argument checks") {
    const ShapeSearchResult r = search_shape(sextic_example(1));
    REQUIRE(r.certificate.has_value());
    CHECK(r.shapes_tried >= 1);
    CHECK_THROWS_AS(check_theorem1(sextic_example(1), Shape::parse("6")), DomainError);
    CHECK_THROWS_AS(check_theorem1(sextic_example(1), Shape::parse("2,2")), DomainError);
    CHECK_THROWS_AS(search_shape(EdgeMatrix::zero(13)), BudgetExceeded);
  }

  TEST_CASE("weight and degree") {
    const WeightDegree w = weight_degree(quintic_example(1));
    CHECK(w.weight == 45);
    CHECK(w.max_degree == 18);
    CHECK(w.regular);
  }
}
