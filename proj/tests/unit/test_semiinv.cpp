#include "doctest.h"
#include "helpers.hpp"
#include "symgraph/checks.hpp"
#include "symgraph/constructions.hpp"
#include "symgraph/elementary.hpp"
#include "symgraph/rank.hpp"
#include "symgraph/symmetrize.hpp"

using namespace symgraph;
using testutil::var;

namespace {
RatPoly rvar(std::size_t n, std::size_t i) { return RatPoly::variable(n, i); }
}  // namespace

TEST_SUITE("semiinv") {
  TEST_CASE("N = 2 discriminant") {
    const ExactPoly f = symmetrize_full(pow(var(2, 0) - var(2, 1), 2));
    const ElemPoly p = to_elementary(f);
    // 2 (e_1^2 - 4 e_2)
    CHECK(p == (rvar(2, 0) * rvar(2, 0)).scaled(2) - rvar(2, 1).scaled(8));
    CHECK(translation_check(p));
    const SemiInvariant q = homogenize(p, 2);
    CHECK(q.degree == 2);
    CHECK(q.weight == 2);
    // a_1^2 - 4 a_0 a_2 after clearing the content 2
    const ExactPoly a0 = var(3, 0), a1 = var(3, 1), a2 = var(3, 2);
    CHECK(q.q == a1 * a1 - (a0 * a2).scaled(4));
    CHECK(q.scale == mpq_class(1, 2));
  }

  TEST_CASE("constants and translation failures") {
    CHECK(to_elementary(ExactPoly::constant(3, 6)) == RatPoly::constant(3, 6));
    const SemiInvariant one = homogenize(RatPoly::one(3), 3);
    CHECK(one.q == pow(var(4, 0), 3));
    CHECK_FALSE(translation_check(rvar(3, 0)));
    CHECK_THROWS_AS(homogenize(rvar(3, 0), 2), DomainError);
    CHECK_NOTHROW(homogenize(rvar(3, 0), 2, false));
    CHECK_THROWS_AS(homogenize(rvar(2, 0) * rvar(2, 0) - rvar(2, 1).scaled(4), 1), DomainError);
    CHECK_THROWS_AS(to_elementary(var(2, 0)), DomainError);
  }

  TEST_CASE("shifted elementary polynomials") {
    // N = 2: E_1(t) = e_1 + 2t, E_2(t) = e_2 + e_1 t + t^2
    const RatPoly t = rvar(3, 2);
    CHECK(shifted_elementary(2, 1) == rvar(3, 0) + t.scaled(2));
    CHECK(shifted_elementary(2, 2) == rvar(3, 1) + rvar(3, 0) * t + t * t);
  }

  TEST_CASE("round trip through the elementary basis") {
    SeededRng rng(13);
    for (int k = 0; k < 25; ++k) {
      const std::size_t n = 2 + rng.between(0, 3);
      const EdgeMatrix m = testutil::random_edge_matrix(rng, n, 2);
      const ExactPoly f = symmetrize_full(graph_monomial(m));
      const ElemPoly p = to_elementary(f);
      CHECK(from_elementary(p) == f.converted<mpq_class>());
      CHECK(translation_check(p));
      if (!f.is_zero()) CHECK(elementary_weight(p) == f.total_degree());
    }
  }

  TEST_CASE("homogenize keeps the weight") {
    const ExactPoly f = symmetrize_full(graph_monomial(sextic_example(1)));
    const std::uint64_t w = *f.total_degree();
    const SemiInvariant q = homogenize(to_elementary(f), static_cast<std::int64_t>(w));
    CHECK(q.weight == static_cast<std::int64_t>(w));
    CHECK(q.q.is_homogeneous());
    CHECK(a_weight(q.q) == std::optional<std::uint64_t>(w));
  }

  TEST_CASE("quartic pair: g and h are dependent, 16 h = g^2") {
    const EdgeMatrix m = quartic_example();
    const ExactPoly g = symmetrize_full(graph_monomial(m));
    const ExactPoly h = symmetrize_full(graph_monomial(m.scaled(2)));
    CHECK_FALSE(g.is_zero());
    CHECK_FALSE(h.is_zero());
    CHECK(h.scaled(16) == g * g);
    const std::vector<ExactPoly> gh = {g, h};
    CHECK(jacobian_rank_seeded(gh, 0).rank == 1);
    // both are genuinely distinct from each other, so the linear rank is 2
    CHECK(exact_rank(gh) == 2);
  }

  TEST_CASE("rank examples") {
    const ExactPoly g = symmetrize_full(graph_monomial(quintic_example(1)));
    const ExactPoly h = symmetrize_full(graph_monomial(quintic_example(2)));
    const std::vector<ExactPoly> gg = {g, g.scaled(2)}, hh = {g, h};
    CHECK(exact_rank(gg) == 1);
    CHECK(exact_rank(hh) == 1);
    CHECK(rank(hh, 0).rank == 1);
    CHECK(rank(hh, 0).method == "exact");
    const std::vector<ExactPoly> z = {var(2, 0), var(2, 1)};
    CHECK(rank(z, 0).rank == 2);
    CHECK(rank(z, 0).method == "modular");
    const std::vector<ExactPoly> mixed = {var(2, 0), var(3, 0)};
    CHECK_THROWS_AS(exact_rank(mixed), AmbientMismatch);
  }

  TEST_CASE("jacobian rank") {
    const ExactPoly z1 = var(2, 0), z2 = var(2, 1);
    const std::vector<mpz_class> pt = {3, 5};
    const std::vector<ExactPoly> ind = {z1, z2}, dep = {z1 + z2, pow(z1 + z2, 2)};
    CHECK(jacobian_rank(ind, pt) == 2);
    CHECK(jacobian_rank(dep, pt) == 1);
    const std::vector<mpz_class> bad = {4, 4};
    CHECK_THROWS_AS(jacobian_rank(ind, bad), DomainError);
  }

  TEST_CASE("Bareiss rank matches rational elimination on random matrices") {
    SeededRng rng(404);
    for (int k = 0; k < 200; ++k) {
      const std::size_t rows = 1 + rng.between(0, 4), cols = 1 + rng.between(0, 4);
      std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
      std::vector<std::vector<mpq_class>> q(rows, std::vector<mpq_class>(cols));
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
          const long v = static_cast<long>(rng.between_signed(-2, 2));
          a[i][j] = v;
          q[i][j] = v;
        }
      // force some dependent rows
      if (rows >= 2 && rng.between(0, 1) == 1) {
        for (std::size_t j = 0; j < cols; ++j) {
          a[rows - 1][j] = a[0][j] * 3 - a[1][j];
          q[rows - 1][j] = q[0][j] * 3 - q[1][j];
        }
      }
      CHECK(bareiss_rank(a) == oracle::rational_rank(q));
    }
  }

  TEST_CASE("modular rank never exceeds exact rank") {
    SeededRng rng(21);
    for (int k = 0; k < 200; ++k) {
      std::vector<ExactPoly> ps;
      const std::size_t count = 1 + rng.between(0, 3);
      for (std::size_t i = 0; i < count; ++i) ps.push_back(testutil::random_poly(rng, 3, 3, 2, 3));
      if (count >= 2 && rng.between(0, 1) == 1) ps.push_back(ps[0] + ps[1].scaled(2));
      CHECK(modular_rank(ps, k) <= exact_rank(ps));
      // row scaling and permutation do not change the rank
      std::vector<ExactPoly> scaled = ps;
      scaled[0] = scaled[0].scaled(-7);
      std::reverse(scaled.begin(), scaled.end());
      CHECK(exact_rank(scaled) == exact_rank(ps));
    }
  }

  TEST_CASE("independent family: degree-6 weight-12 forms") {
    const FamilyInstance f = independent_family(6, {1, 2, 3}, 12);
    std::vector<ExactPoly> phis;
    for (const auto& m : f.family) phis.push_back(symmetrize_full(graph_monomial(m.m)));
    CHECK(exact_rank(phis) == 2);
    std::vector<ExactPoly> forms;
    for (const auto& phi : phis) {
      const SemiInvariant q = homogenize(to_elementary(phi), 6);
      CHECK(q.q.is_homogeneous());
      CHECK(q.q.total_degree() == std::optional<std::uint64_t>(6));
      CHECK(a_weight(q.q) == std::optional<std::uint64_t>(12));
      forms.push_back(q.q);
    }
    CHECK(exact_rank(forms) == 2);
  }
}
