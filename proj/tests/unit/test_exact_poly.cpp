#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "symgraph/modular.hpp"

using namespace symgraph;
using testutil::random_poly;
using testutil::var;

TEST_SUITE("exactpoly") {
  TEST_CASE("trivial identities") {
    const ExactPoly z1 = var(2, 0), z2 = var(2, 1);
    CHECK((z1 - z2) + (z2 - z1) == ExactPoly(2));
    CHECK(((z1 - z2) + (z2 - z1)).is_zero());
    CHECK((z1 - z2) * (z1 + z2) == z1 * z1 - z2 * z2);
    const ExactPoly sq = pow(z1 - z2, 2);
    CHECK(sq == z1 * z1 - (z1 * z2).scaled(2) + z2 * z2);
    CHECK(pow(z1 - z2, 0) == ExactPoly::one(2));
    CHECK(to_string(sq) == "z1^2 - 2*z1*z2 + z2^2");
  }

  TEST_CASE("ambient mismatch is rejected") {
    CHECK_THROWS_AS(var(2, 0) + var(3, 0), AmbientMismatch);
    CHECK_THROWS_AS(var(2, 0) * var(3, 0), AmbientMismatch);
  }

  TEST_CASE("graded-lex order, leading term first") {
    const ExactPoly z1 = var(3, 0), z2 = var(3, 1), z3 = var(3, 2);
    const ExactPoly p = z3 + z1 * z2 + z1 * z1 * z1 + z2;
    std::vector<std::vector<std::uint32_t>> order;
    for (const auto& [m, c] : p.terms()) order.push_back(m.exps);
    const std::vector<std::vector<std::uint32_t>> want = {{3, 0, 0}, {1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(order == want);
    for (std::size_t k = 1; k < p.terms().size(); ++k) CHECK(compare_grlex(p.terms()[k - 1].first, p.terms()[k].first) > 0);
  }

  TEST_CASE("evaluation: exact and modular") {
    const ExactPoly z1 = var(2, 0), z2 = var(2, 1);
    const ExactPoly p = pow(z1 - z2, 3);
    const std::vector<mpz_class> x = {7, 2};
    CHECK(evaluate<mpz_class, mpz_class>(p, x) == 125);
    const std::vector<mpq_class> q = {mpq_class(1, 2), mpq_class(0)};
    CHECK(evaluate<mpz_class, mpq_class>(p, q) == mpq_class(1, 8));
    const PrimeModulus mod(1000003);
    const std::vector<std::uint64_t> xm = {2, 7};
    CHECK(evaluate_mod(p, xm, mod) == mod.reduce(-125));
  }

  TEST_CASE("analyze reports degrees and symmetry") {
    const ExactPoly z1 = var(3, 0), z2 = var(3, 1), z3 = var(3, 2);
    const ExactPoly e2 = z1 * z2 + z1 * z3 + z2 * z3;
    const ExactPoly alt = (z1 - z2) * (z1 - z3) * (z2 - z3);
    const std::vector<std::vector<std::size_t>> perms = {{1, 0, 2}, {0, 2, 1}};
    const PolyInfo a = analyze(alt, perms), e = analyze(e2, perms);
    CHECK(a.total_degree == std::optional<std::uint64_t>(3));
    CHECK(a.homogeneous);
    CHECK(a.antisymmetric_under == std::vector<bool>{true, true});
    CHECK(a.symmetric_under == std::vector<bool>{false, false});
    CHECK(e.symmetric_under == std::vector<bool>{true, true});
    CHECK(is_symmetric(e2));
    CHECK_FALSE(is_symmetric(alt));
    CHECK(analyze(ExactPoly(3)).total_degree == std::nullopt);
  }

  TEST_CASE("content, primitive part, proportionality") {
    const ExactPoly z1 = var(2, 0), z2 = var(2, 1);
    const ExactPoly p = (z1 * z1).scaled(-6) + z2.scaled(4);
    CHECK(content(p) == 2);
    CHECK(primitive_part(p) == (z1 * z1).scaled(3) - z2.scaled(2));
    CHECK(proportional(p, p.scaled(-5)));
    CHECK_FALSE(proportional(p, p + z1));
  }

  TEST_CASE("text format round trip, zero polynomial keeps its ring") {
    SeededRng rng(11);
    for (int k = 0; k < 50; ++k) {
      const ExactPoly p = random_poly(rng, 4, 6, 5, 1000000);
      CHECK(parse_poly_text(to_poly_text(p)) == p);
    }
    const ExactPoly zero(5);
    CHECK(to_poly_text(zero) == "# vars 5\n");
    CHECK(parse_poly_text(to_poly_text(zero)) == zero);
    CHECK(parse_poly_text("# a comment\n3 1 0\n-1 0 2\n", 2) == var(2, 0).scaled(3) - var(2, 1) * var(2, 1));
    CHECK_THROWS_AS(parse_poly_text("1 2 x\n"), DomainError);
  }

  TEST_CASE("ring axioms on random polynomials") {
    SeededRng rng(2024);
    for (int k = 0; k < 200; ++k) {
      const std::size_t n = 1 + rng.between(0, 3);
      const ExactPoly a = random_poly(rng, n, 5, 4, 50), b = random_poly(rng, n, 5, 4, 50), c = random_poly(rng, n, 4, 3, 50);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
    }
  }

  TEST_CASE("evaluation is a ring homomorphism; modular nonzero implies integer nonzero") {
    SeededRng rng(77);
    const PrimeModulus mod = auto_modulus(3);
    for (int k = 0; k < 200; ++k) {
      const ExactPoly p = random_poly(rng, 3, 4, 4, 30), q = random_poly(rng, 3, 4, 4, 30);
      std::vector<mpz_class> x;
      std::vector<std::uint64_t> xm;
      for (int i = 0; i < 3; ++i) {
        const auto v = rng.between_signed(-20, 20);
        x.emplace_back(static_cast<long>(v));
        xm.push_back(mod.reduce(v));
      }
      const mpz_class pv = evaluate<mpz_class, mpz_class>(p, x), qv = evaluate<mpz_class, mpz_class>(q, x);
      CHECK(evaluate<mpz_class, mpz_class>(p * q, x) == pv * qv);
      if (evaluate_mod(p, xm, mod) != 0) {
        CHECK(pv != 0);
        CHECK_FALSE(p.is_zero());
      }
    }
  }

  TEST_CASE("symmetric polynomial equals its symmetrization over N!") {
    const ExactPoly z1 = var(3, 0), z2 = var(3, 1), z3 = var(3, 2);
    const ExactPoly f = z1 * z2 * z3 + (z1 + z2 + z3).scaled(4);
    REQUIRE(is_symmetric(f));
    oracle::NaivePoly s = oracle::naive_symmetrize(oracle::to_naive(f), 3);
    for (auto& [e, c] : s) {
      CHECK(mpz_divisible_ui_p(c.get_mpz_t(), 6) != 0);
      c /= 6;
    }
    CHECK(s == oracle::to_naive(f));
  }

  TEST_CASE("primes and the modulus list") {
    CHECK(is_prime_u64(2));
    CHECK(is_prime_u64(1000003));
    CHECK_FALSE(is_prime_u64(1));
    CHECK_FALSE(is_prime_u64(3215031751ULL));  // strong pseudoprime to bases 2, 3, 5, 7
    CHECK(witness_primes().size() >= 4);
    for (auto p : witness_primes()) {
      CHECK(is_prime_u64(p));
      CHECK(p >= (1ULL << 61));
      CHECK(p < (1ULL << 62));
    }
    CHECK(auto_modulus(5) == auto_modulus(5));
    CHECK_THROWS_AS(PrimeModulus(1000004), DomainError);
  }
}
