#pragma once

// The symmetrization operator Symm_N(f) = sum over sigma in S_N of
// f(z_sigma(1), ..., z_sigma(N)), in two forms: full exact expansion for small
// N, and evaluation of Symm_N(delta(z, M)) at a point without expanding, which
// yields sound nonzero witnesses for larger N.
//
// Parallel work splits S_N into the N disjoint cosets {sigma : sigma(1) = b};
// partial sums are combined in coset order, so results are identical for any
// thread count.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symgraph/edge_matrix.hpp"
#include "symgraph/exact_poly.hpp"
#include "symgraph/modular.hpp"

namespace symgraph {

struct ExpansionBudget {
  std::size_t max_vars = 8;
  std::uint64_t max_degree = 64;
};

struct SymmetrizeOptions {
  ExpansionBudget budget;
  unsigned threads = 1;
};

// Throws BudgetExceeded when f has more variables or a higher degree than the
// budget allows.
ExactPoly symmetrize_full(const ExactPoly& f, const SymmetrizeOptions& opts = {});

// Symm_N(delta(z, M)) evaluated at a point with pairwise distinct coordinates.
std::uint64_t symm_eval_mod(const EdgeMatrix& m, std::span<const std::uint64_t> point, const PrimeModulus& mod,
                            unsigned threads = 1);
mpz_class symm_eval_exact(const EdgeMatrix& m, std::span<const mpz_class> point, unsigned threads = 1);

enum class Verdict { kNonzero, kZeroExact, kZeroProbable };

// What a NONZERO verdict rests on.
enum class NonzeroReason {
  kNone,
  kEvenEntries,  // every entry even: a sum of squares of nonzero rational functions
  kEvaluation,   // a point where the modular evaluation is nonzero
  kExpansion,    // the full expansion is a nonzero polynomial
  kConstant,     // M = 0, so the symmetrization is the constant N!
};

std::string to_string(Verdict v);
std::string to_string(NonzeroReason r);

struct SymmWitness {
  Verdict verdict = Verdict::kZeroProbable;
  NonzeroReason reason = NonzeroReason::kNone;
  std::vector<std::uint64_t> point;    // evaluation point, when one was used
  std::optional<std::uint64_t> value;  // Symm(delta)(point) mod modulus
  std::optional<std::uint64_t> modulus;
  std::size_t trials = 0;              // evaluations actually performed
  std::uint64_t seed = 0;
  std::uint64_t degree = 0;            // ||M|| / 2
  std::uint64_t sample_size = 0;       // coordinates drawn from {1, ..., sample_size}
  // For ZERO_PROBABLE: (degree / sample_size)^trials.
  double failure_bound = 0.0;
};

enum class TestPolicy { kExactIfSmall, kWitnessOnly };

struct NonzeroTestOptions {
  TestPolicy policy = TestPolicy::kExactIfSmall;
  std::size_t trials = 4;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> modulus;  // nullopt: pick from witness_primes() by seed
  SymmetrizeOptions symmetrize;
  // Largest N for which N! point evaluations are attempted.
  std::size_t max_eval_vars = 10;
};

inline constexpr std::uint64_t kWitnessSampleSize = 1'000'000;

// Deterministic in (M, options).
SymmWitness nonzero_test(const EdgeMatrix& m, const NonzeroTestOptions& opts = {});

// Seeded witness point: n distinct coordinates from {1, ..., kWitnessSampleSize}.
std::vector<std::uint64_t> witness_point(std::size_t n, std::uint64_t seed, std::size_t trial);

struct BlockSymmetrization {
  // factors[r] = Symm over the vertices of block r of the graph-monomial of
  // M_rr, written in the m_r local variables of that block.
  std::vector<ExactPoly> factors;
  bool product_nonzero = false;
};

// Throws DomainError if `star` has entries outside the diagonal blocks of the
// shape, BudgetExceeded if a block is too large to expand.
BlockSymmetrization symmetrize_block(const EdgeMatrix& star, const Shape& shape, const SymmetrizeOptions& opts = {});

}  // namespace symgraph
