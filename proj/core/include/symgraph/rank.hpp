#pragma once

// Linear rank of polynomial lists over Q (fraction-free elimination on the
// coefficient matrix), a modular lower bound from seeded evaluations, and the
// Jacobian rank at a point.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "symgraph/exact_poly.hpp"

namespace symgraph {

// Rank over Q of an integer matrix given as rows (Bareiss elimination; the
// pivot is the first nonzero entry at or below the current row).
std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> rows);

// Rank over Q of the coefficient vectors. Throws AmbientMismatch on mixed rings.
std::size_t exact_rank(std::span<const ExactPoly> polys);

// Rank mod p of the evaluation matrix [f_i(x_j)] over `points` seeded points
// (at least polys.size()). Never exceeds exact_rank.
std::size_t modular_rank(std::span<const ExactPoly> polys, std::uint64_t seed, std::size_t points = 0);

struct RankResult {
  std::size_t rank = 0;
  std::string method;  // "modular" when the fast path certified full rank, else "exact"
};

RankResult rank(std::span<const ExactPoly> polys, std::uint64_t seed = 0, bool fast_path = true);

// Rank of [d f_i / d z_j](point), exact over the integers.
std::size_t jacobian_rank(std::span<const ExactPoly> polys, std::span<const mpz_class> point);

struct JacobianSearch {
  std::size_t rank = 0;
  std::vector<mpz_class> point;  // last point tried
  std::size_t attempts = 0;
};

// Tries seeded points with distinct coordinates until the rank is full or
// `attempts` points have been used.
JacobianSearch jacobian_rank_seeded(std::span<const ExactPoly> polys, std::uint64_t seed, std::size_t attempts = 4);

}  // namespace symgraph
