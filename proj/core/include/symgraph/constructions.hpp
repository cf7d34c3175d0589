#pragma once

// Explicit edge-matrix constructions: even regular matrices, balanced fills
// with prescribed row sums, the five invariant families built from constant
// and 2aI + bD_m blocks, and the independent semi-invariant families indexed
// by compositions of theta.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "symgraph/criterion.hpp"
#include "symgraph/edge_matrix.hpp"
#include "symgraph/symmetrize.hpp"
#include "symgraph/tuples.hpp"

namespace symgraph {

// E in E(N, d) with every entry even. Requires N >= 2, d >= 1, 4 | N d and d even
// (odd d cannot be a sum of even entries).
EdgeMatrix even_regular(std::size_t n, std::int64_t d);

// m x n nonnegative matrix with row sums b and column sums q+1 (first r
// columns) then q, where sum(b) = q n + r.
IntMatrix balanced_fill(std::size_t m, std::size_t n, const std::vector<std::int64_t>& b);

struct Construction {
  std::string name;
  EdgeMatrix matrix = EdgeMatrix::zero(2);
  Shape shape = Shape::from_parts({2});
  std::int64_t degree = 0;  // common row sum
  std::int64_t weight = 0;  // N d / 2
  std::optional<SymmWitness> input_witness;  // bordered only: nonzero test of the input
};

// Blocks 2aI + bD_m between n parts of size m.
Construction thm2_uniform(std::int64_t m, std::int64_t n, std::int64_t a, std::int64_t b);
// n parts of size m plus one of size mn - r joined by constant blocks c.
Construction thm2_padded(std::int64_t m, std::int64_t n, std::int64_t r, std::int64_t a, std::int64_t b);
// Parts l < m < n < l + m with constant blocks a, b, c determined by d.
Construction thm2_three_part(std::int64_t l, std::int64_t m, std::int64_t n, std::int64_t d);
// Odd-weight invariants on N = 2(2tv + 1) vertices via the padded construction.
Construction thm2_skew(std::int64_t s, std::int64_t t, std::int64_t u, std::int64_t v);
// [[0, d*ones(N-1, N)], [., E]] for E in E(N, d) with entries < d and nonzero symmetrization.
Construction thm2_bordered(const EdgeMatrix& e, const NonzeroTestOptions& test = {});

struct ThreePartBlocks {
  bool integral = false;
  std::int64_t a = 0, b = 0, c = 0;
  std::string reason;  // names the first non-integral quotient
};

// Whether (m+l-n)d/2lm, (l+n-m)d/2ln, (m+n-l)d/2mn are all integers.
ThreePartBlocks y_membership(std::int64_t l, std::int64_t m, std::int64_t n, std::int64_t d);
// Least d >= 1 with y_membership true.
std::int64_t y_minimum(std::int64_t l, std::int64_t m, std::int64_t n);

struct FamilyMember {
  std::vector<std::int64_t> theta;  // theta_1, ..., theta_s
  IntMatrix b_star;                 // s x m_1
  IntMatrix b;                      // after the (v, 1) / (v, u) move
  std::vector<IntMatrix> a_blocks;  // A_l is m_1 x m_{l+1}
  EdgeMatrix m = EdgeMatrix::zero(2);
  EdgeMatrix m_prime = EdgeMatrix::zero(2);  // first vertex removed
  Shape prime_shape = Shape::from_parts({2});
  std::int64_t r1 = 0;
  std::optional<Thm1Certificate> certificate;        // for M
  std::optional<Thm1Certificate> prime_certificate;  // for M' when it has >= 2 parts
  std::optional<SymmWitness> prime_witness;          // for M' with a single part
};

struct FamilyOptions {
  std::optional<std::int64_t> degree;  // requested d; must be >= the constructed r_1
  bool certify = true;
  CheckOptions check;
  NonzeroTestOptions test;
};

struct FamilyInstance {
  std::int64_t n = 0;
  PartTuple shape;
  std::int64_t s = 0;
  std::int64_t w = 0;
  std::int64_t theta = 0;
  DegreeBound degree_bound;
  std::int64_t degree = 0;  // requested d, defaults to degree_bound.value
  mpz_class nu;
  std::vector<FamilyMember> family;
};

// One member per composition of theta = w - wt(N, a), in colexicographic order.
FamilyInstance independent_family(std::int64_t n, const PartTuple& a, std::int64_t w, const FamilyOptions& opts = {});

// The single member for a given composition.
FamilyMember family_member(std::int64_t n, const PartTuple& a, const std::vector<std::int64_t>& theta,
                           const FamilyOptions& opts = {});

}  // namespace symgraph
