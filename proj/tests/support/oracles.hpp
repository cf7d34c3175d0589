#pragma once

// Slow, independent reference computations. None of these call into the
// library's algorithms; they only share plain data types.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <vector>

#include "symgraph/exact_poly.hpp"

namespace oracle {

using Dense = std::vector<std::vector<std::int64_t>>;
using NaivePoly = std::map<std::vector<std::uint32_t>, mpz_class>;

NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b, std::size_t nvars);
// prod_{i<j} (z_i - z_j)^{a_ij}, one linear factor at a time.
NaivePoly naive_delta(const Dense& a);
// Sum over all permutations of the variables.
NaivePoly naive_symmetrize(const NaivePoly& f, std::size_t nvars);
NaivePoly to_naive(const symgraph::ExactPoly& p);

// sum over sigma of prod_{i<j} (x_sigma(i) - x_sigma(j))^{a_ij}
mpz_class naive_symm_eval(const Dense& a, const std::vector<mpz_class>& x);

// Partitions of w into at most n parts, each at most d, by direct enumeration.
std::int64_t brute_partitions(std::int64_t n, std::int64_t d, std::int64_t w);

// All strictly increasing tuples of length k, entries >= lowest, summing to n.
std::vector<std::vector<std::int64_t>> brute_increasing(std::int64_t k, std::int64_t n, std::int64_t lowest);
std::int64_t brute_wt(std::int64_t n, const std::vector<std::int64_t>& a);  // sum_{i<j} a_i a_j

// Rank over Q by Gaussian elimination with rational pivots.
std::size_t rational_rank(std::vector<std::vector<mpq_class>> rows);

// ceil(0.004 * x^(-9/4) * 2^sqrt(x)) in long double; callers avoid near-integer cases.
std::int64_t pp_long_double(std::int64_t n, std::int64_t w, std::int64_t d);

std::int64_t binomial(std::int64_t n, std::int64_t k);

}  // namespace oracle
