#pragma once

// Strictly increasing integer compositions (a_1 < ... < a_{s+1}, sum n), the
// extremal tuple wp(s, n), the weight wt(n, a) = (n^2 - sum a_i^2) / 2, and the
// counting and degree functions of the independent-family construction.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace symgraph {

using PartTuple = std::vector<std::int64_t>;

std::string to_string(const PartTuple& a);

// floor((sqrt(8n + 1) - 1) / 2), exact.
std::int64_t beta(std::int64_t n);

// wp(s, n) by the floor recursion, by the closed form, and both (checked equal;
// InternalInconsistency otherwise). Requires s >= 1, n >= 1.
PartTuple wp_recursive(std::int64_t s, std::int64_t n);
PartTuple wp_closed(std::int64_t s, std::int64_t n);
PartTuple wp(std::int64_t s, std::int64_t n);

// Throws DomainError when the entries do not sum to n.
std::int64_t wt(std::int64_t n, const PartTuple& a);

std::int64_t varpi_closed(std::int64_t s, std::int64_t n);
std::int64_t varpi(std::int64_t s, std::int64_t n);

bool strictly_increasing(const PartTuple& a);
bool in_I(std::int64_t s, std::int64_t n, const PartTuple& a);
bool in_P(std::int64_t s, std::int64_t n, const PartTuple& a);

// Members of P(s, n) in lexicographic order; empty when s > beta(n) - 1.
std::vector<PartTuple> enumerate_P(std::int64_t s, std::int64_t n);
// Members of I(s, n) with a_1 >= lowest, lexicographic. I(s, n) itself is infinite.
std::vector<PartTuple> enumerate_I(std::int64_t s, std::int64_t n, std::int64_t lowest);

// (1, 2, ..., s, n - s(s+1)/2)
PartTuple v_tuple(std::int64_t s, std::int64_t n);

// a + eta(i, j) for 1-based i < j; nullopt when the result is not strictly increasing.
std::optional<PartTuple> modify(const PartTuple& a, std::size_t i, std::size_t j);

// Chain of elementary modifications from a (first element) to wp(s, n) (last),
// taking the lexicographically first applicable (i, j) at every step.
std::vector<PartTuple> modification_path(std::int64_t n, const PartTuple& a);

// C(s - 1 + theta, s - 1); theta >= 0.
mpz_class composition_count(std::int64_t theta, std::int64_t s);

// nu(w, a) for a in P(s, n); theta = w - wt(n, a) must be >= 1.
mpz_class nu(std::int64_t w, std::int64_t n, const PartTuple& a);

struct DegreeBound {
  std::int64_t value = 0;         // r_1 of the constructed matrix
  std::int64_t formula = 0;       // the three-case formula d(w, a)
  bool formula_discrepancy = false;
};

DegreeBound d_of(std::int64_t w, std::int64_t n, const PartTuple& a);

// All compositions of theta into s nonnegative ordered parts, colexicographic.
std::vector<std::vector<std::int64_t>> compositions(std::int64_t theta, std::int64_t s);

}  // namespace symgraph
