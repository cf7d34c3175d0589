#pragma once

// Gaussian binomials, bounded partition counts p_w(N, d), the semi-invariant
// dimension p_w - p_{w-1}, and the ceiling lower bound PP(N, w, d).

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace symgraph {

// Coefficient k is the coefficient of q^k.
using QPoly = std::vector<mpz_class>;

// (N+d choose d)_q via the product of (1 - q^{N+i}) / (1 - q^i), i = 1..d.
QPoly gaussian_binomial(std::size_t n, std::size_t d);

// Partitions of w into at most n parts, each at most d (bounded-partition DP).
mpz_class p_w(std::size_t n, std::size_t d, std::int64_t w);

// p_w(N, d) - p_{w-1}(N, d); may be negative or zero outside 2w <= N d.
mpz_class semidim(std::int64_t w, std::size_t d, std::size_t n);

struct PPBound {
  mpz_class value;
  bool valid = false;      // min(N, d) >= 8 and w <= N d / 2
  unsigned precision = 0;  // bits at which both interval ends had the same ceiling
  std::int64_t x = 0;      // min(2w, d^2, N^2)
};

// ceil(0.004 * x^(-9/4) * 2^sqrt(x)), x = min(2w, d^2, N^2), with an outward-rounded
// interval refined until its ends share a ceiling. Requires N, w, d >= 1.
PPBound pp_bound(std::int64_t n, std::int64_t w, std::int64_t d);

// Degree as a function of weight: "w-71", "w+3", "w", or a constant "24".
struct DegreeRule {
  bool relative = false;
  std::int64_t offset = 0;

  static DegreeRule parse(const std::string& text);
  std::int64_t apply(std::int64_t w) const { return relative ? w + offset : offset; }
  std::string to_string() const;
};

// "a:b:step" (inclusive) or a single value.
std::vector<std::int64_t> parse_weight_range(const std::string& text);

struct TableRow {
  std::int64_t w = 0;
  std::int64_t d = 0;
  mpz_class nu;        // compositions of w - varpi(s, N) into s parts, s = beta(N) - 1; 0 below varpi
  mpz_class semidim;
  PPBound pp;
};

// Rows in the order of `weights`; rows are computed independently on up to `threads` workers.
std::vector<TableRow> dims_table(std::size_t n, const std::vector<std::int64_t>& weights, const DegreeRule& rule,
                                 unsigned threads = 1);

// Header "w,nu,semidim,pp,valid".
void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows);

}  // namespace symgraph
