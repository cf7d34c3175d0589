#pragma once

// Symmetric polynomials in z_1..z_N rewritten in e_1..e_N, where
// prod (X + z_i) = X^N + e_1 X^{N-1} + ... + e_N (so e_i = sigma_i(z)),
// the root-shift test P(E_1(t), ..., E_N(t)) = P(e), and homogenization to
// forms in a_0..a_N.

#include <cstdint>
#include <optional>

#include "symgraph/edge_matrix.hpp"
#include "symgraph/exact_poly.hpp"

namespace symgraph {

// Polynomial in e_1..e_N; variable i stands for e_{i+1}.
using ElemPoly = RatPoly;

// sigma_k(z_1..z_N), 1 <= k <= N.
ExactPoly elementary_symmetric(std::size_t n, std::size_t k);

// Leading-term elimination. Throws DomainError when f is not symmetric.
ElemPoly to_elementary(const ExactPoly& f);

// Substitutes e_i = sigma_i(z).
RatPoly from_elementary(const ElemPoly& p);

// Weight of e-monomials under wt(e_i) = i; nullopt for the zero polynomial or
// when terms of different weights occur.
std::optional<std::uint64_t> elementary_weight(const ElemPoly& p);

// E_i(t) = sum_{j <= i} C(N - j, i - j) e_j t^{i-j} in N + 1 variables (t last).
RatPoly shifted_elementary(std::size_t n, std::size_t i);

// P(E_1(t), ..., E_N(t)) == P(e_1, ..., e_N) as polynomials in e and t.
bool translation_check(const ElemPoly& p);

struct SemiInvariant {
  ExactPoly q{1};           // in a_0..a_N
  std::int64_t degree = 0;
  std::int64_t weight = 0;
  mpq_class scale = 1;      // q = scale * a_0^d P(a_1/a_0, ..., a_N/a_0)
  std::optional<EdgeMatrix> provenance;
};

// Weight of an a-polynomial under wt(a_i) = i; nullopt if not weight-homogeneous.
std::optional<std::uint64_t> a_weight(const ExactPoly& q);

// Throws DomainError when some e-monomial has total degree above d, when P is
// not weight-homogeneous, or (if checked) when P is not translation invariant.
SemiInvariant homogenize(const ElemPoly& p, std::int64_t d, bool check_translation = true);

}  // namespace symgraph
