#pragma once

#include <vector>

#include "oracles.hpp"
#include "symgraph/edge_matrix.hpp"
#include "symgraph/exact_poly.hpp"
#include "symgraph/modular.hpp"

namespace testutil {

inline symgraph::ExactPoly random_poly(symgraph::SeededRng& rng, std::size_t nvars, std::size_t terms,
                                       std::uint32_t max_exp, std::int64_t max_coef) {
  std::vector<symgraph::ExactPoly::Term> t;
  for (std::size_t k = 0; k < terms; ++k) {
    symgraph::Monomial m(nvars);
    for (auto& e : m.exps) e = static_cast<std::uint32_t>(rng.between(0, max_exp));
    t.emplace_back(std::move(m), mpz_class(static_cast<long>(rng.between_signed(-max_coef, max_coef))));
  }
  return symgraph::ExactPoly::from_terms(nvars, std::move(t));
}

inline symgraph::EdgeMatrix random_edge_matrix(symgraph::SeededRng& rng, std::size_t n, std::int64_t max_entry) {
  std::vector<std::int64_t> upper;
  for (std::size_t k = 0; k < n * (n - 1) / 2; ++k) upper.push_back(rng.between_signed(0, max_entry));
  return symgraph::EdgeMatrix::from_upper(n, upper);
}

inline oracle::Dense dense(const symgraph::EdgeMatrix& m) {
  oracle::Dense d(m.size(), std::vector<std::int64_t>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) d[i][j] = m(i, j);
  return d;
}

inline symgraph::ExactPoly var(std::size_t n, std::size_t i) { return symgraph::ExactPoly::variable(n, i); }

}  // namespace testutil
