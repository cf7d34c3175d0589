#include "symgraph/rank.hpp"

#include <unordered_map>

#include "symgraph/errors.hpp"
#include "symgraph/modular.hpp"

namespace symgraph {

namespace {

void check_same_ring(std::span<const ExactPoly> polys) {
  for (const auto& p : polys)
    if (p.num_vars() != polys.front().num_vars()) throw AmbientMismatch("polynomials live in different rings");
}

std::size_t rank_mod(std::vector<std::vector<std::uint64_t>> a, const PrimeModulus& mod) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    const std::uint64_t inv = mod.inverse(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const std::uint64_t f = mod.mul(a[i][c], inv);
      for (std::size_t j = c; j < cols; ++j) a[i][j] = mod.sub(a[i][j], mod.mul(f, a[r][j]));
    }
    ++r;
  }
  return r;
}

}  // namespace

std::size_t bareiss_rank(std::vector<std::vector<mpz_class>> a) {
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class v = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

std::size_t exact_rank(std::span<const ExactPoly> polys) {
  if (polys.empty()) return 0;
  check_same_ring(polys);
  std::unordered_map<Monomial, std::size_t, MonomialHash> column;
  for (const auto& p : polys)
    for (const auto& [m, c] : p.terms()) column.try_emplace(m, column.size());
  std::vector<std::vector<mpz_class>> rows(polys.size(), std::vector<mpz_class>(column.size(), 0));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (const auto& [m, c] : polys[i].terms()) rows[i][column.at(m)] = c;
  return bareiss_rank(std::move(rows));
}

std::size_t modular_rank(std::span<const ExactPoly> polys, std::uint64_t seed, std::size_t points) {
  if (polys.empty()) return 0;
  check_same_ring(polys);
  points = std::max(points, polys.size());
  const PrimeModulus mod = auto_modulus(seed);
  SeededRng rng(seed);
  const std::size_t n = polys.front().num_vars();
  std::vector<std::vector<std::uint64_t>> a(polys.size(), std::vector<std::uint64_t>(points));
  for (std::size_t j = 0; j < points; ++j) {
    std::vector<std::uint64_t> x(n);
    for (auto& v : x) v = rng.between(0, mod.value() - 1);
    for (std::size_t i = 0; i < polys.size(); ++i) a[i][j] = evaluate_mod(polys[i], x, mod);
  }
  return rank_mod(std::move(a), mod);
}

RankResult rank(std::span<const ExactPoly> polys, std::uint64_t seed, bool fast_path) {
  if (fast_path && modular_rank(polys, seed) == polys.size()) return {polys.size(), "modular"};
  return {exact_rank(polys), "exact"};
}

std::size_t jacobian_rank(std::span<const ExactPoly> polys, std::span<const mpz_class> point) {
  if (polys.empty()) return 0;
  check_same_ring(polys);
  const std::size_t n = polys.front().num_vars();
  if (point.size() != n) throw AmbientMismatch("point length differs from the variable count");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (point[i] == point[j]) throw DomainError("point coordinates must be pairwise distinct");
  std::vector<std::vector<mpz_class>> rows(polys.size(), std::vector<mpz_class>(n));
  for (std::size_t i = 0; i < polys.size(); ++i)
    for (std::size_t v = 0; v < n; ++v) rows[i][v] = evaluate<mpz_class, mpz_class>(polys[i].derivative(v), point);
  return bareiss_rank(std::move(rows));
}

JacobianSearch jacobian_rank_seeded(std::span<const ExactPoly> polys, std::uint64_t seed, std::size_t attempts) {
  JacobianSearch out;
  if (polys.empty()) return out;
  const std::size_t n = polys.front().num_vars();
  for (std::size_t a = 0; a < attempts; ++a) {
    SeededRng rng(seed ^ (0xA24BAED4963EE407ULL * (a + 1)));
    out.point.clear();
    for (auto v : rng.distinct(n, 1, 1'000'000)) out.point.emplace_back(static_cast<unsigned long>(v));
    out.attempts = a + 1;
    out.rank = jacobian_rank(polys, out.point);
    if (out.rank == polys.size()) break;
  }
  return out;
}

}  // namespace symgraph
