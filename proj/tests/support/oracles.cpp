#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

namespace oracle {

NaivePoly naive_mul(const NaivePoly& a, const NaivePoly& b, std::size_t nvars) {
  NaivePoly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      std::vector<std::uint32_t> e(nvars);
      for (std::size_t i = 0; i < nvars; ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

NaivePoly naive_delta(const Dense& a) {
  const std::size_t n = a.size();
  NaivePoly p{{std::vector<std::uint32_t>(n, 0), 1}};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::int64_t k = 0; k < a[i][j]; ++k) {
        NaivePoly lin;
        std::vector<std::uint32_t> ei(n, 0), ej(n, 0);
        ei[i] = 1;
        ej[j] = 1;
        lin[ei] = 1;
        lin[ej] = -1;
        p = naive_mul(p, lin, n);
      }
  return p;
}

NaivePoly naive_symmetrize(const NaivePoly& f, std::size_t nvars) {
  std::vector<std::size_t> sigma(nvars);
  std::iota(sigma.begin(), sigma.end(), 0);
  NaivePoly out;
  do {
    for (const auto& [e, c] : f) {
      std::vector<std::uint32_t> pe(nvars);
      for (std::size_t i = 0; i < nvars; ++i) pe[sigma[i]] = e[i];
      out[pe] += c;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

NaivePoly to_naive(const symgraph::ExactPoly& p) {
  NaivePoly out;
  for (const auto& [m, c] : p.terms()) out[m.exps] = c;
  return out;
}

mpz_class naive_symm_eval(const Dense& a, const std::vector<mpz_class>& x) {
  const std::size_t n = a.size();
  std::vector<std::size_t> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  mpz_class total = 0;
  do {
    mpz_class term = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        for (std::int64_t k = 0; k < a[i][j]; ++k) term *= x[sigma[i]] - x[sigma[j]];
    total += term;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return total;
}

std::int64_t brute_partitions(std::int64_t n, std::int64_t d, std::int64_t w) {
  // parts in nonincreasing order, each <= cap
  std::function<std::int64_t(std::int64_t, std::int64_t, std::int64_t)> go = [&](std::int64_t left, std::int64_t parts,
                                                                                 std::int64_t cap) -> std::int64_t {
    if (left == 0) return 1;
    if (parts == 0) return 0;
    std::int64_t c = 0;
    for (std::int64_t p = std::min(cap, left); p >= 1; --p) c += go(left - p, parts - 1, p);
    return c;
  };
  if (w < 0) return 0;
  return go(w, n, d);
}

std::vector<std::vector<std::int64_t>> brute_increasing(std::int64_t k, std::int64_t n, std::int64_t lowest) {
  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> cur;
  std::function<void(std::int64_t, std::int64_t)> go = [&](std::int64_t next_min, std::int64_t left) {
    const auto placed = static_cast<std::int64_t>(cur.size());
    if (placed == k) {
      if (left == 0) out.push_back(cur);
      return;
    }
    // the r values still to place are all >= v and distinct
    const std::int64_t r = k - placed;
    for (std::int64_t v = next_min; r * v + r * (r - 1) / 2 <= left; ++v) {
      cur.push_back(v);
      go(v + 1, left - v);
      cur.pop_back();
    }
  };
  go(lowest, n);
  return out;
}

std::int64_t brute_wt(std::int64_t, const std::vector<std::int64_t>& a) {
  std::int64_t t = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) t += a[i] * a[j];
  return t;
}

std::size_t rational_rank(std::vector<std::vector<mpq_class>> a) {
  std::size_t r = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
    }
    ++r;
  }
  return r;
}

std::int64_t pp_long_double(std::int64_t n, std::int64_t w, std::int64_t d) {
  const std::int64_t x = std::min({2 * w, d * d, n * n});
  const long double xv = static_cast<long double>(x);
  const long double v = 0.004L * std::pow(xv, -2.25L) * std::pow(2.0L, std::sqrt(xv));
  return static_cast<std::int64_t>(std::ceil(v));
}

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace oracle
