#include "symgraph/symmetrize.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <unordered_map>

#include "parallel.hpp"

namespace symgraph {

namespace {

mpz_class to_mpz(__int128 v) {
  const bool negative = v < 0;
  unsigned __int128 u = negative ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
  mpz_class r = (hi << 64) + lo;
  return negative ? mpz_class(-r) : r;
}

mpz_class to_mpz(const mpz_class& v) { return v; }

std::vector<std::size_t> coset_start(std::size_t n, std::size_t b) {
  std::vector<std::size_t> sigma;
  sigma.reserve(n);
  sigma.push_back(b);
  for (std::size_t i = 0; i < n; ++i)
    if (i != b) sigma.push_back(i);
  return sigma;
}

template <class Acc>
ExactPoly symmetrize_packed(const ExactPoly& f, const detail::PackedCodec& codec, unsigned threads) {
  const std::size_t n = f.num_vars();
  const std::size_t t = f.num_terms();
  std::vector<std::uint64_t> exps(t * n);
  std::vector<Acc> coeffs;
  coeffs.reserve(t);
  for (std::size_t k = 0; k < t; ++k) {
    const auto& [m, c] = f.terms()[k];
    for (std::size_t i = 0; i < n; ++i) exps[k * n + i] = m.exps[i];
    if constexpr (std::is_same_v<Acc, __int128>) coeffs.push_back(static_cast<__int128>(c.get_si()));
    else coeffs.push_back(c);
  }

  std::vector<std::unordered_map<std::uint64_t, Acc>> partial(n);
  detail::for_each_block(n, threads, [&](std::size_t b) {
    auto& acc = partial[b];
    acc.reserve(t * 4);
    std::vector<std::size_t> sigma = coset_start(n, b);
    std::vector<unsigned> sh(n);
    do {
      for (std::size_t i = 0; i < n; ++i) sh[i] = codec.shift(sigma[i]);
      for (std::size_t k = 0; k < t; ++k) {
        const std::uint64_t* e = &exps[k * n];
        std::uint64_t key = 0;
        for (std::size_t i = 0; i < n; ++i) key |= e[i] << sh[i];
        auto [it, inserted] = acc.try_emplace(key, coeffs[k]);
        if (!inserted) it->second += coeffs[k];
      }
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
  });

  std::unordered_map<std::uint64_t, mpz_class> total;
  for (auto& part : partial) {
    for (auto& [k, v] : part) {
      auto [it, inserted] = total.try_emplace(k);
      it->second += to_mpz(v);
    }
    part.clear();
  }
  return ExactPoly::from_packed(codec, total);
}

ExactPoly symmetrize_generic(const ExactPoly& f, unsigned threads) {
  const std::size_t n = f.num_vars();
  std::vector<std::vector<ExactPoly::Term>> partial(n);
  detail::for_each_block(n, threads, [&](std::size_t b) {
    std::unordered_map<Monomial, mpz_class, MonomialHash> acc;
    std::vector<std::size_t> sigma = coset_start(n, b);
    do {
      for (const auto& [m, c] : f.terms()) {
        Monomial pm(n);
        for (std::size_t i = 0; i < n; ++i) pm.exps[sigma[i]] = m.exps[i];
        acc[std::move(pm)] += c;
      }
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
    for (auto& [m, c] : acc) partial[b].emplace_back(m, std::move(c));
  });
  std::vector<ExactPoly::Term> all;
  for (auto& part : partial)
    for (auto& term : part) all.push_back(std::move(term));
  return ExactPoly::from_terms(n, std::move(all));
}

unsigned bit_length(const mpz_class& x) { return sgn(x) == 0 ? 0 : static_cast<unsigned>(mpz_sizeinbase(x.get_mpz_t(), 2)); }

}  // namespace

ExactPoly symmetrize_full(const ExactPoly& f, const SymmetrizeOptions& opts) {
  const std::size_t n = f.num_vars();
  if (n > opts.budget.max_vars) {
    throw BudgetExceeded("full symmetrization over " + std::to_string(n) + " variables exceeds the cap of " +
                         std::to_string(opts.budget.max_vars));
  }
  if (f.is_zero() || n == 0) return f;
  const std::uint64_t deg = *f.total_degree();
  if (deg > opts.budget.max_degree) {
    throw BudgetExceeded("full symmetrization of degree " + std::to_string(deg) + " exceeds the cap of " +
                         std::to_string(opts.budget.max_degree));
  }

  const detail::PackedCodec codec(n, deg);
  if (!codec.fits) return symmetrize_generic(f, opts.threads);

  // Each coset accumulator receives at most (n-1)! * terms contributions.
  unsigned max_bits = 0;
  bool fits_i64 = true;
  for (const auto& [m, c] : f.terms()) {
    max_bits = std::max(max_bits, bit_length(c));
    fits_i64 = fits_i64 && c.fits_slong_p();
  }
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), n - 1);
  const unsigned bound_bits = max_bits + bit_length(fact) + bit_length(mpz_class(static_cast<unsigned long>(f.num_terms())));
  if (fits_i64 && bound_bits <= 125) return symmetrize_packed<__int128>(f, codec, opts.threads);
  return symmetrize_packed<mpz_class>(f, codec, opts.threads);
}

namespace {

struct ModRing {
  const PrimeModulus* mod;
  using Value = std::uint64_t;
  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value add(Value a, Value b) const { return mod->add(a, b); }
  Value mul(Value a, Value b) const { return mod->mul(a, b); }
  Value diff(Value a, Value b) const { return mod->sub(a, b); }
  Value pow(Value a, std::uint64_t e) const { return mod->pow(a, e); }
  bool is_zero(Value a) const { return a == 0; }
};

struct IntRing {
  using Value = mpz_class;
  Value zero() const { return 0; }
  Value one() const { return 1; }
  Value add(const Value& a, const Value& b) const { return a + b; }
  Value mul(const Value& a, const Value& b) const { return a * b; }
  Value diff(const Value& a, const Value& b) const { return a - b; }
  Value pow(const Value& a, std::uint64_t e) const {
    Value r;
    mpz_pow_ui(r.get_mpz_t(), a.get_mpz_t(), e);
    return r;
  }
  bool is_zero(const Value& a) const { return sgn(a) == 0; }
};

template <class Ring>
typename Ring::Value symm_eval_impl(const EdgeMatrix& m, const std::vector<typename Ring::Value>& x, const Ring& ring,
                                    unsigned threads) {
  using V = typename Ring::Value;
  const std::size_t n = m.size();
  if (x.size() != n) throw DomainError("evaluation point length differs from the matrix size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (ring.is_zero(ring.diff(x[i], x[j]))) {
        throw DomainError("evaluation point coordinates must be pairwise distinct");
      }

  std::vector<std::int64_t> exps;
  struct Edge {
    std::size_t i, j, k;
  };
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto a = m(i, j);
      if (a == 0) continue;
      auto it = std::find(exps.begin(), exps.end(), a);
      const std::size_t k = static_cast<std::size_t>(it - exps.begin());
      if (it == exps.end()) exps.push_back(a);
      edges.push_back({i, j, k});
    }
  }
  // table[k][u * n + v] = (x_u - x_v)^{exps[k]}
  std::vector<std::vector<V>> table(exps.size(), std::vector<V>(n * n, ring.zero()));
  for (std::size_t k = 0; k < exps.size(); ++k)
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = 0; v < n; ++v)
        if (u != v) table[k][u * n + v] = ring.pow(ring.diff(x[u], x[v]), static_cast<std::uint64_t>(exps[k]));

  std::vector<V> partial(n, ring.zero());
  detail::for_each_block(n, threads, [&](std::size_t b) {
    std::vector<std::size_t> sigma = coset_start(n, b);
    V sum = ring.zero();
    do {
      V prod = ring.one();
      for (const auto& e : edges) {
        prod = ring.mul(prod, table[e.k][sigma[e.i] * n + sigma[e.j]]);
      }
      sum = ring.add(sum, prod);
    } while (std::next_permutation(sigma.begin() + 1, sigma.end()));
    partial[b] = sum;
  });
  V total = ring.zero();
  for (const auto& p : partial) total = ring.add(total, p);
  return total;
}

}  // namespace

std::uint64_t symm_eval_mod(const EdgeMatrix& m, std::span<const std::uint64_t> point, const PrimeModulus& mod,
                            unsigned threads) {
  std::vector<std::uint64_t> x;
  x.reserve(point.size());
  for (auto v : point) x.push_back(v % mod.value());
  return symm_eval_impl(m, x, ModRing{&mod}, threads);
}

mpz_class symm_eval_exact(const EdgeMatrix& m, std::span<const mpz_class> point, unsigned threads) {
  return symm_eval_impl(m, std::vector<mpz_class>(point.begin(), point.end()), IntRing{}, threads);
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kNonzero: return "NONZERO";
    case Verdict::kZeroExact: return "ZERO_EXACT";
    case Verdict::kZeroProbable: return "ZERO_PROBABLE";
  }
  return "?";
}

std::string to_string(NonzeroReason r) {
  switch (r) {
    case NonzeroReason::kNone: return "none";
    case NonzeroReason::kEvenEntries: return "even-entries";
    case NonzeroReason::kEvaluation: return "evaluation";
    case NonzeroReason::kExpansion: return "expansion";
    case NonzeroReason::kConstant: return "constant";
  }
  return "?";
}

std::vector<std::uint64_t> witness_point(std::size_t n, std::uint64_t seed, std::size_t trial) {
  SeededRng rng(seed ^ (0x9E3779B97F4A7C15ULL * (static_cast<std::uint64_t>(trial) + 1)));
  return rng.distinct(n, 1, kWitnessSampleSize);
}

SymmWitness nonzero_test(const EdgeMatrix& m, const NonzeroTestOptions& opts) {
  const std::size_t n = m.size();
  SymmWitness w;
  w.seed = opts.seed;
  w.degree = static_cast<std::uint64_t>(m.norm() / 2);
  w.sample_size = kWitnessSampleSize;
  const PrimeModulus mod = opts.modulus ? PrimeModulus(*opts.modulus) : auto_modulus(opts.seed);
  w.modulus = mod.value();
  const bool can_eval = n <= opts.max_eval_vars;
  const unsigned threads = opts.symmetrize.threads;

  if (m.is_zero()) {
    w.verdict = Verdict::kNonzero;
    w.reason = NonzeroReason::kConstant;
    w.point = witness_point(n, opts.seed, 0);
    std::uint64_t fact = 1;
    for (std::uint64_t k = 2; k <= n; ++k) fact = mod.mul(fact, k);
    w.value = fact;
    w.trials = 1;
    return w;
  }

  if (m.all_even()) {
    // Every summand is a square of a nonzero polynomial; at a real point with
    // distinct coordinates the integer value is strictly positive.
    w.verdict = Verdict::kNonzero;
    w.reason = NonzeroReason::kEvenEntries;
    w.point = witness_point(n, opts.seed, 0);
    if (can_eval) {
      w.value = symm_eval_mod(m, w.point, mod, threads);
      w.trials = 1;
    }
    return w;
  }

  const bool expandable = opts.policy == TestPolicy::kExactIfSmall && n <= opts.symmetrize.budget.max_vars &&
                          w.degree <= opts.symmetrize.budget.max_degree;
  if (!can_eval && !expandable) {
    throw BudgetExceeded("no witness search possible: " + std::to_string(n) + "! evaluations exceed the cap of " +
                         std::to_string(opts.max_eval_vars) + " variables");
  }

  if (can_eval) {
    for (std::size_t t = 0; t < opts.trials; ++t) {
      auto pt = witness_point(n, opts.seed, t);
      const auto v = symm_eval_mod(m, pt, mod, threads);
      w.trials = t + 1;
      if (v != 0) {
        w.verdict = Verdict::kNonzero;
        w.reason = NonzeroReason::kEvaluation;
        w.point = std::move(pt);
        w.value = v;
        return w;
      }
    }
  }

  if (expandable) {
    const ExactPoly full = symmetrize_full(graph_monomial(m), opts.symmetrize);
    if (full.is_zero()) {
      w.verdict = Verdict::kZeroExact;
      w.failure_bound = 0.0;
      return w;
    }
    w.verdict = Verdict::kNonzero;
    w.reason = NonzeroReason::kExpansion;
    for (std::size_t t = opts.trials; t < opts.trials + 64; ++t) {
      auto pt = witness_point(n, opts.seed, t);
      const auto v = evaluate_mod(full, pt, mod);
      if (v != 0) {
        w.point = std::move(pt);
        w.value = v;
        break;
      }
    }
    return w;
  }

  w.verdict = Verdict::kZeroProbable;
  w.failure_bound = std::pow(static_cast<double>(w.degree) / static_cast<double>(w.sample_size),
                             static_cast<double>(w.trials));
  return w;
}

BlockSymmetrization symmetrize_block(const EdgeMatrix& star, const Shape& shape, const SymmetrizeOptions& opts) {
  const BlockView view = block_decompose(star, shape);
  if (!view.off_diag.is_zero()) throw DomainError("matrix has entries outside the diagonal blocks of the shape");
  BlockSymmetrization out;
  out.product_nonzero = true;
  for (std::size_t r = 0; r < shape.blocks(); ++r) {
    const EdgeMatrix local = EdgeMatrix::validate(view.block(r, r));
    ExactPoly f = symmetrize_full(graph_monomial(local), opts);
    out.product_nonzero = out.product_nonzero && !f.is_zero();
    out.factors.push_back(std::move(f));
  }
  return out;
}

}  // namespace symgraph
