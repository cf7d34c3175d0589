#include "symgraph/elementary.hpp"

#include <map>
#include <numeric>

#include "symgraph/errors.hpp"

namespace symgraph {

namespace {

struct GrlexFirst {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare_grlex(a, b) > 0; }
};

// powers[i][k] = base[i]^k, built on demand.
template <class C>
class PowerCache {
 public:
  explicit PowerCache(std::vector<SparsePoly<C>> bases) : powers_(bases.size()) {
    for (std::size_t i = 0; i < bases.size(); ++i) {
      powers_[i].push_back(SparsePoly<C>::one(bases[i].num_vars()));
      powers_[i].push_back(std::move(bases[i]));
    }
  }

  const SparsePoly<C>& get(std::size_t i, std::uint32_t k) {
    auto& row = powers_[i];
    while (row.size() <= k) row.push_back(row.back() * row[1]);
    return row[k];
  }

  // prod_i base[i]^{m[i]}
  SparsePoly<C> product(const Monomial& m, std::size_t nvars) {
    SparsePoly<C> r = SparsePoly<C>::one(nvars);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m.exps[i] != 0) r *= get(i, m.exps[i]);
    return r;
  }

 private:
  std::vector<std::vector<SparsePoly<C>>> powers_;
};

template <class C>
SparsePoly<C> substitute(const RatPoly& p, std::vector<SparsePoly<C>> images, std::size_t nvars) {
  PowerCache<C> cache(std::move(images));
  SparsePoly<C> out(nvars);
  for (const auto& [m, c] : p.terms()) out += cache.product(m, nvars).scaled(c);
  return out;
}

}  // namespace

ExactPoly elementary_symmetric(std::size_t n, std::size_t k) {
  if (k < 1 || k > n) throw DomainError("elementary symmetric index out of range");
  std::vector<ExactPoly::Term> terms;
  std::vector<bool> pick(n, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    Monomial m(n);
    for (std::size_t i = 0; i < n; ++i) m.exps[i] = pick[i] ? 1 : 0;
    terms.emplace_back(std::move(m), mpz_class(1));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return ExactPoly::from_terms(n, std::move(terms));
}

ElemPoly to_elementary(const ExactPoly& f) {
  const std::size_t n = f.num_vars();
  if (!is_symmetric(f)) throw DomainError("polynomial is not symmetric");
  std::vector<ExactPoly> sigmas;
  for (std::size_t k = 1; k <= n; ++k) sigmas.push_back(elementary_symmetric(n, k));
  PowerCache<mpz_class> cache(std::move(sigmas));

  std::map<Monomial, mpz_class, GrlexFirst> rem;
  for (const auto& [m, c] : f.terms()) rem.emplace(m, c);
  std::vector<ElemPoly::Term> out;
  while (!rem.empty()) {
    const Monomial lead = rem.begin()->first;
    const mpz_class c = rem.begin()->second;
    Monomial e(n);
    for (std::size_t i = 0; i < n; ++i) {
      const std::uint32_t next = i + 1 < n ? lead.exps[i + 1] : 0;
      if (lead.exps[i] < next) throw InternalInconsistency("leading monomial of a symmetric remainder is not sorted");
      e.exps[i] = lead.exps[i] - next;
    }
    const ExactPoly step = cache.product(e, n);
    for (const auto& [m, pc] : step.terms()) {
      auto [it, inserted] = rem.try_emplace(m, 0);
      it->second -= c * pc;
      if (sgn(it->second) == 0) rem.erase(it);
    }
    if (rem.count(lead) != 0) throw InternalInconsistency("elimination step did not cancel the leading term");
    out.emplace_back(std::move(e), mpq_class(c));
  }
  return ElemPoly::from_terms(n, std::move(out));
}

RatPoly from_elementary(const ElemPoly& p) {
  const std::size_t n = p.num_vars();
  std::vector<RatPoly> sigmas;
  for (std::size_t k = 1; k <= n; ++k) sigmas.push_back(elementary_symmetric(n, k).converted<mpq_class>());
  return substitute<mpq_class>(p, std::move(sigmas), n);
}

std::optional<std::uint64_t> elementary_weight(const ElemPoly& p) {
  std::optional<std::uint64_t> w;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += (i + 1) * m.exps[i];
    if (w && *w != t) return std::nullopt;
    w = t;
  }
  return w;
}

RatPoly shifted_elementary(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw DomainError("shifted elementary index out of range");
  std::vector<RatPoly::Term> terms;
  for (std::size_t j = 0; j <= i; ++j) {
    Monomial m(n + 1);
    if (j >= 1) m.exps[j - 1] = 1;
    m.exps[n] = static_cast<std::uint32_t>(i - j);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n - j, i - j);
    terms.emplace_back(std::move(m), mpq_class(b));
  }
  return RatPoly::from_terms(n + 1, std::move(terms));
}

bool translation_check(const ElemPoly& p) {
  const std::size_t n = p.num_vars();
  std::vector<RatPoly> shifted;
  for (std::size_t i = 1; i <= n; ++i) shifted.push_back(shifted_elementary(n, i));
  const RatPoly lhs = substitute<mpq_class>(p, std::move(shifted), n + 1);
  std::vector<std::size_t> target(n);
  std::iota(target.begin(), target.end(), std::size_t{0});
  return lhs == p.embedded(n + 1, target);
}

std::optional<std::uint64_t> a_weight(const ExactPoly& q) {
  std::optional<std::uint64_t> w;
  for (const auto& [m, c] : q.terms()) {
    std::uint64_t t = 0;
    for (std::size_t i = 0; i < m.size(); ++i) t += i * m.exps[i];
    if (w && *w != t) return std::nullopt;
    w = t;
  }
  return w;
}

SemiInvariant homogenize(const ElemPoly& p, std::int64_t d, bool check_translation) {
  const std::size_t n = p.num_vars();
  if (p.is_zero()) throw DomainError("cannot homogenize the zero polynomial");
  if (d < 0) throw DomainError("degree must be nonnegative");
  const auto weight = elementary_weight(p);
  if (!weight) throw DomainError("polynomial is not weight-homogeneous");
  if (check_translation && !translation_check(p)) throw DomainError("polynomial is not translation invariant");

  mpz_class lcm = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  mpz_class g = 0;
  for (const auto& [m, c] : p.terms()) {
    const mpz_class v = c.get_num() * (lcm / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
  }
  SemiInvariant out;
  out.scale = mpq_class(lcm, g);
  out.scale.canonicalize();

  std::vector<ExactPoly::Term> terms;
  for (const auto& [m, c] : p.terms()) {
    const auto k = static_cast<std::int64_t>(m.degree());
    if (k > d) throw DomainError("e-degree " + std::to_string(k) + " exceeds the requested degree " + std::to_string(d));
    Monomial a(n + 1);
    a.exps[0] = static_cast<std::uint32_t>(d - k);
    for (std::size_t i = 0; i < n; ++i) a.exps[i + 1] = m.exps[i];
    const mpq_class v = c * out.scale;
    if (v.get_den() != 1) throw InternalInconsistency("denominator survived clearing");
    terms.emplace_back(std::move(a), v.get_num());
  }
  out.q = ExactPoly::from_terms(n + 1, std::move(terms));
  out.degree = d;
  out.weight = static_cast<std::int64_t>(*weight);
  return out;
}

}  // namespace symgraph
