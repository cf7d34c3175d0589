#pragma once

// Sparse multivariate polynomials with exact coefficients.
//
// SparsePoly<C> stores its terms in graded-lex order, leading term first, with
// no zero coefficients, so two equal polynomials have identical term lists.
// ExactPoly (integer coefficients) is the working type everywhere; RatPoly is
// used only where division is forced (the elementary-symmetric basis).

#include <gmpxx.h>

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "symgraph/errors.hpp"

namespace symgraph {

struct Monomial {
  std::vector<std::uint32_t> exps;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
  explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

  std::size_t size() const { return exps.size(); }
  std::uint64_t degree() const {
    std::uint64_t d = 0;
    for (auto e : exps) d += e;
    return d;
  }
  std::uint32_t operator[](std::size_t i) const { return exps[i]; }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Positive when a comes before b (a is larger in graded-lex order).
inline int compare_grlex(const Monomial& a, const Monomial& b) {
  const auto da = a.degree(), db = b.degree();
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = 0; i < a.exps.size(); ++i) {
    if (a.exps[i] != b.exps[i]) return a.exps[i] > b.exps[i] ? 1 : -1;
  }
  return 0;
}

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto e : m.exps) {
      h ^= e;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};

namespace detail {

inline bool is_zero(const mpz_class& c) { return sgn(c) == 0; }
inline bool is_zero(const mpq_class& c) { return sgn(c) == 0; }

// Packs an exponent vector into one 64-bit word, variable 0 in the highest
// field. Within one total degree, integer order of packed keys equals lex order.
struct PackedCodec {
  std::size_t nvars = 0;
  unsigned bits = 0;
  bool fits = false;

  PackedCodec(std::size_t n, std::uint64_t max_exponent) : nvars(n) {
    bits = std::max(1u, static_cast<unsigned>(std::bit_width(max_exponent)));
    fits = n == 0 || (n * bits <= 64 && bits < 32);
  }

  unsigned shift(std::size_t var) const {
    return static_cast<unsigned>((nvars - 1 - var) * bits);
  }
  std::uint64_t encode(const std::vector<std::uint32_t>& e) const {
    std::uint64_t k = 0;
    for (std::size_t i = 0; i < nvars; ++i) k |= std::uint64_t{e[i]} << shift(i);
    return k;
  }
  Monomial decode(std::uint64_t k) const {
    Monomial m(nvars);
    const std::uint64_t mask = bits >= 64 ? ~0ULL : ((1ULL << bits) - 1);
    for (std::size_t i = 0; i < nvars; ++i) {
      m.exps[i] = static_cast<std::uint32_t>((k >> shift(i)) & mask);
    }
    return m;
  }
};

}  // namespace detail

template <class C>
class SparsePoly {
 public:
  using Coeff = C;
  using Term = std::pair<Monomial, C>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars) : nvars_(nvars) {}

  static SparsePoly constant(std::size_t nvars, const C& c) {
    SparsePoly p(nvars);
    if (!detail::is_zero(c)) p.terms_.emplace_back(Monomial(nvars), c);
    return p;
  }
  static SparsePoly one(std::size_t nvars) { return constant(nvars, C(1)); }

  static SparsePoly variable(std::size_t nvars, std::size_t var) {
    if (var >= nvars) throw DomainError("variable index out of range");
    Monomial m(nvars);
    m.exps[var] = 1;
    SparsePoly p(nvars);
    p.terms_.emplace_back(std::move(m), C(1));
    return p;
  }

  static SparsePoly monomial(Monomial m, const C& c) {
    SparsePoly p(m.size());
    if (!detail::is_zero(c)) p.terms_.emplace_back(std::move(m), c);
    return p;
  }

  // Combines duplicate monomials, drops zeros and sorts.
  static SparsePoly from_terms(std::size_t nvars, std::vector<Term> terms) {
    std::unordered_map<Monomial, C, MonomialHash> acc;
    acc.reserve(terms.size());
    for (auto& [m, c] : terms) {
      if (m.size() != nvars) throw AmbientMismatch("monomial length differs from ambient variable count");
      auto [it, inserted] = acc.try_emplace(std::move(m), c);
      if (!inserted) it->second += c;
    }
    SparsePoly p(nvars);
    p.terms_.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (!detail::is_zero(c)) p.terms_.emplace_back(m, std::move(c));
    }
    p.sort_terms();
    return p;
  }

  std::size_t num_vars() const { return nvars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading_term() const { return terms_.front(); }

  // nullopt stands for the degree of the zero polynomial (minus infinity).
  std::optional<std::uint64_t> total_degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.front().first.degree();
  }

  std::vector<std::uint64_t> variable_degrees() const {
    std::vector<std::uint64_t> d(nvars_, 0);
    for (const auto& [m, c] : terms_) {
      for (std::size_t i = 0; i < nvars_; ++i) d[i] = std::max<std::uint64_t>(d[i], m.exps[i]);
    }
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const auto d = terms_.front().first.degree();
    return std::all_of(terms_.begin(), terms_.end(),
                       [d](const Term& t) { return t.first.degree() == d; });
  }

  C coefficient(const Monomial& m) const {
    for (const auto& [mm, c] : terms_) {
      if (mm == m) return c;
    }
    return C(0);
  }

  SparsePoly operator-() const {
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
  }

  SparsePoly& operator+=(const SparsePoly& o) { return *this = merge(*this, o, false); }
  SparsePoly& operator-=(const SparsePoly& o) { return *this = merge(*this, o, true); }
  SparsePoly& operator*=(const SparsePoly& o) { return *this = multiply(*this, o); }

  friend SparsePoly operator+(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, false); }
  friend SparsePoly operator-(const SparsePoly& a, const SparsePoly& b) { return merge(a, b, true); }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) { return multiply(a, b); }

  SparsePoly scaled(const C& k) const {
    if (detail::is_zero(k)) return SparsePoly(nvars_);
    SparsePoly r = *this;
    for (auto& t : r.terms_) t.second *= k;
    return r;
  }

  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    if (a.nvars_ != b.nvars_ || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].first == b.terms_[i].first) || a.terms_[i].second != b.terms_[i].second) return false;
    }
    return true;
  }

  // f(z_{sigma(0)}, ..., z_{sigma(n-1)}): the exponent of z_i moves to z_{sigma(i)}.
  SparsePoly permuted(std::span<const std::size_t> sigma) const {
    if (sigma.size() != nvars_) throw AmbientMismatch("permutation length differs from ambient variable count");
    SparsePoly r(nvars_);
    r.terms_.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial pm(nvars_);
      for (std::size_t i = 0; i < nvars_; ++i) pm.exps[sigma[i]] = m.exps[i];
      r.terms_.emplace_back(std::move(pm), c);
    }
    r.sort_terms();
    return r;
  }

  // Renames variable i to variable target[i] of a ring with new_nvars variables.
  SparsePoly embedded(std::size_t new_nvars, std::span<const std::size_t> target) const {
    if (target.size() != nvars_) throw AmbientMismatch("embedding map length differs from ambient variable count");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
      Monomial em(new_nvars);
      for (std::size_t i = 0; i < nvars_; ++i) {
        if (target[i] >= new_nvars) throw DomainError("embedding target out of range");
        em.exps[target[i]] += m.exps[i];
      }
      out.emplace_back(std::move(em), c);
    }
    return from_terms(new_nvars, std::move(out));
  }

  SparsePoly derivative(std::size_t var) const {
    if (var >= nvars_) throw DomainError("variable index out of range");
    SparsePoly r(nvars_);
    for (const auto& [m, c] : terms_) {
      if (m.exps[var] == 0) continue;
      Monomial dm = m;
      dm.exps[var] -= 1;
      r.terms_.emplace_back(std::move(dm), c * C(m.exps[var]));
    }
    // Lowering one exponent keeps graded-lex order among the survivors.
    return r;
  }

  template <class D>
  SparsePoly<D> converted() const {
    std::vector<typename SparsePoly<D>::Term> out;
    out.reserve(terms_.size());
    for (const auto& [m, c] : terms_) out.emplace_back(m, D(c));
    return SparsePoly<D>::from_sorted_unchecked(nvars_, std::move(out));
  }

  // Caller guarantees canonical order and no zeros.
  static SparsePoly from_sorted_unchecked(std::size_t nvars, std::vector<Term> terms) {
    SparsePoly p(nvars);
    p.terms_ = std::move(terms);
    return p;
  }

 private:
  void sort_terms() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return compare_grlex(a.first, b.first) > 0; });
  }

  static void check_same_ring(const SparsePoly& a, const SparsePoly& b) {
    if (a.nvars_ != b.nvars_) throw AmbientMismatch("polynomials live in rings with different variable counts");
  }

  static SparsePoly merge(const SparsePoly& a, const SparsePoly& b, bool subtract) {
    check_same_ring(a, b);
    SparsePoly r(a.nvars_);
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      int cmp;
      if (i == a.terms_.size()) cmp = -1;
      else if (j == b.terms_.size()) cmp = 1;
      else cmp = compare_grlex(a.terms_[i].first, b.terms_[j].first);
      if (cmp > 0) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (cmp < 0) {
        r.terms_.emplace_back(b.terms_[j].first, subtract ? C(-b.terms_[j].second) : b.terms_[j].second);
        ++j;
      } else {
        C c = subtract ? C(a.terms_[i].second - b.terms_[j].second) : C(a.terms_[i].second + b.terms_[j].second);
        if (!detail::is_zero(c)) r.terms_.emplace_back(a.terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return r;
  }

  static SparsePoly multiply(const SparsePoly& a, const SparsePoly& b) {
    check_same_ring(a, b);
    const std::size_t n = a.nvars_;
    if (a.is_zero() || b.is_zero()) return SparsePoly(n);
    const std::uint64_t maxdeg = *a.total_degree() + *b.total_degree();
    detail::PackedCodec codec(n, maxdeg);
    if (codec.fits) {
      std::vector<std::uint64_t> bk;
      bk.reserve(b.terms_.size());
      for (const auto& t : b.terms_) bk.push_back(codec.encode(t.first.exps));
      std::unordered_map<std::uint64_t, C> acc;
      acc.reserve(a.terms_.size() * b.terms_.size() / 2 + 16);
      for (const auto& [ma, ca] : a.terms_) {
        const std::uint64_t ka = codec.encode(ma.exps);
        for (std::size_t j = 0; j < b.terms_.size(); ++j) {
          auto [it, inserted] = acc.try_emplace(ka + bk[j]);
          if (inserted) it->second = ca * b.terms_[j].second;
          else it->second += ca * b.terms_[j].second;
        }
      }
      return from_packed(codec, acc);
    }
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) {
        Monomial m(n);
        for (std::size_t k = 0; k < n; ++k) m.exps[k] = ma.exps[k] + mb.exps[k];
        out.emplace_back(std::move(m), ca * cb);
      }
    }
    return from_terms(n, std::move(out));
  }

 public:
  // Builds a canonical polynomial from packed-key accumulators.
  template <class Map>
  static SparsePoly from_packed(const detail::PackedCodec& codec, Map& acc) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> keys;  // (degree, key)
    keys.reserve(acc.size());
    for (const auto& [k, c] : acc) {
      if (!detail::is_zero(c)) keys.emplace_back(codec.decode(k).degree(), k);
    }
    std::sort(keys.begin(), keys.end(), std::greater<>());
    SparsePoly r(codec.nvars);
    r.terms_.reserve(keys.size());
    for (const auto& [d, k] : keys) r.terms_.emplace_back(codec.decode(k), std::move(acc.find(k)->second));
    return r;
  }

 private:
  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

using ExactPoly = SparsePoly<mpz_class>;
using RatPoly = SparsePoly<mpq_class>;

template <class C>
SparsePoly<C> pow(const SparsePoly<C>& p, std::uint64_t e) {
  SparsePoly<C> result = SparsePoly<C>::one(p.num_vars());
  SparsePoly<C> base = p;
  while (e > 0) {
    if (e & 1U) result *= base;
    e >>= 1U;
    if (e > 0) base *= base;
  }
  return result;
}

// (z_i - z_j)^e expanded by the binomial theorem.
ExactPoly difference_power(std::size_t nvars, std::size_t i, std::size_t j, std::uint32_t e);

mpq_class pow_q(const mpq_class& x, std::uint64_t e);

// Exact substitution of an integer or rational point.
template <class C, class V>
V evaluate(const SparsePoly<C>& p, std::span<const V> point) {
  if (point.size() != p.num_vars()) throw AmbientMismatch("evaluation point length differs from ambient variable count");
  V total = 0;
  for (const auto& [m, c] : p.terms()) {
    V term = c;
    for (std::size_t i = 0; i < m.size() && term != 0; ++i) {
      if (m.exps[i] == 0) continue;
      if constexpr (std::is_same_v<V, mpz_class>) {
        mpz_class pw;
        mpz_pow_ui(pw.get_mpz_t(), point[i].get_mpz_t(), m.exps[i]);
        term *= pw;
      } else {
        term *= pow_q(mpq_class(point[i]), m.exps[i]);
      }
    }
    total += term;
  }
  return total;
}

class PrimeModulus;
std::uint64_t evaluate_mod(const ExactPoly& p, std::span<const std::uint64_t> point, const PrimeModulus& mod);

struct PolyInfo {
  std::optional<std::uint64_t> total_degree;  // nullopt: zero polynomial
  std::vector<std::uint64_t> variable_degrees;
  bool homogeneous = true;
  std::vector<bool> symmetric_under;       // one entry per queried permutation
  std::vector<bool> antisymmetric_under;   // f o sigma == -f
};

PolyInfo analyze(const ExactPoly& p, std::span<const std::vector<std::size_t>> permutations = {});

// Checks f o tau == f for every adjacent transposition tau.
bool is_symmetric(const ExactPoly& p);

mpz_class content(const ExactPoly& p);

// Divides out the content and makes the leading coefficient positive.
ExactPoly primitive_part(const ExactPoly& p);

// Integer polynomial proportionality test via primitive parts.
bool proportional(const ExactPoly& a, const ExactPoly& b);

// Text format: one term per line, "<coefficient> <e1> ... <eK>", leading term
// first; '#' starts a comment line. The writer always emits "# vars K" so the
// zero polynomial (no term lines) keeps its ambient ring.
void write_poly_text(std::ostream& os, const ExactPoly& p);
std::string to_poly_text(const ExactPoly& p);
ExactPoly read_poly_text(std::istream& is, std::optional<std::size_t> nvars_hint = std::nullopt);
ExactPoly parse_poly_text(const std::string& text, std::optional<std::size_t> nvars_hint = std::nullopt);

// Human-readable form, e.g. "z1^2 - 2*z1*z2 + z2^2".
std::string to_string(const ExactPoly& p, const std::string& var_prefix = "z");

}  // namespace symgraph
