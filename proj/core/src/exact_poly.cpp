#include "symgraph/exact_poly.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "symgraph/modular.hpp"

namespace symgraph {

ExactPoly difference_power(std::size_t nvars, std::size_t i, std::size_t j, std::uint32_t e) {
  if (i >= nvars || j >= nvars || i == j) throw DomainError("difference_power needs two distinct variables");
  std::vector<ExactPoly::Term> terms;
  terms.reserve(e + 1);
  mpz_class binom = 1;
  for (std::uint32_t k = 0; k <= e; ++k) {
    Monomial m(nvars);
    m.exps[i] = e - k;
    m.exps[j] = k;
    terms.emplace_back(std::move(m), (k % 2 == 0) ? binom : mpz_class(-binom));
    binom = binom * (e - k) / (k + 1);
  }
  return ExactPoly::from_terms(nvars, std::move(terms));
}

mpq_class pow_q(const mpq_class& x, std::uint64_t e) {
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), x.get_num_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), x.get_den_mpz_t(), e);
  mpq_class r(num, den);
  r.canonicalize();
  return r;
}

std::uint64_t evaluate_mod(const ExactPoly& p, std::span<const std::uint64_t> point, const PrimeModulus& mod) {
  if (point.size() != p.num_vars()) throw AmbientMismatch("evaluation point length differs from ambient variable count");
  const std::uint64_t q = mod.value();
  std::vector<std::uint64_t> x(point.begin(), point.end());
  for (auto& v : x) v %= q;
  std::uint64_t total = 0;
  for (const auto& [m, c] : p.terms()) {
    std::uint64_t term = mpz_fdiv_ui(c.get_mpz_t(), q);
    for (std::size_t i = 0; i < m.size() && term != 0; ++i) {
      if (m.exps[i] != 0) term = mod.mul(term, mod.pow(x[i], m.exps[i]));
    }
    total = mod.add(total, term);
  }
  return total;
}

PolyInfo analyze(const ExactPoly& p, std::span<const std::vector<std::size_t>> permutations) {
  PolyInfo info;
  info.total_degree = p.total_degree();
  info.variable_degrees = p.variable_degrees();
  info.homogeneous = p.is_homogeneous();
  for (const auto& sigma : permutations) {
    const ExactPoly q = p.permuted(sigma);
    info.symmetric_under.push_back(q == p);
    info.antisymmetric_under.push_back(q == -p);
  }
  return info;
}

bool is_symmetric(const ExactPoly& p) {
  const std::size_t n = p.num_vars();
  std::vector<std::size_t> tau(n);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::iota(tau.begin(), tau.end(), std::size_t{0});
    std::swap(tau[k], tau[k + 1]);
    if (!(p.permuted(tau) == p)) return false;
  }
  return true;
}

mpz_class content(const ExactPoly& p) {
  mpz_class g = 0;
  for (const auto& [m, c] : p.terms()) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ExactPoly primitive_part(const ExactPoly& p) {
  if (p.is_zero()) return p;
  mpz_class g = content(p);
  if (sgn(p.leading_term().second) < 0) g = -g;
  std::vector<ExactPoly::Term> terms;
  terms.reserve(p.num_terms());
  for (const auto& [m, c] : p.terms()) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    terms.emplace_back(m, std::move(q));
  }
  return ExactPoly::from_sorted_unchecked(p.num_vars(), std::move(terms));
}

bool proportional(const ExactPoly& a, const ExactPoly& b) {
  if (a.num_vars() != b.num_vars()) throw AmbientMismatch("proportionality test across different rings");
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return primitive_part(a) == primitive_part(b);
}

void write_poly_text(std::ostream& os, const ExactPoly& p) {
  os << "# vars " << p.num_vars() << '\n';
  for (const auto& [m, c] : p.terms()) {
    os << c.get_str();
    for (auto e : m.exps) os << ' ' << e;
    os << '\n';
  }
}

std::string to_poly_text(const ExactPoly& p) {
  std::ostringstream os;
  write_poly_text(os, p);
  return os.str();
}

ExactPoly read_poly_text(std::istream& is, std::optional<std::size_t> nvars_hint) {
  std::optional<std::size_t> nvars = nvars_hint;
  std::vector<ExactPoly::Term> terms;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      std::istringstream hs(line.substr(first + 1));
      std::string key;
      std::size_t k = 0;
      if (hs >> key && key == "vars" && hs >> k) {
        if (nvars && *nvars != k) throw AmbientMismatch("declared variable count conflicts with expected count");
        nvars = k;
      }
      continue;
    }
    std::istringstream ls(line);
    std::string coeff;
    ls >> coeff;
    mpz_class c;
    if (c.set_str(coeff, 10) != 0) {
      throw DomainError("line " + std::to_string(lineno) + ": bad coefficient '" + coeff + "'");
    }
    std::vector<std::uint32_t> exps;
    long long e = 0;
    while (ls >> e) {
      if (e < 0 || e > 0xffffffffLL) throw DomainError("line " + std::to_string(lineno) + ": exponent out of range");
      exps.push_back(static_cast<std::uint32_t>(e));
    }
    if (!ls.eof()) throw DomainError("line " + std::to_string(lineno) + ": malformed exponent list");
    if (!nvars) nvars = exps.size();
    if (exps.size() != *nvars) {
      throw AmbientMismatch("line " + std::to_string(lineno) + ": expected " + std::to_string(*nvars) +
                            " exponents, got " + std::to_string(exps.size()));
    }
    terms.emplace_back(Monomial(std::move(exps)), std::move(c));
  }
  if (!nvars) throw DomainError("polynomial text has no terms and no '# vars' header");
  return ExactPoly::from_terms(*nvars, std::move(terms));
}

ExactPoly parse_poly_text(const std::string& text, std::optional<std::size_t> nvars_hint) {
  std::istringstream is(text);
  return read_poly_text(is, nvars_hint);
}

std::string to_string(const ExactPoly& p, const std::string& var_prefix) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    mpz_class a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    const bool constant = m.degree() == 0;
    bool need_star = false;
    if (a != 1 || constant) {
      os << a.get_str();
      need_star = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m.exps[i] == 0) continue;
      if (need_star) os << '*';
      os << var_prefix << (i + 1);
      if (m.exps[i] > 1) os << '^' << m.exps[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace symgraph
