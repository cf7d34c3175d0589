#include "symgraph/dims.hpp"

#include <mpfr.h>

#include <algorithm>
#include <charconv>
#include <ostream>

#include "parallel.hpp"
#include "symgraph/errors.hpp"
#include "symgraph/tuples.hpp"

namespace symgraph {

QPoly gaussian_binomial(std::size_t n, std::size_t d) {
  QPoly p(n * d + 1 + n + d, 0);
  p[0] = 1;
  std::size_t deg = 0;
  for (std::size_t i = 1; i <= d; ++i) {
    // times (1 - q^{n+i})
    const std::size_t shift = n + i;
    deg += shift;
    for (std::size_t k = deg + 1; k-- > shift;) p[k] -= p[k - shift];
    // divided by (1 - q^i)
    for (std::size_t k = i; k <= deg; ++k) p[k] += p[k - i];
    deg -= i;
  }
  p.resize(n * d + 1);
  return p;
}

mpz_class p_w(std::size_t n, std::size_t d, std::int64_t w) {
  if (w < 0) return 0;
  const auto wu = static_cast<std::size_t>(w);
  if (wu > n * d) return 0;
  // dp[k][t]: partitions of t into at most k parts, parts at most m (after layer m)
  std::vector<std::vector<mpz_class>> dp(n + 1, std::vector<mpz_class>(wu + 1, 0));
  for (std::size_t k = 0; k <= n; ++k) dp[k][0] = 1;
  for (std::size_t m = 1; m <= d && m <= wu; ++m)
    for (std::size_t k = 1; k <= n; ++k)
      for (std::size_t t = m; t <= wu; ++t) dp[k][t] += dp[k - 1][t - m];
  return dp[n][wu];
}

mpz_class semidim(std::int64_t w, std::size_t d, std::size_t n) { return p_w(n, d, w) - p_w(n, d, w - 1); }

namespace {

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(x_, prec); }
  ~Mpfr() { mpfr_clear(x_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return x_; }

 private:
  mpfr_t x_;
};

// 4 * 2^sqrt(x) / (1000 * x^(9/4)), rounded toward `dir` at every step.
void evaluate_pp(mpfr_ptr out, std::int64_t x, mpfr_prec_t prec, mpfr_rnd_t dir) {
  const mpfr_rnd_t against = dir == MPFR_RNDD ? MPFR_RNDU : MPFR_RNDD;
  Mpfr xv(prec), root(prec), pow2(prec), den(prec);
  mpfr_set_si(xv.get(), static_cast<long>(x), MPFR_RNDN);  // exact: prec >= 64
  mpfr_sqrt(root.get(), xv.get(), dir);
  mpfr_ui_pow(pow2.get(), 2, root.get(), dir);
  mpfr_set_d(den.get(), 2.25, MPFR_RNDN);
  mpfr_pow(den.get(), xv.get(), den.get(), against);
  mpfr_mul_ui(den.get(), den.get(), 1000, against);
  mpfr_mul_ui(out, pow2.get(), 4, dir);
  mpfr_div(out, out, den.get(), dir);
}

mpz_class mpfr_ceil_z(mpfr_ptr v) {
  mpz_class z;
  mpfr_get_z(z.get_mpz_t(), v, MPFR_RNDU);
  return z;
}

}  // namespace

PPBound pp_bound(std::int64_t n, std::int64_t w, std::int64_t d) {
  if (n < 1 || w < 1 || d < 1) throw DomainError("PP bound needs N, w, d >= 1");
  PPBound out;
  out.x = std::min({2 * w, d * d, n * n});
  out.valid = std::min(n, d) >= 8 && 2 * w <= n * d;
  for (mpfr_prec_t prec = 64; prec <= 16384; prec *= 2) {
    Mpfr lo(prec), hi(prec);
    evaluate_pp(lo.get(), out.x, prec, MPFR_RNDD);
    evaluate_pp(hi.get(), out.x, prec, MPFR_RNDU);
    mpz_class clo = mpfr_ceil_z(lo.get()), chi = mpfr_ceil_z(hi.get());
    if (clo == chi) {
      out.value = clo;
      out.precision = static_cast<unsigned>(prec);
      return out;
    }
  }
  throw InternalInconsistency("PP bound ceiling still ambiguous at 16384 bits");
}

namespace {

std::int64_t parse_int(std::string_view s, const std::string& context) {
  std::int64_t v = 0;
  const auto* end = s.data() + s.size();
  auto [p, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || p != end || s.empty()) throw DomainError("bad integer '" + std::string(s) + "' in " + context);
  return v;
}

}  // namespace

DegreeRule DegreeRule::parse(const std::string& text) {
  DegreeRule r;
  if (!text.empty() && text[0] == 'w') {
    r.relative = true;
    std::string_view rest(text);
    rest.remove_prefix(1);
    if (rest.empty()) return r;
    const char sign = rest[0];
    if (sign != '+' && sign != '-') throw DomainError("degree rule must look like w-71, w+3, w or a constant");
    rest.remove_prefix(1);
    r.offset = parse_int(rest, "degree rule");
    if (sign == '-') r.offset = -r.offset;
    return r;
  }
  r.offset = parse_int(text, "degree rule");
  return r;
}

std::string DegreeRule::to_string() const {
  if (!relative) return std::to_string(offset);
  if (offset == 0) return "w";
  return offset > 0 ? "w+" + std::to_string(offset) : "w-" + std::to_string(-offset);
}

std::vector<std::int64_t> parse_weight_range(const std::string& text) {
  std::vector<std::string_view> fields;
  std::string_view s(text);
  for (;;) {
    const auto c = s.find(':');
    fields.push_back(s.substr(0, c));
    if (c == std::string_view::npos) break;
    s.remove_prefix(c + 1);
  }
  if (fields.size() == 1) return {parse_int(fields[0], "weight range")};
  if (fields.size() > 3) throw DomainError("weight range must be a:b or a:b:step");
  const std::int64_t a = parse_int(fields[0], "weight range");
  const std::int64_t b = parse_int(fields[1], "weight range");
  const std::int64_t step = fields.size() == 3 ? parse_int(fields[2], "weight range") : 1;
  if (step <= 0) throw DomainError("weight range step must be positive");
  if (b < a) throw DomainError("weight range end is below its start");
  std::vector<std::int64_t> out;
  for (std::int64_t w = a; w <= b; w += step) out.push_back(w);
  return out;
}

std::vector<TableRow> dims_table(std::size_t n, const std::vector<std::int64_t>& weights, const DegreeRule& rule,
                                 unsigned threads) {
  const auto nn = static_cast<std::int64_t>(n);
  if (nn < 3) throw DomainError("table needs N >= 3");
  const std::int64_t s = beta(nn) - 1;
  const std::int64_t base = varpi(s, nn);
  std::vector<TableRow> rows(weights.size());
  detail::for_each_block(weights.size(), threads, [&](std::size_t k) {
    TableRow& row = rows[k];
    row.w = weights[k];
    row.d = rule.apply(row.w);
    if (row.d < 0) throw DomainError("degree rule gives d < 0 at w = " + std::to_string(row.w));
    row.nu = row.w >= base ? composition_count(row.w - base, s) : mpz_class(0);
    row.semidim = semidim(row.w, static_cast<std::size_t>(row.d), n);
    if (row.w >= 1 && row.d >= 1) row.pp = pp_bound(nn, row.w, row.d);
  });
  return rows;
}

void write_table_csv(std::ostream& os, const std::vector<TableRow>& rows) {
  os << "w,nu,semidim,pp,valid\n";
  for (const auto& r : rows) {
    os << r.w << ',' << r.nu.get_str() << ',' << r.semidim.get_str() << ',' << r.pp.value.get_str() << ','
       << (r.pp.valid ? "true" : "false") << '\n';
  }
}

}  // namespace symgraph
