#include "symgraph/tuples.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "symgraph/errors.hpp"

namespace symgraph {

namespace {

using i128 = __int128;

std::int64_t floor_div(i128 a, i128 b) {
  i128 q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return static_cast<std::int64_t>(q);
}

void require_sn(std::int64_t s, std::int64_t n) {
  if (s < 1) throw DomainError("s must be at least 1");
  if (n < 1) throw DomainError("n must be at least 1");
}

// floor(n/(s+1) - s/2)
std::int64_t leading_part(std::int64_t s, std::int64_t n) {
  return floor_div(2 * static_cast<i128>(n) - static_cast<i128>(s) * (s + 1), 2 * static_cast<i128>(s + 1));
}

void increasing_with_sum(std::int64_t k, std::int64_t n, std::int64_t lo, PartTuple& prefix,
                         std::vector<PartTuple>& out) {
  if (k == 1) {
    if (n >= lo) {
      prefix.push_back(n);
      out.push_back(prefix);
      prefix.pop_back();
    }
    return;
  }
  // The rest must be at least a + 1, ..., a + k - 1.
  for (std::int64_t a = lo; a * k + k * (k - 1) / 2 <= n; ++a) {
    prefix.push_back(a);
    increasing_with_sum(k - 1, n - a, a + 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::string to_string(const PartTuple& a) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < a.size(); ++i) os << (i ? "," : "") << a[i];
  os << ')';
  return os.str();
}

std::int64_t beta(std::int64_t n) {
  if (n < 0) throw DomainError("beta needs n >= 0");
  mpz_class r = 8 * mpz_class(static_cast<long>(n)) + 1;
  mpz_sqrt(r.get_mpz_t(), r.get_mpz_t());
  return static_cast<std::int64_t>(mpz_class((r - 1) / 2).get_si());
}

PartTuple wp_recursive(std::int64_t s, std::int64_t n) {
  require_sn(s, n);
  PartTuple p;
  p.reserve(static_cast<std::size_t>(s + 1));
  i128 used = 0;
  for (std::int64_t j = 1; j <= s + 1; ++j) {
    const i128 k = s + 2 - j;
    const i128 rem = static_cast<i128>(n) - used;
    p.push_back(floor_div(2 * rem - k * (k - 1), 2 * k));
    used += p.back();
  }
  return p;
}

PartTuple wp_closed(std::int64_t s, std::int64_t n) {
  require_sn(s, n);
  const std::int64_t p1 = leading_part(s, n);
  const std::int64_t e = n - s * (s + 1) / 2 - p1 * (s + 1);
  if (e < 0 || e > s) throw InternalInconsistency("closed form remainder out of range");
  PartTuple p;
  for (std::int64_t j = 1; j <= s + 1; ++j) p.push_back(j <= s + 1 - e ? p1 + j - 1 : p1 + j);
  return p;
}

PartTuple wp(std::int64_t s, std::int64_t n) {
  PartTuple a = wp_recursive(s, n);
  if (a != wp_closed(s, n)) {
    throw InternalInconsistency("wp(" + std::to_string(s) + "," + std::to_string(n) + "): recursion and closed form differ");
  }
  return a;
}

std::int64_t wt(std::int64_t n, const PartTuple& a) {
  i128 sum = 0, sq = 0;
  for (auto x : a) {
    sum += x;
    sq += static_cast<i128>(x) * x;
  }
  if (sum != n) throw DomainError("tuple " + to_string(a) + " does not sum to " + std::to_string(n));
  return static_cast<std::int64_t>((static_cast<i128>(n) * n - sq) / 2);
}

std::int64_t varpi_closed(std::int64_t s, std::int64_t n) {
  require_sn(s, n);
  const i128 p = leading_part(s, n);
  const i128 S = s + 1;
  const i128 N = n;
  const i128 num = 12 * S * (S + 1) * p * p + 12 * (S * S * (S + 1) - 2 * N * (S + 1)) * p +
                   (3 * S * S * S * S + 2 * S * S * S - 3 * (1 + 4 * N) * S * S - 2 * (1 + 6 * N) * S + 24 * N * N);
  if (num % 24 != 0) throw InternalInconsistency("closed form for varpi is not integral");
  return static_cast<std::int64_t>(num / 24);
}

std::int64_t varpi(std::int64_t s, std::int64_t n) {
  const std::int64_t v = wt(n, wp(s, n));
  if (v != varpi_closed(s, n)) {
    throw InternalInconsistency("varpi(" + std::to_string(s) + "," + std::to_string(n) + "): closed form differs");
  }
  return v;
}

bool strictly_increasing(const PartTuple& a) {
  return std::adjacent_find(a.begin(), a.end(), [](auto x, auto y) { return x >= y; }) == a.end();
}

bool in_I(std::int64_t s, std::int64_t n, const PartTuple& a) {
  return static_cast<std::int64_t>(a.size()) == s + 1 && strictly_increasing(a) &&
         std::accumulate(a.begin(), a.end(), i128{0}) == n;
}

bool in_P(std::int64_t s, std::int64_t n, const PartTuple& a) { return in_I(s, n, a) && a.front() >= 1; }

std::vector<PartTuple> enumerate_P(std::int64_t s, std::int64_t n) { return enumerate_I(s, n, 1); }

std::vector<PartTuple> enumerate_I(std::int64_t s, std::int64_t n, std::int64_t lowest) {
  require_sn(s, n);
  std::vector<PartTuple> out;
  PartTuple prefix;
  increasing_with_sum(s + 1, n, lowest, prefix, out);
  return out;
}

PartTuple v_tuple(std::int64_t s, std::int64_t n) {
  require_sn(s, n);
  PartTuple v(static_cast<std::size_t>(s + 1));
  std::iota(v.begin(), v.end() - 1, std::int64_t{1});
  v.back() = n - s * (s + 1) / 2;
  return v;
}

std::optional<PartTuple> modify(const PartTuple& a, std::size_t i, std::size_t j) {
  if (i < 1 || i >= j || j > a.size()) throw DomainError("modification needs 1 <= i < j <= s+1");
  PartTuple b = a;
  b[i - 1] += 1;
  b[j - 1] -= 1;
  if (!strictly_increasing(b)) return std::nullopt;
  return b;
}

std::vector<PartTuple> modification_path(std::int64_t n, const PartTuple& a) {
  const auto s = static_cast<std::int64_t>(a.size()) - 1;
  if (!in_I(s, n, a)) throw DomainError(to_string(a) + " is not strictly increasing with sum " + std::to_string(n));
  std::vector<PartTuple> path{a};
  for (;;) {
    const PartTuple& cur = path.back();
    std::optional<PartTuple> next;
    for (std::size_t i = 1; i <= cur.size() && !next; ++i)
      for (std::size_t j = i + 1; j <= cur.size() && !next; ++j) next = modify(cur, i, j);
    if (!next) break;
    if (wt(n, *next) <= wt(n, cur)) throw InternalInconsistency("elementary modification did not raise the weight");
    path.push_back(std::move(*next));
  }
  if (path.back() != wp(s, n)) throw InternalInconsistency("modification path did not end at wp(s, n)");
  return path;
}

mpz_class composition_count(std::int64_t theta, std::int64_t s) {
  if (theta < 0 || s < 1) throw DomainError("composition count needs theta >= 0 and s >= 1");
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(s - 1 + theta), static_cast<unsigned long>(s - 1));
  return r;
}

mpz_class nu(std::int64_t w, std::int64_t n, const PartTuple& a) {
  const auto s = static_cast<std::int64_t>(a.size()) - 1;
  if (!in_P(s, n, a)) throw DomainError(to_string(a) + " is not a strictly increasing positive composition of " + std::to_string(n));
  const std::int64_t theta = w - wt(n, a);
  if (theta < 1) throw DomainError("w must exceed wt(n, a) = " + std::to_string(w - theta));
  return composition_count(theta, s);
}

DegreeBound d_of(std::int64_t w, std::int64_t n, const PartTuple& a) {
  const auto s = static_cast<std::int64_t>(a.size()) - 1;
  if (!in_P(s, n, a)) throw DomainError(to_string(a) + " is not a strictly increasing positive composition of " + std::to_string(n));
  const std::int64_t theta = w - wt(n, a);
  if (theta < 1) throw DomainError("w must exceed wt(n, a) = " + std::to_string(w - theta));
  const std::int64_t m = a.front();
  const std::int64_t ceil_q = (theta + m - 1) / m;
  DegreeBound d;
  if (m == 1 || theta == 1) d.formula = n - 1 + theta;
  else d.formula = n - m + 1 + ceil_q;
  d.value = n - m + std::min(1 + ceil_q, theta);
  d.formula_discrepancy = d.value != d.formula;
  return d;
}

std::vector<std::vector<std::int64_t>> compositions(std::int64_t theta, std::int64_t s) {
  if (theta < 0 || s < 1) throw DomainError("compositions need theta >= 0 and s >= 1");
  if (s == 1) return {{theta}};
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t last = 0; last <= theta; ++last) {
    for (auto& prefix : compositions(theta - last, s - 1)) {
      prefix.push_back(last);
      out.push_back(std::move(prefix));
    }
  }
  return out;
}

}  // namespace symgraph
