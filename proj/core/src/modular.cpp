#include "symgraph/modular.hpp"

#include <algorithm>

#include "symgraph/errors.hpp"

namespace symgraph {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1U) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1U;
  }
  return r;
}

constexpr std::uint64_t kPrimeListSeed = 0x73796d6772617068ULL;  // "symgraph"
constexpr std::size_t kPrimeListSize = 16;

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1U) == 0) {
    d >>= 1U;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

PrimeModulus::PrimeModulus(std::uint64_t p) : p_(p) {
  if (p >= (1ULL << 63) || !is_prime_u64(p)) {
    throw DomainError("modulus " + std::to_string(p) + " is not a prime below 2^63");
  }
}

std::uint64_t PrimeModulus::pow(std::uint64_t a, std::uint64_t e) const { return powmod(a, e, p_); }

std::uint64_t PrimeModulus::inverse(std::uint64_t a) const {
  if (a % p_ == 0) throw DomainError("zero has no modular inverse");
  return powmod(a, p_ - 2, p_);
}

const std::vector<std::uint64_t>& witness_primes() {
  static const std::vector<std::uint64_t> primes = [] {
    std::vector<std::uint64_t> out;
    std::mt19937_64 gen(kPrimeListSeed);
    while (out.size() < kPrimeListSize) {
      const std::uint64_t candidate = (1ULL << 61) | (gen() & ((1ULL << 61) - 1)) | 1ULL;
      if (is_prime_u64(candidate) && std::find(out.begin(), out.end(), candidate) == out.end()) {
        out.push_back(candidate);
      }
    }
    return out;
  }();
  return primes;
}

PrimeModulus auto_modulus(std::uint64_t seed) {
  const auto& primes = witness_primes();
  return PrimeModulus(primes[seed % primes.size()]);
}

std::vector<std::uint64_t> SeededRng::distinct(std::size_t k, std::uint64_t lo, std::uint64_t hi) {
  if (hi < lo || hi - lo + 1 < k) throw DomainError("sample range too small for distinct draws");
  std::vector<std::uint64_t> out;
  out.reserve(k);
  while (out.size() < k) {
    const auto x = between(lo, hi);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

}  // namespace symgraph
