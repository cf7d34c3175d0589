#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace symgraph {

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(std::uint64_t n);

// Arithmetic modulo a prime below 2^63.
class PrimeModulus {
 public:
  // Throws DomainError unless p is a prime below 2^63.
  explicit PrimeModulus(std::uint64_t p);

  std::uint64_t value() const { return p_; }

  std::uint64_t reduce(std::int64_t x) const {
    const auto r = x % static_cast<std::int64_t>(p_);
    return static_cast<std::uint64_t>(r < 0 ? r + static_cast<std::int64_t>(p_) : r);
  }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p_);
  }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t inverse(std::uint64_t a) const;

  friend bool operator==(const PrimeModulus&, const PrimeModulus&) = default;

 private:
  std::uint64_t p_;
};

// Fixed list of 62-bit primes (in [2^61, 2^62)) drawn from a seeded generator;
// identical on every platform.
const std::vector<std::uint64_t>& witness_primes();

// The modulus used for a seeded run when the caller asks for "auto".
PrimeModulus auto_modulus(std::uint64_t seed);

// Portable seeded generator: the mt19937_64 stream is fixed by the standard,
// and bounded draws use plain modular reduction so results do not depend on
// the standard library's distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  std::uint64_t next() { return engine_(); }
  // Uniform-ish draw from [lo, hi].
  std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + engine_() % (hi - lo + 1); }
  std::int64_t between_signed(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  // k distinct values from [lo, hi], in draw order.
  std::vector<std::uint64_t> distinct(std::size_t k, std::uint64_t lo, std::uint64_t hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace symgraph
