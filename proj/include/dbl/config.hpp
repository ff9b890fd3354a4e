#pragma once

#include <cstdint>
#include <cstdlib>

namespace dbl {

// Runtime limits and the deterministic seed used by every randomised
// search (meataxe, idempotent splitting).  The seed can be overridden
// with the DBL_SEED environment variable; everything else is fixed at
// construction time by the caller.
struct Config {
  std::uint64_t seed = kDefaultSeed;
  std::size_t element_cap = 1'000'000;   // group enumeration
  std::size_t dim_cap = 10'000;          // module dimension
  std::size_t centralizer_cap = 200'000; // brute-force element filtering
  std::size_t dixon_order_cap = 5'000;   // character table computations
  std::size_t dixon_prime_cap = 10'000'000;

  static constexpr std::uint64_t kDefaultSeed = 0x5C077;

  static Config from_env() {
    Config c;
    if (const char* s = std::getenv("DBL_SEED")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(s, &end, 0);
      if (end && *end == '\0') c.seed = v;
    }
    return c;
  }
};

// Deterministic xorshift-style generator (splitmix64).  All randomised
// algorithms in the library draw from an explicitly threaded instance.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = Config::kDefaultSeed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform value in [0, n).
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }

 private:
  std::uint64_t state_;
};

}  // namespace dbl
