#pragma once

#include <cstdint>
#include <random>

namespace meyer {

// splitmix64 finalizer; used to derive independent per-case seeds.
inline std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix64(std::uint64_t a, std::uint64_t b) {
  return mix64(a ^ mix64(b));
}

// Deterministic generator: mt19937_64 output is pinned by the standard, and
// the int reduction below avoids std::uniform_int_distribution, whose
// results vary across standard library implementations. A given seed thus
// yields the same stream on every platform.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  // Uniform-ish integer in [lo, hi]; requires lo <= hi.
  long long next_int(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(engine_() % span);
  }

  // Nonzero integer in [-bound, bound], bound >= 1.
  long long next_nonzero(long long bound) {
    const long long v = next_int(1, 2 * bound);
    return v <= bound ? v : bound - v;  // 1..b, then -1..-b
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace meyer
