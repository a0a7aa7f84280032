#pragma once

#include <cstdint>

namespace domset {

inline constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

/// Per-node random tag in the open interval (0,1), derived only from
/// (seed, id). Every execution mode and every schedule sees the same
/// tag stream, which is what makes runs reproducible bit for bit.
inline double node_tag(std::uint64_t seed, std::uint64_t id) {
  const std::uint64_t h =
      splitmix64(splitmix64(seed) ^ (0x9e3779b97f4a7c15ull * (id + 1)));
  // 53-bit value mapped to (h53 + 1) / (2^53 + 1), strictly inside (0,1).
  return static_cast<double>((h >> 11) + 1) * (1.0 / 9007199254740993.0);
}

/// Small deterministic generator for instance generation and tests.
/// splitmix64 stream; stable across platforms, unlike std:: distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  /// Uniform in [0,1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform in [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

 private:
  std::uint64_t state_;
};

}  // namespace domset
