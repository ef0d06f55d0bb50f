#pragma once

#include <array>
#include <cstdint>

namespace linecast {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11). Each
/// (key, counter) pair maps to four independent 32-bit words with no
/// internal state, so any draw can be computed from its coordinates alone.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  explicit constexpr Philox4x32(Key key) : key_(key) {}
  explicit constexpr Philox4x32(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  Counter operator()(Counter counter) const noexcept;

 private:
  Key key_;
};

/// Uniform double in [0, 1) with 53 random bits for draw `game` of
/// replication `replication` under `seed`.
double uniform_at(std::uint64_t seed, std::uint64_t replication, std::uint32_t game) noexcept;

}  // namespace linecast
