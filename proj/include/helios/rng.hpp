#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>

#include <gmpxx.h>

namespace helios {

/// Deterministic random stream: SHA-256 in counter mode over a 32-byte key.
///
/// Every randomized operation takes an Rng explicitly. A seed expands into
/// independent per-component streams through derive(), so a fixed seed
/// reproduces a whole run bit for bit on any platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);
  static Rng from_entropy();

  Rng derive(std::string_view label) const;
  Rng derive(std::string_view label, std::uint64_t index) const;

  void fill(std::span<std::uint8_t> out);
  std::uint64_t next_u64();
  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  mpz_class below(const mpz_class& bound);
  bool bit() { return (next_u64() & 1) != 0; }

 private:
  explicit Rng(const std::array<std::uint8_t, 32>& key) : key_(key) {}
  void refill();

  std::array<std::uint8_t, 32> key_{};
  std::uint64_t counter_ = 0;
  std::array<std::uint8_t, 32> block_{};
  std::size_t used_ = 32;
};

}  // namespace helios
