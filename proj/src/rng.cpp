#include "helios/rng.hpp"

#include <random>
#include <string>
#include <vector>

#include "helios/encoding.hpp"
#include "helios/errors.hpp"

namespace helios {

namespace {

void append_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

}  // namespace

Rng::Rng(std::uint64_t seed) {
  std::vector<std::uint8_t> material{'s', 'e', 'e', 'd'};
  append_u64(material, seed);
  key_ = sha256(material);
}

Rng Rng::from_entropy() {
  std::random_device device;
  std::array<std::uint8_t, 32> key{};
  for (std::size_t i = 0; i < key.size(); i += 4) {
    auto word = device();
    for (std::size_t j = 0; j < 4; ++j) key[i + j] = static_cast<std::uint8_t>(word >> (8 * j));
  }
  return Rng(key);
}

Rng Rng::derive(std::string_view label) const {
  std::vector<std::uint8_t> material(key_.begin(), key_.end());
  material.insert(material.end(), {'d', 'e', 'r', 'i', 'v', 'e', '|'});
  material.insert(material.end(), label.begin(), label.end());
  return Rng(sha256(material));
}

Rng Rng::derive(std::string_view label, std::uint64_t index) const {
  return derive(std::string(label) + "|" + std::to_string(index));
}

void Rng::refill() {
  std::vector<std::uint8_t> material(key_.begin(), key_.end());
  append_u64(material, counter_++);
  block_ = sha256(material);
  used_ = 0;
}

void Rng::fill(std::span<std::uint8_t> out) {
  for (auto& byte : out) {
    if (used_ == block_.size()) refill();
    byte = block_[used_++];
  }
}

std::uint64_t Rng::next_u64() {
  std::array<std::uint8_t, 8> bytes{};
  fill(bytes);
  std::uint64_t v = 0;
  for (auto b : bytes) v = (v << 8) | b;
  return v;
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw InvalidArgument("Rng::below: empty range");
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  while (true) {
    auto v = next_u64();
    if (v <= limit) return v % bound;
  }
}

mpz_class Rng::below(const mpz_class& bound) {
  if (sgn(bound) <= 0) throw InvalidArgument("Rng::below: empty range");
  const std::size_t bits = mpz_sizeinbase(bound.get_mpz_t(), 2);
  const std::size_t nbytes = (bits + 7) / 8;
  const unsigned top_bits = static_cast<unsigned>(bits - 8 * (nbytes - 1));
  const auto top_mask = static_cast<std::uint8_t>((1u << top_bits) - 1);
  std::vector<std::uint8_t> buf(nbytes);
  mpz_class candidate;
  while (true) {
    fill(buf);
    buf[0] &= top_mask;
    mpz_import(candidate.get_mpz_t(), buf.size(), 1, 1, 1, 0, buf.data());
    if (candidate < bound) return candidate;
  }
}

}  // namespace helios
