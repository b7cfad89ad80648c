#pragma once

// Test-only helpers: plain 64-bit arithmetic oracles and fixtures.

#include <cstdint>
#include <string>

#include <doctest.h>
#include <openssl/sha.h>

#include "helios/election.hpp"

namespace helios::testing {

// Square-and-multiply on machine words; valid for moduli below 2^32.
inline std::uint64_t modpow(std::uint64_t base, std::uint64_t exp, std::uint64_t mod) {
  std::uint64_t result = 1 % mod;
  base %= mod;
  while (exp > 0) {
    if (exp & 1) result = result * base % mod;
    base = base * base % mod;
    exp >>= 1;
  }
  return result;
}

inline GroupParams test_group() { return GroupParams::generate(SecurityLevel::test); }
inline GroupParams small_group() { return GroupParams::generate(SecurityLevel::small); }

inline Election make_election(const std::string& preset, int choices, std::uint64_t seed,
                              SecurityLevel level = SecurityLevel::small) {
  Rng rng(seed);
  return setup(GroupParams::generate(level), choices, SchemeConfig::preset(preset), rng);
}

// SHA-256 through the one-shot OpenSSL API, read as a big-endian integer mod q.
inline mpz_class reference_challenge(const std::string& input, const mpz_class& q) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(input.data()), input.size(), digest);
  mpz_class h;
  mpz_import(h.get_mpz_t(), sizeof digest, 1, 1, 1, 0, digest);
  return h % q;
}

inline std::int64_t decrypt_small(const Election& e, const Ciphertext& c, std::int64_t bound) {
  return decrypt(e.spec.params, e.sk, c, bound);
}

}  // namespace helios::testing
