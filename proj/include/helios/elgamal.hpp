#pragma once

// Exponential ElGamal: Enc(m; r) = (g^r, pk^r * g^m). Plaintexts add under
// component-wise multiplication, which is what the homomorphic tally needs.

#include <cstdint>
#include <span>

#include "helios/group.hpp"
#include "helios/rng.hpp"

namespace helios {

struct KeyPair {
  Scalar sk;
  GroupElement pk;

  /// Deterministic construction from a chosen secret (also a test hook: sk = 0 gives pk = 1).
  static KeyPair from_secret(const GroupParams& params, const Scalar& sk);
};

/// sk uniform in [1, q).
KeyPair keygen(const GroupParams& params, Rng& rng);

struct Ciphertext {
  GroupElement a;  // g^r
  GroupElement b;  // pk^r * g^m

  friend bool operator==(const Ciphertext& x, const Ciphertext& y) { return x.a == y.a && x.b == y.b; }
};

/// Requires 0 <= m < q. Randomness is always supplied by the caller.
Ciphertext encrypt(const GroupParams& params, const GroupElement& pk, std::int64_t m, const Scalar& r);

Ciphertext hom_add(const GroupParams& params, const Ciphertext& x, const Ciphertext& y);
/// Fold of hom_add; the empty sum is (1, 1).
Ciphertext hom_sum(const GroupParams& params, std::span<const Ciphertext> cs);
Ciphertext reencrypt(const GroupParams& params, const GroupElement& pk, const Ciphertext& c, const Scalar& r2);

bool is_well_formed(const GroupParams& params, const Ciphertext& c);

/// a^sk, the value a decryption proof is about.
GroupElement decryption_factor(const GroupParams& params, const Scalar& sk, const Ciphertext& c);

/// Smallest m in [0, max_m] with g^m = target; throws DlogOutOfRange otherwise.
/// Linear scan up to 2048, baby-step/giant-step above.
std::int64_t discrete_log(const GroupParams& params, const GroupElement& target, std::int64_t max_m);

std::int64_t decrypt(const GroupParams& params, const Scalar& sk, const Ciphertext& c, std::int64_t max_m);

}  // namespace helios
