#include "helios/elgamal.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

#include "helios/errors.hpp"

namespace helios {

namespace {

constexpr std::int64_t kLinearScanLimit = 2048;

std::int64_t linear_dlog(const GroupParams& params, const GroupElement& target, std::int64_t max_m) {
  GroupElement acc = params.identity();
  const auto g = params.generator();
  for (std::int64_t m = 0; m <= max_m; ++m) {
    if (acc == target) return m;
    acc = params.mul(acc, g);
  }
  throw DlogOutOfRange("no plaintext in [0, " + std::to_string(max_m) + "]");
}

std::int64_t bsgs_dlog(const GroupParams& params, const GroupElement& target, std::int64_t max_m) {
  const auto step = static_cast<std::int64_t>(std::ceil(std::sqrt(static_cast<double>(max_m + 1))));
  std::unordered_map<std::string, std::int64_t> baby;
  baby.reserve(static_cast<std::size_t>(step));
  GroupElement acc = params.identity();
  for (std::int64_t j = 0; j < step; ++j) {
    baby.emplace(acc.value.get_str(16), j);  // keep the smallest j
    acc = params.mul(acc, params.generator());
  }
  // giant = g^-step
  const auto giant = params.inv(params.gen_pow(params.scalar(step)));
  GroupElement gamma = target;
  for (std::int64_t i = 0; i * step <= max_m; ++i) {
    if (auto it = baby.find(gamma.value.get_str(16)); it != baby.end()) {
      const auto m = i * step + it->second;
      if (m <= max_m) return m;
    }
    gamma = params.mul(gamma, giant);
  }
  throw DlogOutOfRange("no plaintext in [0, " + std::to_string(max_m) + "]");
}

}  // namespace

KeyPair KeyPair::from_secret(const GroupParams& params, const Scalar& sk) {
  return KeyPair{sk, params.gen_pow(sk)};
}

KeyPair keygen(const GroupParams& params, Rng& rng) {
  return KeyPair::from_secret(params, params.random_nonzero_scalar(rng));
}

Ciphertext encrypt(const GroupParams& params, const GroupElement& pk, std::int64_t m, const Scalar& r) {
  if (m < 0 || mpz_class(static_cast<long>(m)) >= params.q) {
    throw InvalidArgument("plaintext " + std::to_string(m) + " outside [0, q)");
  }
  return Ciphertext{params.gen_pow(r), params.mul(params.pow(pk, r), params.gen_pow(params.scalar(m)))};
}

Ciphertext hom_add(const GroupParams& params, const Ciphertext& x, const Ciphertext& y) {
  return Ciphertext{params.mul(x.a, y.a), params.mul(x.b, y.b)};
}

Ciphertext hom_sum(const GroupParams& params, std::span<const Ciphertext> cs) {
  Ciphertext acc{params.identity(), params.identity()};
  for (const auto& c : cs) acc = hom_add(params, acc, c);
  return acc;
}

Ciphertext reencrypt(const GroupParams& params, const GroupElement& pk, const Ciphertext& c, const Scalar& r2) {
  return hom_add(params, c, encrypt(params, pk, 0, r2));
}

bool is_well_formed(const GroupParams& params, const Ciphertext& c) {
  return params.is_member(c.a) && params.is_member(c.b);
}

GroupElement decryption_factor(const GroupParams& params, const Scalar& sk, const Ciphertext& c) {
  return params.pow(c.a, sk);
}

std::int64_t discrete_log(const GroupParams& params, const GroupElement& target, std::int64_t max_m) {
  if (max_m < 0) throw InvalidArgument("dlog bound must be non-negative");
  if (max_m <= kLinearScanLimit) return linear_dlog(params, target, max_m);
  return bsgs_dlog(params, target, max_m);
}

std::int64_t decrypt(const GroupParams& params, const Scalar& sk, const Ciphertext& c, std::int64_t max_m) {
  const auto gm = params.div(c.b, decryption_factor(params, sk, c));
  return discrete_log(params, gm, max_m);
}

}  // namespace helios
