#pragma once

// Prime-order subgroup of Z_p^* and its scalar field Z_q.

#include <cstdint>
#include <string_view>

#include <gmpxx.h>

#include "helios/rng.hpp"

namespace helios {

struct Scalar {
  mpz_class value;

  friend bool operator==(const Scalar& x, const Scalar& y) { return x.value == y.value; }
};

struct GroupElement {
  mpz_class value;

  friend bool operator==(const GroupElement& x, const GroupElement& y) { return x.value == y.value; }
};

enum class SecurityLevel {
  test,      // p = 23, q = 11, g = 4; hand-checkable unit examples
  small,     // 256-bit safe prime; fast enough for statistical game runs
  standard,  // RFC 3526 2048-bit MODP group
};

SecurityLevel parse_security_level(std::string_view name);
std::string_view to_string(SecurityLevel level);

struct GroupParams {
  mpz_class p;
  mpz_class q;
  mpz_class g;

  /// Fixed published constants for the given level. Never generated at runtime.
  static GroupParams generate(SecurityLevel level);

  /// Throws InvalidParams unless p, q are (probable) primes, q | p - 1,
  /// g != 1 and g^q = 1 mod p.
  void validate() const;
  bool is_valid() const noexcept;

  bool is_member(const GroupElement& x) const;
  bool is_scalar(const Scalar& s) const { return sgn(s.value) >= 0 && s.value < q; }

  GroupElement generator() const { return GroupElement{g}; }
  GroupElement identity() const { return GroupElement{1}; }
  /// Wraps a raw residue, throwing InvalidArgument if it is not a subgroup member.
  GroupElement element(const mpz_class& value) const;

  GroupElement pow(const GroupElement& base, const Scalar& e) const;
  GroupElement gen_pow(const Scalar& e) const { return pow(generator(), e); }
  GroupElement mul(const GroupElement& x, const GroupElement& y) const;
  GroupElement inv(const GroupElement& x) const;
  GroupElement div(const GroupElement& x, const GroupElement& y) const { return mul(x, inv(y)); }

  /// Reduction of an arbitrary (possibly negative) integer into Z_q.
  Scalar scalar(const mpz_class& v) const;
  Scalar scalar(std::int64_t v) const { return scalar(mpz_class(static_cast<long>(v))); }
  Scalar add(const Scalar& x, const Scalar& y) const { return scalar(x.value + y.value); }
  Scalar sub(const Scalar& x, const Scalar& y) const { return scalar(x.value - y.value); }
  Scalar mul(const Scalar& x, const Scalar& y) const { return scalar(x.value * y.value); }
  Scalar neg(const Scalar& x) const { return scalar(-x.value); }
  /// Multiplicative inverse in Z_q; x must be nonzero.
  Scalar inv(const Scalar& x) const;

  Scalar random_scalar(Rng& rng) const { return Scalar{rng.below(q)}; }
  Scalar random_nonzero_scalar(Rng& rng) const;

  friend bool operator==(const GroupParams& x, const GroupParams& y) {
    return x.p == y.p && x.q == y.q && x.g == y.g;
  }
};

}  // namespace helios
