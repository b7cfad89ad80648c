#include "helios/group.hpp"

#include <string>

#include "helios/errors.hpp"

namespace helios {

namespace {

constexpr const char* kSmallP =
    "96712504193362842764831188266368743264568062658986234626765624594868521450983";

constexpr const char* kStandardP =
    "323170060713110073003389139264238282488179412411402391128420097514007417066343542226196894173635"
    "693471179017379097041917546058732091950288537589861856221532121754125149017745202702357960782362"
    "488842461894775876411059286460994117232454266225221932305409190376805242355191256797158701170010"
    "580558776510388618472802579760549035697325615261670813393617995413364765591603683178967290731783"
    "845896806396719009772021941686472258710314113364293195361934716365332097170774482279885885653692"
    "086452966360772502689555059283627511211740969729980684105543595848665832916421362182310789909994"
    "48652468262416972035911852507045361090559";

GroupParams safe_prime_group(const char* p_decimal) {
  GroupParams params;
  params.p = mpz_class(p_decimal, 10);
  params.q = (params.p - 1) / 2;
  params.g = 4;
  return params;
}

}  // namespace

SecurityLevel parse_security_level(std::string_view name) {
  if (name == "test") return SecurityLevel::test;
  if (name == "small") return SecurityLevel::small;
  if (name == "standard") return SecurityLevel::standard;
  throw InvalidArgument("unknown group '" + std::string(name) + "' (expected test, small or standard)");
}

std::string_view to_string(SecurityLevel level) {
  switch (level) {
    case SecurityLevel::test: return "test";
    case SecurityLevel::small: return "small";
    case SecurityLevel::standard: return "standard";
  }
  return "?";
}

GroupParams GroupParams::generate(SecurityLevel level) {
  switch (level) {
    case SecurityLevel::test: return GroupParams{23, 11, 4};
    case SecurityLevel::small: return safe_prime_group(kSmallP);
    case SecurityLevel::standard: return safe_prime_group(kStandardP);
  }
  throw InvalidArgument("unknown security level");
}

void GroupParams::validate() const {
  if (p <= 3 || q <= 1) throw InvalidParams("modulus too small");
  if (mpz_probab_prime_p(p.get_mpz_t(), 32) == 0) throw InvalidParams("p is not prime");
  if (mpz_probab_prime_p(q.get_mpz_t(), 32) == 0) throw InvalidParams("q is not prime");
  if (mpz_divisible_p(mpz_class(p - 1).get_mpz_t(), q.get_mpz_t()) == 0) {
    throw InvalidParams("q does not divide p - 1");
  }
  if (g <= 1 || g >= p) throw InvalidParams("generator must lie in (1, p)");
  mpz_class t;
  mpz_powm(t.get_mpz_t(), g.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  if (t != 1) throw InvalidParams("g does not generate the order-q subgroup");
}

bool GroupParams::is_valid() const noexcept {
  try {
    validate();
    return true;
  } catch (const InvalidParams&) {
    return false;
  }
}

bool GroupParams::is_member(const GroupElement& x) const {
  if (x.value < 1 || x.value >= p) return false;
  mpz_class t;
  mpz_powm(t.get_mpz_t(), x.value.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
  return t == 1;
}

GroupElement GroupParams::element(const mpz_class& value) const {
  GroupElement x{value};
  if (!is_member(x)) throw InvalidArgument("value is not a subgroup element");
  return x;
}

GroupElement GroupParams::pow(const GroupElement& base, const Scalar& e) const {
  GroupElement out;
  mpz_powm(out.value.get_mpz_t(), base.value.get_mpz_t(), e.value.get_mpz_t(), p.get_mpz_t());
  return out;
}

GroupElement GroupParams::mul(const GroupElement& x, const GroupElement& y) const {
  GroupElement out{x.value * y.value};
  mpz_mod(out.value.get_mpz_t(), out.value.get_mpz_t(), p.get_mpz_t());
  return out;
}

GroupElement GroupParams::inv(const GroupElement& x) const {
  GroupElement out;
  if (mpz_invert(out.value.get_mpz_t(), x.value.get_mpz_t(), p.get_mpz_t()) == 0) {
    throw InvalidArgument("element is not invertible");
  }
  return out;
}

Scalar GroupParams::scalar(const mpz_class& v) const {
  Scalar out;
  mpz_mod(out.value.get_mpz_t(), v.get_mpz_t(), q.get_mpz_t());
  return out;
}

Scalar GroupParams::inv(const Scalar& x) const {
  Scalar out;
  if (mpz_invert(out.value.get_mpz_t(), x.value.get_mpz_t(), q.get_mpz_t()) == 0) {
    throw InvalidArgument("scalar is not invertible");
  }
  return out;
}

Scalar GroupParams::random_nonzero_scalar(Rng& rng) const {
  return Scalar{rng.below(mpz_class(q - 1)) + 1};
}

}  // namespace helios
