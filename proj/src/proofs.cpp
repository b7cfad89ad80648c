#include "helios/proofs.hpp"

#include <string>

#include "helios/encoding.hpp"
#include "helios/errors.hpp"
#include "helios/serialize.hpp"

namespace helios {

FsMode parse_fs_mode(std::string_view name) {
  if (name == "weak") return FsMode::weak;
  if (name == "strong") return FsMode::strong;
  throw InvalidArgument("unknown Fiat-Shamir mode '" + std::string(name) + "'");
}

std::string_view to_string(FsMode mode) { return mode == FsMode::weak ? "weak" : "strong"; }

std::string challenge_input(FsMode mode, const ChallengeContext& ctx) {
  if (mode == FsMode::weak) return ctx.commitments;
  TokenWriter w(ctx.domain);
  w.put(ctx.statement);
  w.put(ctx.commitments);
  return w.str();
}

Scalar fs_challenge(const GroupParams& params, FsMode mode, const ChallengeContext& ctx) {
  const auto digest = sha256(challenge_input(mode, ctx));
  mpz_class h;
  mpz_import(h.get_mpz_t(), digest.size(), 1, 1, 1, 0, digest.data());
  return params.scalar(h);
}

namespace {

TokenWriter statement_prefix(const GroupParams& params, const GroupElement& pk) {
  TokenWriter w;
  put(w, params);
  w.put("pk").put(pk.value);
  return w;
}

bool all_members(const GroupParams& params, std::initializer_list<const GroupElement*> xs) {
  for (const auto* x : xs) {
    if (!params.is_member(*x)) return false;
  }
  return true;
}

ChallengeContext key_context(const GroupParams& params, const GroupElement& pk, const GroupElement& commitment) {
  TokenWriter commit("commit");
  commit.put(commitment.value);
  return ChallengeContext{std::string(domain::kKey), statement_prefix(params, pk).str(), commit.str()};
}

ChallengeContext dec_context(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
                             const GroupElement& factor, const GroupElement& commit_a, const GroupElement& commit_b) {
  auto statement = statement_prefix(params, pk);
  put(statement, c);
  statement.put("factor").put(factor.value);
  TokenWriter commit("commit");
  commit.put(commit_a.value).put(commit_b.value);
  return ChallengeContext{std::string(domain::kDecryption), statement.str(), commit.str()};
}

// b / g^m
GroupElement shifted(const GroupParams& params, const Ciphertext& c, std::int64_t m) {
  return params.div(c.b, params.gen_pow(params.scalar(m)));
}

}  // namespace

// ---------------------------------------------------------------------------

SchnorrProof prove_key(const GroupParams& params, const KeyPair& kp, FsMode mode, Rng& rng) {
  const auto w = params.random_scalar(rng);
  SchnorrProof proof;
  proof.commitment = params.gen_pow(w);
  proof.challenge = fs_challenge(params, mode, key_context(params, kp.pk, proof.commitment));
  proof.response = params.add(w, params.mul(proof.challenge, kp.sk));
  return proof;
}

bool verify_key(const GroupParams& params, const GroupElement& pk, const SchnorrProof& proof, FsMode mode) {
  if (!all_members(params, {&pk, &proof.commitment})) return false;
  if (!params.is_scalar(proof.challenge) || !params.is_scalar(proof.response)) return false;
  if (proof.challenge != fs_challenge(params, mode, key_context(params, pk, proof.commitment))) return false;
  return params.gen_pow(proof.response) == params.mul(proof.commitment, params.pow(pk, proof.challenge));
}

// ---------------------------------------------------------------------------

DecryptionProof prove_dec(const GroupParams& params, const KeyPair& kp, const Ciphertext& c, FsMode mode, Rng& rng) {
  DecryptionProof out;
  out.factor = decryption_factor(params, kp.sk, c);
  const auto w = params.random_scalar(rng);
  out.proof.commit_a = params.gen_pow(w);
  out.proof.commit_b = params.pow(c.a, w);
  out.proof.challenge =
      fs_challenge(params, mode, dec_context(params, kp.pk, c, out.factor, out.proof.commit_a, out.proof.commit_b));
  out.proof.response = params.add(w, params.mul(out.proof.challenge, kp.sk));
  return out;
}

bool verify_dec(const GroupParams& params, const GroupElement& pk, const Ciphertext& c, const GroupElement& factor,
                const EqDlogProof& proof, FsMode mode) {
  if (!all_members(params, {&pk, &c.a, &c.b, &factor, &proof.commit_a, &proof.commit_b})) return false;
  if (!params.is_scalar(proof.challenge) || !params.is_scalar(proof.response)) return false;
  const auto expected = fs_challenge(params, mode, dec_context(params, pk, c, factor, proof.commit_a, proof.commit_b));
  if (proof.challenge != expected) return false;
  return params.gen_pow(proof.response) == params.mul(proof.commit_a, params.pow(pk, proof.challenge)) &&
         params.pow(c.a, proof.response) == params.mul(proof.commit_b, params.pow(factor, proof.challenge));
}

// ---------------------------------------------------------------------------

std::string commitment_tokens(const DisjunctiveProof& proof) {
  TokenWriter w("clauses");
  w.put_count(proof.clauses.size());
  for (const auto& clause : proof.clauses) w.put(clause.commit_a.value).put(clause.commit_b.value);
  return w.str();
}

ChallengeContext disjunction_context(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
                                     std::string_view domain_tag, std::int64_t qualifier,
                                     const DisjunctiveProof& commitments) {
  auto statement = statement_prefix(params, pk);
  put(statement, c);
  statement.put("index").put(qualifier);
  return ChallengeContext{std::string(domain_tag), statement.str(), commitment_tokens(commitments)};
}

Scalar challenge_sum(const GroupParams& params, const DisjunctiveProof& proof) {
  Scalar total{0};
  for (const auto& clause : proof.clauses) total = params.add(total, clause.challenge);
  return total;
}

DisjunctiveProof prove_disjunction(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
                                   std::span<const std::int64_t> plaintexts, std::size_t true_index,
                                   const Scalar& r, std::string_view domain_tag, std::int64_t qualifier,
                                   FsMode mode, Rng& rng) {
  if (true_index >= plaintexts.size()) throw InvalidArgument("true clause index out of range");
  DisjunctiveProof proof;
  proof.clauses.resize(plaintexts.size());
  const auto w = params.random_scalar(rng);
  for (std::size_t j = 0; j < plaintexts.size(); ++j) {
    auto& clause = proof.clauses[j];
    if (j == true_index) {
      clause.commit_a = params.gen_pow(w);
      clause.commit_b = params.pow(pk, w);
      continue;
    }
    // Simulated clause: pick challenge and response, solve for the commitments.
    clause.challenge = params.random_scalar(rng);
    clause.response = params.random_scalar(rng);
    const auto minus_c = params.neg(clause.challenge);
    clause.commit_a = params.mul(params.gen_pow(clause.response), params.pow(c.a, minus_c));
    clause.commit_b =
        params.mul(params.pow(pk, clause.response), params.pow(shifted(params, c, plaintexts[j]), minus_c));
  }
  const auto total = fs_challenge(params, mode, disjunction_context(params, pk, c, domain_tag, qualifier, proof));
  auto& real = proof.clauses[true_index];
  real.challenge = total;
  for (std::size_t j = 0; j < plaintexts.size(); ++j) {
    if (j != true_index) real.challenge = params.sub(real.challenge, proof.clauses[j].challenge);
  }
  real.response = params.add(w, params.mul(real.challenge, r));
  return proof;
}

bool verify_disjunction(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
                        std::span<const std::int64_t> plaintexts, const DisjunctiveProof& proof,
                        std::string_view domain_tag, std::int64_t qualifier, FsMode mode) {
  if (proof.clauses.size() != plaintexts.size() || plaintexts.empty()) return false;
  if (!all_members(params, {&pk, &c.a, &c.b})) return false;
  for (const auto& clause : proof.clauses) {
    if (!all_members(params, {&clause.commit_a, &clause.commit_b})) return false;
    if (!params.is_scalar(clause.challenge) || !params.is_scalar(clause.response)) return false;
  }
  const auto total = fs_challenge(params, mode, disjunction_context(params, pk, c, domain_tag, qualifier, proof));
  if (challenge_sum(params, proof) != total) return false;
  for (std::size_t j = 0; j < plaintexts.size(); ++j) {
    const auto& clause = proof.clauses[j];
    if (params.gen_pow(clause.response) != params.mul(clause.commit_a, params.pow(c.a, clause.challenge))) {
      return false;
    }
    if (params.pow(pk, clause.response) !=
        params.mul(clause.commit_b, params.pow(shifted(params, c, plaintexts[j]), clause.challenge))) {
      return false;
    }
  }
  return true;
}

namespace {

constexpr std::int64_t kZeroOne[] = {0, 1};

std::vector<std::int64_t> choice_range(std::int64_t choices) {
  std::vector<std::int64_t> out;
  for (std::int64_t v = 1; v <= choices; ++v) out.push_back(v);
  return out;
}

}  // namespace

DisjunctiveProof prove_01(const GroupParams& params, const GroupElement& pk, const Ciphertext& c, int m,
                          const Scalar& r, std::size_t column, FsMode mode, Rng& rng) {
  if (m != 0 && m != 1) throw InvalidArgument("0/1 proof needs m in {0, 1}");
  return prove_disjunction(params, pk, c, kZeroOne, static_cast<std::size_t>(m), r, domain::kBallotClause,
                           static_cast<std::int64_t>(column), mode, rng);
}

bool verify_01(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
               const DisjunctiveProof& proof, std::size_t column, FsMode mode) {
  return verify_disjunction(params, pk, c, kZeroOne, proof, domain::kBallotClause,
                            static_cast<std::int64_t>(column), mode);
}

DisjunctiveProof prove_sum_01(const GroupParams& params, const GroupElement& pk, std::span<const Ciphertext> cs,
                              std::span<const Scalar> rs, int total, FsMode mode, Rng& rng) {
  if (total != 0 && total != 1) throw InvalidArgument("sum proof needs total in {0, 1}");
  if (cs.size() != rs.size()) throw InvalidArgument("one randomness value per ciphertext");
  Scalar r{0};
  for (const auto& ri : rs) r = params.add(r, ri);
  return prove_disjunction(params, pk, hom_sum(params, cs), kZeroOne, static_cast<std::size_t>(total), r,
                           domain::kBallotSum, 0, mode, rng);
}

bool verify_sum_01(const GroupParams& params, const GroupElement& pk, std::span<const Ciphertext> cs,
                   const DisjunctiveProof& proof, FsMode mode) {
  return verify_disjunction(params, pk, hom_sum(params, cs), kZeroOne, proof, domain::kBallotSum, 0, mode);
}

DisjunctiveProof prove_choice(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
                              std::int64_t v, std::int64_t choices, const Scalar& r, FsMode mode, Rng& rng) {
  if (v < 1 || v > choices) throw InvalidArgument("choice outside [1, choices]");
  const auto range = choice_range(choices);
  return prove_disjunction(params, pk, c, range, static_cast<std::size_t>(v - 1), r, domain::kBallotChoice, choices,
                           mode, rng);
}

bool verify_choice(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
                   const DisjunctiveProof& proof, std::int64_t choices, FsMode mode) {
  if (choices < 1) return false;
  const auto range = choice_range(choices);
  return verify_disjunction(params, pk, c, range, proof, domain::kBallotChoice, choices, mode);
}

}  // namespace helios
