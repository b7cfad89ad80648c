#include "helios/attacks.hpp"

#include "helios/errors.hpp"

namespace helios {

namespace {

void shift_responses(const GroupParams& params, DisjunctiveProof& proof, const Scalar& delta) {
  for (auto& clause : proof.clauses) clause.response = params.add(clause.response, params.mul(clause.challenge, delta));
}

}  // namespace

Ballot reencrypt_keeping_proofs(const ElectionSpec& spec, const Ballot& b, Rng& rng) {
  const auto& params = spec.params;
  Ballot out = b;
  Scalar total{0};
  for (std::size_t i = 0; i < out.ciphertexts.size(); ++i) {
    const auto r = params.random_nonzero_scalar(rng);
    out.ciphertexts[i] = reencrypt(params, spec.pk, out.ciphertexts[i], r);
    if (i < out.clause_proofs.size()) shift_responses(params, out.clause_proofs[i], r);
    total = params.add(total, r);
  }
  if (out.sum_proof) shift_responses(params, *out.sum_proof, total);
  return out;
}

Ballot malleate_ballot(const ElectionSpec& spec, const Ballot& b, Rng& rng) {
  if (spec.config.fs_mode == FsMode::strong) {
    throw ForgeryRefused("strong Fiat-Shamir binds the statement; no related ballot can be derived");
  }
  if (!validate_ballot(spec, b)) throw InvalidArgument("malleation needs a valid ballot");
  return reencrypt_keeping_proofs(spec, b, rng);
}

ForgedElection forge_injection_ballot(const ElectionSpec& base, std::int64_t target, Rng& rng) {
  if (base.config.fs_mode == FsMode::strong) {
    throw ForgeryRefused("strong Fiat-Shamir hashes pk and the ciphertext; the forgery is circular");
  }
  if (base.config.tally_mode != TallyMode::homomorphic) {
    throw InvalidArgument("injection forgery targets homomorphic ballots");
  }
  if (target < 0) throw InvalidArgument("injection target must be non-negative");
  const auto& params = base.params;
  const auto m = params.scalar(target);
  const auto m_minus_1 = params.sub(m, Scalar{1});

  while (true) {
    // Commitments A_j = g^alpha_j, B_j = g^beta_j, fixed before the challenge.
    Scalar alpha[2] = {params.random_scalar(rng), params.random_scalar(rng)};
    Scalar beta[2] = {params.random_scalar(rng), params.random_scalar(rng)};
    DisjunctiveProof proof;
    proof.clauses.resize(2);
    for (int j = 0; j < 2; ++j) {
      proof.clauses[j].commit_a = params.gen_pow(alpha[j]);
      proof.clauses[j].commit_b = params.gen_pow(beta[j]);
    }
    const auto c = fs_challenge(params, FsMode::weak, ChallengeContext{{}, {}, commitment_tokens(proof)});

    // With plaintext exponent M the clause equations reduce to
    //   sk*alpha_0 - M*c_0     = beta_0
    //   sk*alpha_1 + (M-1)*c_0 = beta_1 + c*(M-1)
    const auto det = params.add(params.mul(alpha[0], m_minus_1), params.mul(m, alpha[1]));
    if (det.value == 0) continue;
    const auto rhs1 = params.add(beta[1], params.mul(c, m_minus_1));
    const auto det_inv = params.inv(det);
    const auto sk = params.mul(params.add(params.mul(beta[0], m_minus_1), params.mul(m, rhs1)), det_inv);
    if (sk.value == 0) continue;
    const Scalar c0 = params.mul(params.sub(params.mul(alpha[0], rhs1), params.mul(alpha[1], beta[0])), det_inv);
    const Scalar c1 = params.sub(c, c0);
    proof.clauses[0].challenge = c0;
    proof.clauses[1].challenge = c1;

    ForgedElection forged;
    forged.election.spec = base;
    forged.election.sk = sk;
    const auto kp = KeyPair::from_secret(params, sk);
    forged.election.spec.pk = kp.pk;
    forged.election.spec.key_proof = prove_key(params, kp, base.config.fs_mode, rng);

    auto& ballot = forged.ballot;
    const auto x = params.random_scalar(rng);
    ballot.ciphertexts.push_back(
        Ciphertext{params.gen_pow(x), params.gen_pow(params.add(m, params.mul(sk, x)))});
    auto clause = proof;
    clause.clauses[0].response = params.add(alpha[0], params.mul(x, c0));
    clause.clauses[1].response = params.add(alpha[1], params.mul(x, c1));
    ballot.clause_proofs.push_back(clause);

    Scalar x_total = x;
    for (int col = 1; col + 1 < base.choices; ++col) {
      const auto r = params.random_scalar(rng);
      ballot.ciphertexts.push_back(encrypt(params, kp.pk, 0, r));
      ballot.clause_proofs.push_back(prove_01(params, kp.pk, ballot.ciphertexts.back(), 0, r,
                                              static_cast<std::size_t>(col), FsMode::weak, rng));
      x_total = params.add(x_total, r);
    }
    auto sum = proof;
    sum.clauses[0].response = params.add(alpha[0], params.mul(x_total, c0));
    sum.clauses[1].response = params.add(alpha[1], params.mul(x_total, c1));
    ballot.sum_proof = sum;
    return forged;
  }
}

}  // namespace helios
