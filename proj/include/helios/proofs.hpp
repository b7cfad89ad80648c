#pragma once

// Sigma protocols made non-interactive with Fiat-Shamir.
//
// FsMode::weak hashes the prover's commitments only. FsMode::strong hashes
// a per-proof domain tag, the group, the public key, the full statement and
// the commitments. Every verifier below takes the mode explicitly.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "helios/elgamal.hpp"
#include "helios/group.hpp"
#include "helios/rng.hpp"

namespace helios {

enum class FsMode { weak, strong };

FsMode parse_fs_mode(std::string_view name);
std::string_view to_string(FsMode mode);

namespace domain {
inline constexpr std::string_view kKey = "helios/key";
inline constexpr std::string_view kBallotClause = "helios/ballot-clause";
inline constexpr std::string_view kBallotSum = "helios/ballot-sum";
inline constexpr std::string_view kBallotChoice = "helios/ballot-choice";
inline constexpr std::string_view kDecryption = "helios/decryption";
}  // namespace domain

struct ChallengeContext {
  std::string domain;
  std::string statement;    // canonical tokens of (params, pk, statement values)
  std::string commitments;  // canonical tokens of the prover's first message
};

/// Exact bytes fed to SHA-256 for the given mode.
std::string challenge_input(FsMode mode, const ChallengeContext& ctx);

/// SHA-256(challenge_input) read as a big-endian integer, reduced mod q.
Scalar fs_challenge(const GroupParams& params, FsMode mode, const ChallengeContext& ctx);

// ---------------------------------------------------------------------------
// Knowledge of the secret key: g^response = commitment * pk^challenge.

struct SchnorrProof {
  GroupElement commitment;
  Scalar challenge;
  Scalar response;

  friend bool operator==(const SchnorrProof&, const SchnorrProof&) = default;
};

SchnorrProof prove_key(const GroupParams& params, const KeyPair& kp, FsMode mode, Rng& rng);
bool verify_key(const GroupParams& params, const GroupElement& pk, const SchnorrProof& proof, FsMode mode);

// ---------------------------------------------------------------------------
// Equality of discrete logs (Chaum-Pedersen) for decryption:
// log_g pk = log_a factor.

struct EqDlogProof {
  GroupElement commit_a;
  GroupElement commit_b;
  Scalar challenge;
  Scalar response;

  friend bool operator==(const EqDlogProof&, const EqDlogProof&) = default;
};

struct DecryptionProof {
  GroupElement factor;
  EqDlogProof proof;

  friend bool operator==(const DecryptionProof&, const DecryptionProof&) = default;
};

DecryptionProof prove_dec(const GroupParams& params, const KeyPair& kp, const Ciphertext& c, FsMode mode, Rng& rng);
bool verify_dec(const GroupParams& params, const GroupElement& pk, const Ciphertext& c, const GroupElement& factor,
                const EqDlogProof& proof, FsMode mode);

// ---------------------------------------------------------------------------
// Disjunctive proofs that a ciphertext encrypts one of a list of plaintexts.
// Clause j holds iff (a, b / g^{m_j}) = (g^r, pk^r); its verification
// equations are
//   g^{response_j}  = commit_a_j * a^{challenge_j}
//   pk^{response_j} = commit_b_j * (b / g^{m_j})^{challenge_j}
// and the clause challenges must sum to the Fiat-Shamir challenge mod q.
// Clause 0 always comes first in the transcript.

struct ClauseProof {
  GroupElement commit_a;
  GroupElement commit_b;
  Scalar challenge;
  Scalar response;

  friend bool operator==(const ClauseProof&, const ClauseProof&) = default;
};

struct DisjunctiveProof {
  std::vector<ClauseProof> clauses;

  friend bool operator==(const DisjunctiveProof&, const DisjunctiveProof&) = default;
};

/// Canonical tokens of the commitments (the whole weak-mode hash input).
std::string commitment_tokens(const DisjunctiveProof& proof);

/// Statement encoding shared by the disjunctive provers and verifiers.
ChallengeContext disjunction_context(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
                                     std::string_view domain_tag, std::int64_t qualifier,
                                     const DisjunctiveProof& commitments);

/// Generic OR-proof: c = Enc(plaintexts[true_index]; r).
DisjunctiveProof prove_disjunction(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
                                   std::span<const std::int64_t> plaintexts, std::size_t true_index,
                                   const Scalar& r, std::string_view domain_tag, std::int64_t qualifier,
                                   FsMode mode, Rng& rng);
bool verify_disjunction(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
                        std::span<const std::int64_t> plaintexts, const DisjunctiveProof& proof,
                        std::string_view domain_tag, std::int64_t qualifier, FsMode mode);

/// Proof that ciphertext number `column` of a ballot encrypts 0 or 1.
DisjunctiveProof prove_01(const GroupParams& params, const GroupElement& pk, const Ciphertext& c, int m,
                          const Scalar& r, std::size_t column, FsMode mode, Rng& rng);
bool verify_01(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
               const DisjunctiveProof& proof, std::size_t column, FsMode mode);

/// Proof that the homomorphic combination of cs encrypts 0 or 1; rs are the
/// per-ciphertext randomness values. The verifier recombines cs itself.
DisjunctiveProof prove_sum_01(const GroupParams& params, const GroupElement& pk, std::span<const Ciphertext> cs,
                              std::span<const Scalar> rs, int total, FsMode mode, Rng& rng);
bool verify_sum_01(const GroupParams& params, const GroupElement& pk, std::span<const Ciphertext> cs,
                   const DisjunctiveProof& proof, FsMode mode);

/// 1-of-choices proof used by mixnet ballots: c encrypts some v in [1, choices].
DisjunctiveProof prove_choice(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
                              std::int64_t v, std::int64_t choices, const Scalar& r, FsMode mode, Rng& rng);
bool verify_choice(const GroupParams& params, const GroupElement& pk, const Ciphertext& c,
                   const DisjunctiveProof& proof, std::int64_t choices, FsMode mode);

/// Sum of clause challenges mod q.
Scalar challenge_sum(const GroupParams& params, const DisjunctiveProof& proof);

}  // namespace helios
