#pragma once

// Constructions behind the published attacks. They exist so the game
// harness can reproduce the attacks; none is used by honest parties.

#include <cstdint>

#include "helios/election.hpp"

namespace helios {

/// Re-encrypts every ciphertext with fresh nonzero randomness r' and shifts
/// each clause response by challenge * r' (sum proof: challenge * sum r').
/// Verification equations keep holding exactly when the Fiat-Shamir
/// challenge ignores the statement, i.e. in weak mode. No mode check: under
/// strong mode the result simply fails validation.
Ballot reencrypt_keeping_proofs(const ElectionSpec& spec, const Ballot& b, Rng& rng);

/// Related-ballot construction for weak Fiat-Shamir. The result encrypts the
/// same choice, validates, and shares no ciphertext with b.
/// Throws ForgeryRefused under strong mode and InvalidArgument if b does not validate.
Ballot malleate_ballot(const ElectionSpec& spec, const Ballot& b, Rng& rng);

struct ForgedElection {
  Election election;  // re-keyed copy of the base election
  Ballot ballot;      // validates under election.spec, column 1 carries `target`
};

/// Dishonest-administrator forgery for weak Fiat-Shamir (homomorphic mode).
///
/// The administrator fixes the commitments of one 0/1 proof, derives the
/// weak challenge, and then solves the verification equations for the
/// secret key and the clause challenge so that a ciphertext with plaintext
/// exponent `target` passes. The same transcript, with responses adjusted
/// for the other columns' randomness, serves as the sum proof (identical
/// commitments give an identical weak challenge). The key is chosen after
/// the challenge, so the returned election carries a fresh key pair and an
/// honest key proof for it.
///
/// Throws ForgeryRefused under strong mode, whose challenge binds pk and
/// the ciphertext and makes the construction circular.
ForgedElection forge_injection_ballot(const ElectionSpec& base, std::int64_t target, Rng& rng);

}  // namespace helios
