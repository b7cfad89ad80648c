#pragma once

// Setup, voting, tallying and verification for the Helios-style scheme.
//
// A homomorphic-mode ballot for choice v among 1..choices carries
// choices - 1 ciphertexts: column v encrypts 1 when v < choices, every other
// column encrypts 0. Each column has a 0/1 proof and the column product has
// one more 0/1 proof. A mixnet-mode ballot carries one ciphertext of v and a
// 1-of-choices proof.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "helios/elgamal.hpp"
#include "helios/group.hpp"
#include "helios/proofs.hpp"
#include "helios/rng.hpp"

namespace helios {

enum class Weeding { none, keep_first, remove_all };
enum class TallyMode { homomorphic, mixnet };
/// `deterministic` exists only as a broken configuration the game harness
/// must be able to detect.
enum class BallotRandomness { fresh, deterministic };

std::string_view to_string(Weeding w);
std::string_view to_string(TallyMode m);
std::string_view to_string(BallotRandomness r);
Weeding parse_weeding(std::string_view name);
TallyMode parse_tally_mode(std::string_view name);
BallotRandomness parse_randomness(std::string_view name);

struct SchemeConfig {
  FsMode fs_mode = FsMode::strong;
  Weeding weeding = Weeding::keep_first;
  TallyMode tally_mode = TallyMode::homomorphic;
  BallotRandomness randomness = BallotRandomness::fresh;

  /// helios2.0, helios12, helios12-removeall, helios16, mixnet, toy-deterministic.
  static SchemeConfig preset(std::string_view name);
  static std::vector<std::string_view> preset_names();

  friend bool operator==(const SchemeConfig&, const SchemeConfig&) = default;
};

/// Preset name for a config, or "custom".
std::string_view preset_name(const SchemeConfig& config);

struct Choice {
  int value = 1;

  friend bool operator==(const Choice&, const Choice&) = default;
};

struct ElectionSpec {
  int choices = 2;
  GroupParams params;
  GroupElement pk;
  SchnorrProof key_proof;
  SchemeConfig config;

  bool valid_choice(Choice v) const { return v.value >= 1 && v.value <= choices; }
};

/// Administrator-side view: the public spec plus the secret key.
struct Election {
  ElectionSpec spec;
  Scalar sk;

  KeyPair key_pair() const { return KeyPair{sk, spec.pk}; }
};

Election setup(const GroupParams& params, int choices, const SchemeConfig& config, Rng& rng);

struct Ballot {
  std::vector<Ciphertext> ciphertexts;
  std::vector<DisjunctiveProof> clause_proofs;
  std::optional<DisjunctiveProof> sum_proof;  // absent for mixnet ballots

  friend bool operator==(const Ballot&, const Ballot&) = default;
};

Ballot construct_ballot(const ElectionSpec& spec, Choice v, Rng& rng);

/// Unit/zero plaintext pattern a homomorphic ballot for v must carry.
std::vector<std::int64_t> plaintext_pattern(int choices, Choice v);

struct BallotCheck {
  bool ok = true;
  std::string failure;  // names the first failing structural check or proof
};

BallotCheck check_ballot(const ElectionSpec& spec, const Ballot& b);
inline bool validate_ballot(const ElectionSpec& spec, const Ballot& b) { return check_ballot(spec, b).ok; }

class BulletinBoard {
 public:
  BulletinBoard() = default;
  explicit BulletinBoard(std::vector<Ballot> entries) : entries_(std::move(entries)) {}

  void append(Ballot b) { entries_.push_back(std::move(b)); }
  std::span<const Ballot> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

 private:
  std::vector<Ballot> entries_;
};

/// Positions (into `ballots`) that survive the policy. Two ballots are
/// duplicates iff their ciphertext lists are equal; proofs are ignored.
std::vector<std::size_t> weed_indices(std::span<const Ballot> ballots, Weeding policy);
std::vector<Ballot> weed(std::span<const Ballot> ballots, Weeding policy);

struct Outcome {
  std::vector<std::int64_t> frequencies;  // index j holds the count for choice j + 1

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

/// Frequency vector from a list of cast choices.
Outcome count_choices(int choices, std::span<const Choice> cast);

struct Permutation {
  std::vector<std::size_t> image;  // output position i takes input image[i]

  static Permutation uniform(std::size_t k, Rng& rng);
  bool is_bijection() const;
};

struct TallyTranscript {
  TallyMode mode = TallyMode::homomorphic;
  std::vector<std::size_t> dropped;  // board positions that failed validation
  std::size_t tallied = 0;           // k: ballots left after validation and weeding
  // Homomorphic: one column combination per ciphertext column.
  // Mixnet: the re-encrypted, permuted ciphertexts.
  std::vector<Ciphertext> ciphertexts;
  std::vector<DecryptionProof> decryptions;
  std::vector<std::int64_t> revealed;  // mixnet only: decrypted choices
  Outcome outcome;

  friend bool operator==(const TallyTranscript&, const TallyTranscript&) = default;
};

TallyTranscript tally_homomorphic(const Election& election, const BulletinBoard& board, Rng& rng);
TallyTranscript tally_mixnet(const Election& election, const BulletinBoard& board, Rng& rng);
/// Dispatches on spec.config.tally_mode.
TallyTranscript tally(const Election& election, const BulletinBoard& board, Rng& rng);

/// Homomorphic tally that skips the integrity checks and decrypts columns up
/// to `dlog_bound`. This is the announcement a dishonest administrator makes;
/// honest code paths never call it.
TallyTranscript announce_unchecked(const Election& election, const BulletinBoard& board, std::int64_t dlog_bound,
                                   Rng& rng);

struct VerificationReport {
  std::vector<std::pair<std::string, bool>> checks;

  bool ok() const;
  /// Name of the first failing check, empty when ok().
  std::string first_failure() const;
};

VerificationReport verify_election_report(const ElectionSpec& spec, const BulletinBoard& board,
                                          const TallyTranscript& transcript);
inline bool verify_election(const ElectionSpec& spec, const BulletinBoard& board, const TallyTranscript& transcript) {
  return verify_election_report(spec, board, transcript).ok();
}

/// Individual verifiability: b appears verbatim on the board.
bool check_recorded(const BulletinBoard& board, const Ballot& b);

}  // namespace helios
