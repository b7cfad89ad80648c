#pragma once

// Executable security games G0-G4, the full left-right ballot secrecy game,
// and win-rate statistics.

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "helios/election.hpp"

namespace helios {

enum class Game { g0, g1, g2, full, g3, g4 };

Game parse_game(std::string_view name);
std::string_view to_string(Game game);
/// G0-G2 and the full game ask for a guess of the challenge bit.
bool is_guessing_game(Game game);

struct GameTrace {
  int beta = 0;
  int guess = 0;
  bool win = false;
  bool side_condition_met = true;
  bool aborted = false;
  std::size_t rejected_ballots = 0;
  std::vector<std::string> transcript;  // canonical records exchanged during the trial
};

// ---------------------------------------------------------------------------
// Ballot secrecy

struct SecrecyView {
  std::vector<Ballot> ballots;     // ballots handed to the adversary, in order
  std::optional<Outcome> outcome;  // absent in G0
};

/// Left-right oracle of the full secrecy game: every query (left, right)
/// answers with a ballot for the left choice when beta = 0, the right one
/// otherwise.
class LeftRightOracle {
 public:
  struct Entry {
    Ballot ballot;
    Choice left;
    Choice right;
  };

  LeftRightOracle(const ElectionSpec& spec, int beta, Rng& rng) : spec_(spec), beta_(beta), rng_(rng) {}

  Ballot query(Choice left, Choice right);
  std::span<const Entry> log() const { return log_; }

 private:
  const ElectionSpec& spec_;
  int beta_;
  Rng& rng_;
  std::vector<Entry> log_;
};

class SecrecyAdversary {
 public:
  virtual ~SecrecyAdversary() = default;
  virtual std::string_view name() const = 0;

  virtual std::pair<Choice, Choice> choose_pair(const ElectionSpec& spec, Rng& rng);
  /// G2: optional ballot cast after seeing the two challenge ballots.
  virtual std::optional<Ballot> submit_ballot(const ElectionSpec& spec, std::span<const Ballot> challenge, Rng& rng);
  /// Full game: drive the oracle, return the board to be tallied.
  virtual std::vector<Ballot> play_oracle(const ElectionSpec& spec, LeftRightOracle& oracle, Rng& rng);
  virtual int guess(const ElectionSpec& spec, const SecrecyView& view, Rng& rng) = 0;
};

GameTrace run_g0(const Election& election, SecrecyAdversary& adversary, Rng& rng);
GameTrace run_g1(const Election& election, SecrecyAdversary& adversary, Rng& rng);
GameTrace run_g2(const Election& election, SecrecyAdversary& adversary, Rng& rng);
GameTrace run_secrecy_full(const Election& election, SecrecyAdversary& adversary, Rng& rng);

/// Included challenge ballots (verbatim board members, with multiplicity)
/// have equal left and right choice multisets.
bool balanced(std::span<const LeftRightOracle::Entry> log, std::span<const Ballot> board);

// ---------------------------------------------------------------------------
// Individual verifiability: two independently constructed ballots collide.

class G3Adversary {
 public:
  virtual ~G3Adversary() = default;
  virtual std::string_view name() const = 0;
  virtual std::pair<Choice, Choice> choose_pair(const ElectionSpec& spec, Rng& rng) = 0;
};

GameTrace run_g3(const Election& election, G3Adversary& adversary, Rng& rng);

// ---------------------------------------------------------------------------
// Universal verifiability. The adversary plays the administrator: given a
// freshly set-up election it returns everything verification consumes. The
// referee decrypts the recorded ballots with the submitted key to obtain the
// correct outcome.

struct G4Submission {
  Election election;
  BulletinBoard board;
  TallyTranscript transcript;
};

class G4Adversary {
 public:
  virtual ~G4Adversary() = default;
  virtual std::string_view name() const = 0;
  virtual G4Submission play(const Election& base, Rng& rng) = 0;
};

/// Outcome expressed by the recorded ballots: verbatim duplicates count
/// once; a ballot counts iff it validates and decrypts to a legal pattern.
Outcome referee_outcome(const Election& election, const BulletinBoard& board);

GameTrace run_g4(const Election& election, G4Adversary& adversary, Rng& rng);

// ---------------------------------------------------------------------------
// Statistics

struct Advantage {
  Game game = Game::g0;
  std::string adversary;
  std::string config;
  std::size_t trials = 0;
  std::size_t wins = 0;
  std::size_t aborts = 0;
  std::size_t rejected = 0;  // trials in which at least one submitted ballot failed validation
  double rate = 0;           // wins / completed trials
  double estimate = 0;       // 2 rate - 1 for guessing games, rate otherwise
  double band_low = 0;       // 99% Wilson interval for the rate
  double band_high = 0;

  std::size_t completed() const { return trials - aborts; }
};

inline constexpr double kZ99 = 2.5758293035489004;

/// 99% Wilson score interval for `wins` successes out of `n`.
std::pair<double, double> wilson_interval(std::size_t wins, std::size_t n);
/// 99% normal-approximation band around 1/2 for n fair coin flips.
std::pair<double, double> random_band(std::size_t n);

using TraceSink = std::function<void(std::size_t trial, const GameTrace& trace)>;

/// Trial i runs on Rng(seed).derive("trial", i); a fixed seed gives a
/// bit-identical Advantage.
Advantage estimate_advantage(Game game, const Election& election, SecrecyAdversary& adversary, std::size_t trials,
                             std::uint64_t seed, const TraceSink& sink = {});
Advantage estimate_advantage(const Election& election, G3Adversary& adversary, std::size_t trials,
                             std::uint64_t seed, const TraceSink& sink = {});
Advantage estimate_advantage(const Election& election, G4Adversary& adversary, std::size_t trials,
                             std::uint64_t seed, const TraceSink& sink = {});

enum class Verdict { attack_succeeds, scheme_resists };
std::string_view to_string(Verdict v);
/// Guessing games: the attack succeeds when the lower end of the rate's
/// interval clears 1/2. G3/G4: when any trial is won.
Verdict verdict(const Advantage& adv);

// ---------------------------------------------------------------------------
// Shipped adversaries

std::unique_ptr<SecrecyAdversary> make_secrecy_adversary(std::string_view name);
std::unique_ptr<G3Adversary> make_g3_adversary(std::string_view name);
std::unique_ptr<G4Adversary> make_g4_adversary(std::string_view name, std::int64_t inject_target = 100);
std::vector<std::string_view> adversary_names(Game game);

Advantage run_named(Game game, std::string_view adversary, const Election& election, std::size_t trials,
                    std::uint64_t seed, const TraceSink& sink = {});

}  // namespace helios
