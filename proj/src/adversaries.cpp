#include <algorithm>
#include <string>

#include "helios/attacks.hpp"
#include "helios/errors.hpp"
#include "helios/games.hpp"

namespace helios {

namespace {

int coin(Rng& rng) { return rng.bit() ? 1 : 0; }

// Reads beta off the outcome: the challenge choice with the larger count wins.
int frequency_guess(const SecrecyView& view, std::pair<Choice, Choice> pair, Rng& rng) {
  if (!view.outcome) return coin(rng);
  const auto& f = view.outcome->frequencies;
  const auto f0 = f.at(static_cast<std::size_t>(pair.first.value - 1));
  const auto f1 = f.at(static_cast<std::size_t>(pair.second.value - 1));
  if (f0 > f1) return 0;
  if (f1 > f0) return 1;
  return coin(rng);
}

class PairMemory : public SecrecyAdversary {
 public:
  std::pair<Choice, Choice> choose_pair(const ElectionSpec& spec, Rng& rng) override {
    pair_ = SecrecyAdversary::choose_pair(spec, rng);
    return pair_;
  }

 protected:
  std::pair<Choice, Choice> pair_{Choice{1}, Choice{2}};
};

class RandomGuess final : public SecrecyAdversary {
 public:
  std::string_view name() const override { return "random"; }
  int guess(const ElectionSpec&, const SecrecyView&, Rng& rng) override { return coin(rng); }
};

// Casts a verbatim copy of the first challenge ballot.
class CopyAdversary final : public PairMemory {
 public:
  std::string_view name() const override { return "copy"; }

  std::optional<Ballot> submit_ballot(const ElectionSpec&, std::span<const Ballot> challenge, Rng&) override {
    return challenge.front();
  }

  std::vector<Ballot> play_oracle(const ElectionSpec& spec, LeftRightOracle& oracle, Rng& rng) override {
    const auto [v0, v1] = choose_pair(spec, rng);
    auto b0 = oracle.query(v0, v1);
    auto b1 = oracle.query(v1, v0);
    return {b0, b1, b0};
  }

  int guess(const ElectionSpec&, const SecrecyView& view, Rng& rng) override {
    return frequency_guess(view, pair_, rng);
  }
};

// Casts a re-encryption of the first challenge ballot with its proofs patched.
class MalleateAdversary final : public PairMemory {
 public:
  std::string_view name() const override { return "malleate"; }

  std::optional<Ballot> submit_ballot(const ElectionSpec& spec, std::span<const Ballot> challenge,
                                      Rng& rng) override {
    return reencrypt_keeping_proofs(spec, challenge.front(), rng);
  }

  std::vector<Ballot> play_oracle(const ElectionSpec& spec, LeftRightOracle& oracle, Rng& rng) override {
    const auto [v0, v1] = choose_pair(spec, rng);
    auto b0 = oracle.query(v0, v1);
    auto b1 = oracle.query(v1, v0);
    return {b0, b1, reencrypt_keeping_proofs(spec, b0, rng)};
  }

  int guess(const ElectionSpec&, const SecrecyView& view, Rng& rng) override {
    return frequency_guess(view, pair_, rng);
  }
};

// Full game: keeps the challenge ballot off the board and submits only a
// related ballot derived from it, so the side condition holds trivially.
class ExcludeAdversary final : public PairMemory {
 public:
  std::string_view name() const override { return "exclude"; }

  std::optional<Ballot> submit_ballot(const ElectionSpec& spec, std::span<const Ballot> challenge,
                                      Rng& rng) override {
    return reencrypt_keeping_proofs(spec, challenge.front(), rng);
  }

  std::vector<Ballot> play_oracle(const ElectionSpec& spec, LeftRightOracle& oracle, Rng& rng) override {
    const auto [v0, v1] = choose_pair(spec, rng);
    auto b = oracle.query(v0, v1);
    return {reencrypt_keeping_proofs(spec, b, rng)};
  }

  int guess(const ElectionSpec&, const SecrecyView& view, Rng& rng) override {
    return frequency_guess(view, pair_, rng);
  }
};

// Rebuilds candidate ballots itself and compares them with the first one shown.
class CompareAdversary final : public PairMemory {
 public:
  std::string_view name() const override { return "compare"; }

  int guess(const ElectionSpec& spec, const SecrecyView& view, Rng& rng) override {
    if (view.ballots.empty()) return coin(rng);
    if (construct_ballot(spec, pair_.first, rng) == view.ballots.front()) return 0;
    if (construct_ballot(spec, pair_.second, rng) == view.ballots.front()) return 1;
    return coin(rng);
  }
};

class FixedPairG3 final : public G3Adversary {
 public:
  FixedPairG3(std::string_view name, int first, int second) : name_(name), first_(first), second_(second) {}
  std::string_view name() const override { return name_; }
  std::pair<Choice, Choice> choose_pair(const ElectionSpec&, Rng&) override { return {Choice{first_}, Choice{second_}}; }

 private:
  std::string_view name_;
  int first_, second_;
};

class RandomG3 final : public G3Adversary {
 public:
  std::string_view name() const override { return "random"; }
  std::pair<Choice, Choice> choose_pair(const ElectionSpec& spec, Rng& rng) override {
    const auto pick = [&] { return Choice{static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.choices))) + 1}; };
    auto a = pick();
    return {a, pick()};
  }
};

BulletinBoard honest_board(const ElectionSpec& spec, std::span<const int> choices, Rng& rng) {
  BulletinBoard board;
  for (int v : choices) board.append(construct_ballot(spec, Choice{v}, rng));
  return board;
}

class HonestAdmin final : public G4Adversary {
 public:
  std::string_view name() const override { return "honest"; }
  G4Submission play(const Election& base, Rng& rng) override {
    std::vector<int> choices;
    for (int i = 0; i < 3; ++i) choices.push_back(static_cast<int>(rng.below(static_cast<std::uint64_t>(base.spec.choices))) + 1);
    auto board = honest_board(base.spec, choices, rng);
    auto transcript = tally(base, board, rng);
    return {base, std::move(board), std::move(transcript)};
  }
};

// Honest board and tally, then announces a random outcome.
class RandomAdmin final : public G4Adversary {
 public:
  std::string_view name() const override { return "random"; }
  G4Submission play(const Election& base, Rng& rng) override {
    const std::vector<int> choices{1, 2, 1};
    auto board = honest_board(base.spec, choices, rng);
    auto transcript = tally(base, board, rng);
    for (auto& f : transcript.outcome.frequencies) f = static_cast<std::int64_t>(rng.below(std::uint64_t{4}));
    return {base, std::move(board), std::move(transcript)};
  }
};

// Three honest ballots for choice 1 plus one forged ballot worth `target`
// votes for choice 1, tallied without integrity checks.
class InjectAdmin final : public G4Adversary {
 public:
  explicit InjectAdmin(std::int64_t target) : target_(target) {}
  std::string_view name() const override { return "inject"; }

  G4Submission play(const Election& base, Rng& rng) override {
    const std::vector<int> choices{1, 1, 1};
    try {
      auto forged = forge_injection_ballot(base.spec, target_, rng);
      auto board = honest_board(forged.election.spec, choices, rng);
      board.append(forged.ballot);
      const auto bound = static_cast<std::int64_t>(board.size()) + target_;
      auto transcript = announce_unchecked(forged.election, board, bound, rng);
      return {std::move(forged.election), std::move(board), std::move(transcript)};
    } catch (const ForgeryRefused&) {
      // No forgery: announce the shifted outcome over an honest board anyway.
      auto board = honest_board(base.spec, choices, rng);
      auto transcript = tally(base, board, rng);
      transcript.outcome.frequencies.front() += target_;
      transcript.outcome.frequencies.back() -= target_;
      return {base, std::move(board), std::move(transcript)};
    }
  }

 private:
  std::int64_t target_;
};

// Alice votes 1, Bob votes 2, the adversary re-casts Alice's ballot verbatim.
class CopyAdmin final : public G4Adversary {
 public:
  std::string_view name() const override { return "copy"; }
  G4Submission play(const Election& base, Rng& rng) override {
    const std::vector<int> choices{1, 2};
    auto board = honest_board(base.spec, choices, rng);
    const Ballot alice = board.entries().front();
    board.append(alice);
    auto transcript = tally(base, board, rng);
    return {base, std::move(board), std::move(transcript)};
  }
};

}  // namespace

std::unique_ptr<SecrecyAdversary> make_secrecy_adversary(std::string_view name) {
  if (name == "random") return std::make_unique<RandomGuess>();
  if (name == "copy") return std::make_unique<CopyAdversary>();
  if (name == "malleate") return std::make_unique<MalleateAdversary>();
  if (name == "exclude") return std::make_unique<ExcludeAdversary>();
  if (name == "compare") return std::make_unique<CompareAdversary>();
  throw InvalidArgument("unknown secrecy adversary '" + std::string(name) + "'");
}

std::unique_ptr<G3Adversary> make_g3_adversary(std::string_view name) {
  if (name == "same-choice") return std::make_unique<FixedPairG3>("same-choice", 1, 1);
  if (name == "different-choices") return std::make_unique<FixedPairG3>("different-choices", 1, 2);
  if (name == "random") return std::make_unique<RandomG3>();
  throw InvalidArgument("unknown g3 adversary '" + std::string(name) + "'");
}

std::unique_ptr<G4Adversary> make_g4_adversary(std::string_view name, std::int64_t inject_target) {
  if (name == "honest") return std::make_unique<HonestAdmin>();
  if (name == "random") return std::make_unique<RandomAdmin>();
  if (name == "inject") return std::make_unique<InjectAdmin>(inject_target);
  if (name == "copy") return std::make_unique<CopyAdmin>();
  throw InvalidArgument("unknown g4 adversary '" + std::string(name) + "'");
}

std::vector<std::string_view> adversary_names(Game game) {
  switch (game) {
    case Game::g3: return {"same-choice", "different-choices", "random"};
    case Game::g4: return {"honest", "random", "inject", "copy"};
    default: return {"random", "copy", "malleate", "exclude", "compare"};
  }
}

}  // namespace helios
