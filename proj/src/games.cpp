#include "helios/games.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "helios/errors.hpp"
#include "helios/serialize.hpp"

namespace helios {

namespace {

void require_pair(const ElectionSpec& spec, std::pair<Choice, Choice> pair, bool distinct) {
  if (!spec.valid_choice(pair.first) || !spec.valid_choice(pair.second)) {
    throw InvalidArgument("adversary emitted an out-of-range choice");
  }
  if (distinct && pair.first == pair.second) throw InvalidArgument("adversary must pick two distinct choices");
}

std::string pair_record(std::pair<Choice, Choice> pair) {
  TokenWriter w("pair");
  w.put(static_cast<std::int64_t>(pair.first.value)).put(static_cast<std::int64_t>(pair.second.value));
  return w.str();
}

std::string guess_record(int guess) {
  TokenWriter w("guess");
  w.put(static_cast<std::int64_t>(guess));
  return w.str();
}

Choice pick(std::pair<Choice, Choice> pair, int bit) { return bit == 0 ? pair.first : pair.second; }

// Shared body of G1 and G2: two challenge ballots, optional adversary ballot, tally, guess.
GameTrace run_two_ballot_game(const Election& election, SecrecyAdversary& adversary, Rng& rng, bool with_cast) {
  const auto& spec = election.spec;
  auto challenger = rng.derive("challenger");
  auto adv_rng = rng.derive("adversary");
  GameTrace trace;
  trace.beta = challenger.bit() ? 1 : 0;

  const auto pair = adversary.choose_pair(spec, adv_rng);
  require_pair(spec, pair, true);
  trace.transcript.push_back(pair_record(pair));

  std::vector<Ballot> challenge{construct_ballot(spec, pick(pair, trace.beta), challenger),
                                construct_ballot(spec, pick(pair, 1 - trace.beta), challenger)};
  for (const auto& b : challenge) trace.transcript.push_back(to_record(b));

  BulletinBoard board(challenge);
  if (with_cast) {
    if (auto cast = adversary.submit_ballot(spec, challenge, adv_rng)) {
      trace.transcript.push_back(to_record(*cast));
      if (!validate_ballot(spec, *cast)) {
        trace.rejected_ballots = 1;
        trace.aborted = true;
        return trace;
      }
      board.append(std::move(*cast));
    }
  }

  SecrecyView view{challenge, std::nullopt};
  try {
    view.outcome = tally(election, board, challenger).outcome;
  } catch (const Error&) {
    trace.aborted = true;
    return trace;
  }
  trace.transcript.push_back(to_record(*view.outcome));
  trace.guess = adversary.guess(spec, view, adv_rng);
  trace.transcript.push_back(guess_record(trace.guess));
  trace.win = trace.guess == trace.beta;
  return trace;
}

double safe_rate(std::size_t wins, std::size_t n) { return n == 0 ? 0.0 : static_cast<double>(wins) / n; }

Advantage summarize(Game game, std::string adversary, const ElectionSpec& spec, std::size_t trials,
                    const std::vector<GameTrace>& traces) {
  Advantage adv;
  adv.game = game;
  adv.adversary = std::move(adversary);
  adv.config = std::string(preset_name(spec.config));
  adv.trials = trials;
  for (const auto& t : traces) {
    if (t.aborted) ++adv.aborts;
    if (t.win) ++adv.wins;
    if (t.rejected_ballots > 0) ++adv.rejected;
  }
  const auto n = adv.completed();
  adv.rate = safe_rate(adv.wins, n);
  adv.estimate = is_guessing_game(game) ? 2 * adv.rate - 1 : adv.rate;
  std::tie(adv.band_low, adv.band_high) = wilson_interval(adv.wins, n);
  return adv;
}

template <class Run>
Advantage run_trials(Game game, std::string_view adversary, const Election& election, std::size_t trials,
                     std::uint64_t seed, const TraceSink& sink, Run&& run) {
  if (trials < 1) throw InvalidArgument("at least one trial is required");
  const Rng root(seed);
  std::vector<GameTrace> traces;
  traces.reserve(trials);
  for (std::size_t i = 0; i < trials; ++i) {
    auto trial_rng = root.derive("trial", i);
    traces.push_back(run(trial_rng));
    if (sink) sink(i, traces.back());
    traces.back().transcript.clear();
  }
  return summarize(game, std::string(adversary), election.spec, trials, traces);
}

}  // namespace

Game parse_game(std::string_view name) {
  if (name == "g0") return Game::g0;
  if (name == "g1") return Game::g1;
  if (name == "g2") return Game::g2;
  if (name == "full") return Game::full;
  if (name == "g3") return Game::g3;
  if (name == "g4") return Game::g4;
  throw InvalidArgument("unknown game '" + std::string(name) + "'");
}

std::string_view to_string(Game game) {
  switch (game) {
    case Game::g0: return "g0";
    case Game::g1: return "g1";
    case Game::g2: return "g2";
    case Game::full: return "full";
    case Game::g3: return "g3";
    case Game::g4: return "g4";
  }
  return "?";
}

bool is_guessing_game(Game game) { return game != Game::g3 && game != Game::g4; }

Ballot LeftRightOracle::query(Choice left, Choice right) {
  require_pair(spec_, {left, right}, false);
  auto b = construct_ballot(spec_, beta_ == 0 ? left : right, rng_);
  log_.push_back(Entry{b, left, right});
  return b;
}

// --- default adversary behaviour ----------------------------------------

std::pair<Choice, Choice> SecrecyAdversary::choose_pair(const ElectionSpec&, Rng&) {
  return {Choice{1}, Choice{2}};
}

std::optional<Ballot> SecrecyAdversary::submit_ballot(const ElectionSpec&, std::span<const Ballot>, Rng&) {
  return std::nullopt;
}

std::vector<Ballot> SecrecyAdversary::play_oracle(const ElectionSpec& spec, LeftRightOracle& oracle, Rng& rng) {
  const auto [v0, v1] = choose_pair(spec, rng);
  return {oracle.query(v0, v1), oracle.query(v1, v0)};
}

// --- secrecy games --------------------------------------------------------

GameTrace run_g0(const Election& election, SecrecyAdversary& adversary, Rng& rng) {
  const auto& spec = election.spec;
  auto challenger = rng.derive("challenger");
  auto adv_rng = rng.derive("adversary");
  GameTrace trace;
  trace.beta = challenger.bit() ? 1 : 0;

  const auto pair = adversary.choose_pair(spec, adv_rng);
  require_pair(spec, pair, true);
  trace.transcript.push_back(pair_record(pair));

  SecrecyView view{{construct_ballot(spec, pick(pair, trace.beta), challenger)}, std::nullopt};
  trace.transcript.push_back(to_record(view.ballots[0]));
  trace.guess = adversary.guess(spec, view, adv_rng);
  trace.transcript.push_back(guess_record(trace.guess));
  trace.win = trace.guess == trace.beta;
  return trace;
}

GameTrace run_g1(const Election& election, SecrecyAdversary& adversary, Rng& rng) {
  return run_two_ballot_game(election, adversary, rng, false);
}

GameTrace run_g2(const Election& election, SecrecyAdversary& adversary, Rng& rng) {
  return run_two_ballot_game(election, adversary, rng, true);
}

bool balanced(std::span<const LeftRightOracle::Entry> log, std::span<const Ballot> board) {
  std::vector<int> left, right;
  for (const auto& b : board) {
    auto it = std::find_if(log.begin(), log.end(), [&](const auto& e) { return e.ballot == b; });
    if (it == log.end()) continue;
    left.push_back(it->left.value);
    right.push_back(it->right.value);
  }
  std::sort(left.begin(), left.end());
  std::sort(right.begin(), right.end());
  return left == right;
}

GameTrace run_secrecy_full(const Election& election, SecrecyAdversary& adversary, Rng& rng) {
  const auto& spec = election.spec;
  auto challenger = rng.derive("challenger");
  auto adv_rng = rng.derive("adversary");
  GameTrace trace;
  trace.beta = challenger.bit() ? 1 : 0;

  LeftRightOracle oracle(spec, trace.beta, challenger);
  auto submitted = adversary.play_oracle(spec, oracle, adv_rng);
  for (const auto& e : oracle.log()) {
    TokenWriter w("query");
    w.put(static_cast<std::int64_t>(e.left.value)).put(static_cast<std::int64_t>(e.right.value));
    trace.transcript.push_back(w.str());
    trace.transcript.push_back(to_record(e.ballot));
  }
  for (const auto& b : submitted) trace.transcript.push_back(to_record(b));

  trace.side_condition_met = balanced(oracle.log(), submitted);
  BulletinBoard board(std::move(submitted));
  SecrecyView view{std::vector<Ballot>(board.entries().begin(), board.entries().end()), std::nullopt};
  try {
    const auto transcript = tally(election, board, challenger);
    trace.rejected_ballots = transcript.dropped.size();
    view.outcome = transcript.outcome;
  } catch (const Error&) {
    trace.aborted = true;
    return trace;
  }
  trace.transcript.push_back(to_record(*view.outcome));
  trace.guess = adversary.guess(spec, view, adv_rng);
  trace.transcript.push_back(guess_record(trace.guess));
  trace.win = trace.side_condition_met && trace.guess == trace.beta;
  return trace;
}

// --- verifiability games --------------------------------------------------

GameTrace run_g3(const Election& election, G3Adversary& adversary, Rng& rng) {
  const auto& spec = election.spec;
  auto challenger = rng.derive("challenger");
  auto adv_rng = rng.derive("adversary");
  GameTrace trace;
  const auto pair = adversary.choose_pair(spec, adv_rng);
  require_pair(spec, pair, false);
  trace.transcript.push_back(pair_record(pair));
  const auto first = to_record(construct_ballot(spec, pair.first, challenger));
  const auto second = to_record(construct_ballot(spec, pair.second, challenger));
  trace.win = first == second;
  trace.transcript.push_back(first);
  trace.transcript.push_back(second);
  return trace;
}

Outcome referee_outcome(const Election& election, const BulletinBoard& board) {
  const auto& spec = election.spec;
  const auto& params = spec.params;
  std::vector<Ballot> unique;
  for (const auto& b : board.entries()) {
    if (std::find(unique.begin(), unique.end(), b) == unique.end()) unique.push_back(b);
  }
  std::vector<Choice> expressed;
  for (const auto& b : unique) {
    if (!validate_ballot(spec, b)) continue;
    try {
      if (spec.config.tally_mode == TallyMode::mixnet) {
        const auto v = decrypt(params, election.sk, b.ciphertexts[0], spec.choices);
        if (v >= 1) expressed.push_back(Choice{static_cast<int>(v)});
        continue;
      }
      int ones = 0;
      int choice = spec.choices;
      for (std::size_t col = 0; col < b.ciphertexts.size(); ++col) {
        if (decrypt(params, election.sk, b.ciphertexts[col], 1) == 1) {
          ++ones;
          choice = static_cast<int>(col) + 1;
        }
      }
      if (ones <= 1) expressed.push_back(Choice{choice});
    } catch (const DlogOutOfRange&) {
      // not well-formed: expresses no choice
    }
  }
  return count_choices(spec.choices, expressed);
}

GameTrace run_g4(const Election& election, G4Adversary& adversary, Rng& rng) {
  auto adv_rng = rng.derive("adversary");
  GameTrace trace;
  auto submission = adversary.play(election, adv_rng);
  const auto& e = submission.election;
  trace.transcript.push_back(to_record(e.spec));
  for (const auto& b : submission.board.entries()) trace.transcript.push_back(to_record(b));
  trace.transcript.push_back(to_record(submission.transcript));

  if (e.spec.params.gen_pow(e.sk) != e.spec.pk) {
    // The referee cannot judge without the matching key.
    trace.aborted = true;
    return trace;
  }
  const auto report = verify_election_report(e.spec, submission.board, submission.transcript);
  const auto correct = referee_outcome(e, submission.board);
  {
    TokenWriter w("verification");
    w.put(report.ok() ? "accepted" : "rejected:" + report.first_failure());
    trace.transcript.push_back(w.str());
  }
  trace.transcript.push_back(to_record(correct));
  for (const auto& b : submission.board.entries()) {
    if (!validate_ballot(e.spec, b)) ++trace.rejected_ballots;
  }
  trace.win = report.ok() && submission.transcript.outcome != correct;
  return trace;
}

// --- statistics -------------------------------------------------------------

std::pair<double, double> wilson_interval(std::size_t wins, std::size_t n) {
  if (n == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(n);
  const double p = static_cast<double>(wins) / nn;
  const double z2 = kZ99 * kZ99;
  const double denom = 1 + z2 / nn;
  const double center = (p + z2 / (2 * nn)) / denom;
  const double half = kZ99 * std::sqrt(p * (1 - p) / nn + z2 / (4 * nn * nn)) / denom;
  return {std::max(0.0, center - half), std::min(1.0, center + half)};
}

std::pair<double, double> random_band(std::size_t n) {
  const double half = kZ99 * std::sqrt(0.25 / static_cast<double>(n));
  return {0.5 - half, 0.5 + half};
}

Advantage estimate_advantage(Game game, const Election& election, SecrecyAdversary& adversary, std::size_t trials,
                             std::uint64_t seed, const TraceSink& sink) {
  if (!is_guessing_game(game)) throw InvalidArgument("secrecy adversaries play g0, g1, g2 or full");
  return run_trials(game, adversary.name(), election, trials, seed, sink, [&](Rng& rng) {
    switch (game) {
      case Game::g0: return run_g0(election, adversary, rng);
      case Game::g1: return run_g1(election, adversary, rng);
      case Game::g2: return run_g2(election, adversary, rng);
      default: return run_secrecy_full(election, adversary, rng);
    }
  });
}

Advantage estimate_advantage(const Election& election, G3Adversary& adversary, std::size_t trials,
                             std::uint64_t seed, const TraceSink& sink) {
  return run_trials(Game::g3, adversary.name(), election, trials, seed, sink,
                    [&](Rng& rng) { return run_g3(election, adversary, rng); });
}

Advantage estimate_advantage(const Election& election, G4Adversary& adversary, std::size_t trials,
                             std::uint64_t seed, const TraceSink& sink) {
  return run_trials(Game::g4, adversary.name(), election, trials, seed, sink,
                    [&](Rng& rng) { return run_g4(election, adversary, rng); });
}

std::string_view to_string(Verdict v) {
  return v == Verdict::attack_succeeds ? "ATTACK SUCCEEDS" : "SCHEME RESISTS";
}

Verdict verdict(const Advantage& adv) {
  if (adv.completed() == 0) return Verdict::scheme_resists;
  if (is_guessing_game(adv.game)) return adv.band_low > 0.5 ? Verdict::attack_succeeds : Verdict::scheme_resists;
  return adv.wins > 0 ? Verdict::attack_succeeds : Verdict::scheme_resists;
}

Advantage run_named(Game game, std::string_view adversary, const Election& election, std::size_t trials,
                    std::uint64_t seed, const TraceSink& sink) {
  switch (game) {
    case Game::g3: {
      auto adv = make_g3_adversary(adversary);
      return estimate_advantage(election, *adv, trials, seed, sink);
    }
    case Game::g4: {
      auto adv = make_g4_adversary(adversary);
      return estimate_advantage(election, *adv, trials, seed, sink);
    }
    default: {
      auto adv = make_secrecy_adversary(adversary);
      return estimate_advantage(game, election, *adv, trials, seed, sink);
    }
  }
}

}  // namespace helios
