// helios: command-line front end for the election pipeline and game harness.
//
// Exit codes: 0 success, 1 verification failure or rejected ballot,
// 2 usage error, 3 integrity error during tallying.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "helios/attacks.hpp"
#include "helios/bundle.hpp"
#include "helios/errors.hpp"
#include "helios/games.hpp"
#include "helios/serialize.hpp"

using namespace helios;

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kIntegrity = 3;

Rng make_rng(const std::optional<std::uint64_t>& seed, std::string_view label) {
  return seed ? Rng(*seed).derive(label) : Rng::from_entropy();
}

// Ballot record from a file, or standard input when path is empty or "-".
Ballot read_ballot_arg(const std::string& path) {
  std::string line;
  if (path.empty() || path == "-") {
    std::getline(std::cin, line);
  } else {
    line = read_record(path);
  }
  return parse_ballot(line);
}

struct Options {
  // setup
  int choices = 2;
  std::string config;
  std::string group = "small";
  std::string out;
  // shared
  std::string bundle;
  std::optional<std::uint64_t> seed;
  // vote / cast / check-recorded
  int choice = 0;
  std::string ballot;
  // tally / verify
  std::string sk;
  std::string transcript;
  // game / attack
  std::string game;
  std::string adversary;
  std::size_t trials = 100;
  std::string dump;
  std::string attack;
  std::int64_t target = 100;
};

int cmd_setup(const Options& o) {
  auto rng = make_rng(o.seed, "setup");
  const auto params = GroupParams::generate(parse_security_level(o.group));
  const auto election = setup(params, o.choices, SchemeConfig::preset(o.config), rng);
  Bundle(o.out).write_setup(election);
  std::cout << "spec-digest|" << spec_digest(election.spec) << '\n';
  return kOk;
}

int cmd_vote(const Options& o) {
  const auto spec = Bundle::locate(o.bundle).read_spec();
  if (!spec.valid_choice(Choice{o.choice})) {
    throw InvalidArgument("choice must lie in [1, " + std::to_string(spec.choices) + "]");
  }
  auto rng = make_rng(o.seed, "vote");
  std::cout << to_record(construct_ballot(spec, Choice{o.choice}, rng)) << '\n';
  return kOk;
}

int cmd_cast(const Options& o) {
  const auto bundle = Bundle::locate(o.bundle);
  const auto spec = bundle.read_spec();
  const auto b = read_ballot_arg(o.ballot);
  const auto check = check_ballot(spec, b);
  if (!check.ok) {
    std::cerr << "rejected: " << check.failure << '\n';
    return kFail;
  }
  bundle.append_ballot(b);
  std::cout << "cast\n";
  return kOk;
}

int cmd_check_recorded(const Options& o) {
  const auto board = Bundle::locate(o.bundle).read_board();
  if (check_recorded(board, read_ballot_arg(o.ballot))) {
    std::cout << "recorded\n";
    return kOk;
  }
  std::cout << "not recorded\n";
  return kFail;
}

int cmd_tally(const Options& o) {
  const auto bundle = Bundle::locate(o.bundle);
  const Election election{bundle.read_spec(), read_secret(o.sk.empty() ? bundle.secret_path() : std::filesystem::path(o.sk))};
  if (!(election.spec.params.gen_pow(election.sk) == election.spec.pk)) {
    throw InvalidArgument("secret key does not match the spec's public key");
  }
  auto rng = make_rng(o.seed, "tally");
  const auto transcript = tally(election, bundle.read_board(), rng);
  bundle.write_tally(transcript);
  std::cout << to_record(transcript.outcome) << '\n';
  return kOk;
}

int cmd_verify(const Options& o) {
  const auto bundle = Bundle::locate(o.bundle);
  const auto spec = bundle.read_spec();
  BulletinBoard board;
  TallyTranscript transcript;
  const auto path = o.transcript.empty() ? bundle.transcript_path() : std::filesystem::path(o.transcript);
  try {
    board = bundle.read_board();
    if (o.transcript.empty() && !std::filesystem::exists(path)) {
      if (!board.empty()) {
        std::cout << "transcript: FAIL (missing for a non-empty board)\n";
        return kFail;
      }
      const bool key_ok = verify_key(spec.params, spec.pk, spec.key_proof, spec.config.fs_mode);
      std::cout << "key-proof: " << (key_ok ? "ok" : "FAIL") << '\n';
      std::cout << "board: ok (empty, nothing tallied)\n";
      return key_ok ? kOk : kFail;
    }
    transcript = read_transcript(path);
  } catch (const DecodeError& e) {
    std::cout << "decode: FAIL (" << e.what() << ")\n";
    return kFail;
  }
  const auto report = verify_election_report(spec, board, transcript);
  for (const auto& [name, ok] : report.checks) std::cout << name << ": " << (ok ? "ok" : "FAIL") << '\n';
  if (report.ok()) {
    std::cout << "verified\n";
    return kOk;
  }
  std::cout << "first failure: " << report.first_failure() << '\n';
  return kFail;
}

Election game_election(const Options& o, std::uint64_t seed) {
  auto rng = Rng(seed).derive("setup");
  return setup(GroupParams::generate(parse_security_level(o.group)), o.choices, SchemeConfig::preset(o.config), rng);
}

void report(const Advantage& adv) {
  std::cout << advantage_record(adv) << '\n';
  std::cout << "verdict|" << to_string(verdict(adv)) << '\n';
}

int cmd_game(const Options& o) {
  const auto game = parse_game(o.game);
  const std::uint64_t seed = o.seed.value_or(0);
  const auto election = game_election(o, seed);

  std::ofstream dump;
  TraceSink sink;
  if (!o.dump.empty()) {
    dump.open(o.dump, std::ios::binary | std::ios::trunc);
    if (!dump) throw InvalidArgument("cannot write " + o.dump);
    sink = [&](std::size_t i, const GameTrace& t) {
      dump << trace_header(i, t) << '\n';
      for (const auto& line : t.transcript) dump << line << '\n';
    };
  }
  Advantage adv;
  if (game == Game::g4) {
    auto a = make_g4_adversary(o.adversary, o.target);
    adv = estimate_advantage(election, *a, o.trials, seed, sink);
  } else {
    adv = run_named(game, o.adversary, election, o.trials, seed, sink);
  }
  report(adv);
  return kOk;
}

struct Demo {
  std::string_view game, adversary, config, story;
};

Demo demo_defaults(std::string_view name) {
  if (name == "copy") return {"g2", "copy", "helios2.0", "voter re-casts a copy of a challenge ballot"};
  if (name == "malleate") return {"g2", "malleate", "helios12", "voter casts a re-encrypted challenge ballot with patched proofs"};
  if (name == "exclude") return {"full", "exclude", "helios12", "challenge ballot withheld, a related ballot tallied in its place"};
  if (name == "inject") return {"g4", "inject", "helios2.0", "administrator forges a ballot worth 100 votes"};
  if (name == "weed-exclude") return {"g4", "copy", "helios12-removeall", "copy of Alice's ballot makes weeding drop both"};
  throw InvalidArgument("unknown attack '" + std::string(name) + "'");
}

int cmd_attack(Options o) {
  const auto demo = demo_defaults(o.attack);
  if (o.config.empty()) o.config = std::string(demo.config);
  o.game = std::string(demo.game);
  o.adversary = std::string(demo.adversary);
  std::cout << "attack|" << o.attack << '|' << demo.story << '\n';
  std::cout << "config|" << o.config << '\n';
  if (o.attack == "inject") {
    auto rng = Rng(o.seed.value_or(0)).derive("demo");
    const auto base = game_election(o, o.seed.value_or(0));
    try {
      const auto forged = forge_injection_ballot(base.spec, o.target, rng);
      const auto ok = validate_ballot(forged.election.spec, forged.ballot);
      std::cout << "forgery|" << (ok ? "validates" : "rejected") << '\n';
    } catch (const ForgeryRefused& e) {
      std::cout << "forgery|refused|" << e.what() << '\n';
    }
  }
  return cmd_game(o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Helios-style voting pipeline and security game harness"};
  app.require_subcommand(1);
  Options o;

  const auto seed_opt = [&](CLI::App* c) { c->add_option("--seed", o.seed, "Deterministic seed"); };
  const auto bundle_opt = [&](CLI::App* c) {
    c->add_option("--spec", o.bundle, std::string("Bundle directory (default $") + kBundleEnv + ")");
  };

  auto* setup_cmd = app.add_subcommand("setup", "Create params, spec and secret key");
  setup_cmd->add_option("--choices", o.choices, "Number of choices (>= 2)")->required();
  setup_cmd->add_option("--config", o.config, "Scheme preset")->required();
  setup_cmd->add_option("--group", o.group, "test|small|standard")->capture_default_str();
  setup_cmd->add_option("--out", o.out, "Output directory")->required();
  seed_opt(setup_cmd);

  auto* vote_cmd = app.add_subcommand("vote", "Print a ballot record for a choice");
  bundle_opt(vote_cmd);
  vote_cmd->add_option("--choice", o.choice, "Choice in [1, l]")->required();
  seed_opt(vote_cmd);

  auto* cast_cmd = app.add_subcommand("cast", "Validate a ballot record and append it to the board");
  bundle_opt(cast_cmd);
  cast_cmd->add_option("--ballot", o.ballot, "Ballot record file (default stdin)");

  auto* check_cmd = app.add_subcommand("check-recorded", "Check that a ballot appears verbatim on the board");
  bundle_opt(check_cmd);
  check_cmd->add_option("--ballot", o.ballot, "Ballot record file (default stdin)");

  auto* tally_cmd = app.add_subcommand("tally", "Tally the board, write transcript and outcome");
  bundle_opt(tally_cmd);
  tally_cmd->add_option("--sk", o.sk, "Secret key file (default <bundle>/secret.txt)");
  seed_opt(tally_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "Verify a tally transcript against the board");
  bundle_opt(verify_cmd);
  verify_cmd->add_option("--transcript", o.transcript, "Transcript file (default <bundle>/transcript.txt)");

  auto* game_cmd = app.add_subcommand("game", "Security games");
  game_cmd->require_subcommand(1);
  auto* run_cmd = game_cmd->add_subcommand("run", "Estimate an adversary's win rate");
  run_cmd->add_option("--game", o.game, "g0|g1|g2|full|g3|g4")->required();
  run_cmd->add_option("--adversary", o.adversary, "Adversary name")->required();
  run_cmd->add_option("--config", o.config, "Scheme preset")->required();
  run_cmd->add_option("--trials", o.trials, "Number of trials")->capture_default_str()->check(CLI::PositiveNumber);
  run_cmd->add_option("--group", o.group, "test|small|standard")->capture_default_str();
  run_cmd->add_option("--choices", o.choices, "Number of choices")->capture_default_str();
  run_cmd->add_option("--target", o.target, "Votes injected by the inject adversary")->capture_default_str();
  run_cmd->add_option("--dump", o.dump, "Write per-trial transcripts to this file");
  seed_opt(run_cmd);

  auto* attack_cmd = app.add_subcommand("attack", "Attack demonstrations");
  attack_cmd->require_subcommand(1);
  auto* demo_cmd = attack_cmd->add_subcommand("demo", "Run a published attack against a preset");
  demo_cmd->add_option("--name", o.attack, "copy|malleate|exclude|inject|weed-exclude")->required();
  demo_cmd->add_option("--config", o.config, "Scheme preset (default depends on the attack)");
  demo_cmd->add_option("--trials", o.trials, "Number of trials")->capture_default_str()->check(CLI::PositiveNumber);
  demo_cmd->add_option("--group", o.group, "test|small|standard")->capture_default_str();
  demo_cmd->add_option("--dump", o.dump, "Write per-trial transcripts to this file");
  seed_opt(demo_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*setup_cmd) return cmd_setup(o);
    if (*vote_cmd) return cmd_vote(o);
    if (*cast_cmd) return cmd_cast(o);
    if (*check_cmd) return cmd_check_recorded(o);
    if (*tally_cmd) return cmd_tally(o);
    if (*verify_cmd) return cmd_verify(o);
    if (*run_cmd) return cmd_game(o);
    if (*demo_cmd) {
      if (o.trials == 100 && demo_cmd->count("--trials") == 0) o.trials = 20;
      return cmd_attack(o);
    }
  } catch (const TallyIntegrityError& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kIntegrity;
  } catch (const DlogOutOfRange& e) {
    std::cerr << "integrity error: " << e.what() << '\n';
    return kIntegrity;
  } catch (const ForgeryRefused& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return kFail;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
