#include "helios/election.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "helios/errors.hpp"

namespace helios {

namespace {

struct Preset {
  std::string_view name;
  SchemeConfig config;
};

constexpr Preset kPresets[] = {
    {"helios2.0", {FsMode::weak, Weeding::none, TallyMode::homomorphic, BallotRandomness::fresh}},
    {"helios12", {FsMode::weak, Weeding::keep_first, TallyMode::homomorphic, BallotRandomness::fresh}},
    {"helios12-removeall", {FsMode::weak, Weeding::remove_all, TallyMode::homomorphic, BallotRandomness::fresh}},
    {"helios16", {FsMode::strong, Weeding::keep_first, TallyMode::homomorphic, BallotRandomness::fresh}},
    {"mixnet", {FsMode::strong, Weeding::keep_first, TallyMode::mixnet, BallotRandomness::fresh}},
    {"toy-deterministic", {FsMode::strong, Weeding::none, TallyMode::homomorphic, BallotRandomness::deterministic}},
};

std::string ciphertext_key(const Ballot& b) {
  std::string key;
  for (const auto& c : b.ciphertexts) {
    key += c.a.value.get_str(16);
    key += ',';
    key += c.b.value.get_str(16);
    key += ';';
  }
  return key;
}

Rng ballot_rng(const ElectionSpec& spec, Choice v, Rng& rng) {
  if (spec.config.randomness == BallotRandomness::fresh) return rng.derive("ballot", rng.next_u64());
  // Toy scheme: all coins are a function of the public key and the choice.
  return Rng(0).derive("toy-deterministic|" + spec.pk.value.get_str(10) + "|" + std::to_string(v.value));
}

struct Filtered {
  std::vector<std::size_t> dropped;
  std::vector<const Ballot*> tallied;
};

Filtered filter_and_weed(const ElectionSpec& spec, const BulletinBoard& board) {
  Filtered out;
  std::vector<Ballot> valid;
  const auto entries = board.entries();
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (validate_ballot(spec, entries[i])) {
      valid.push_back(entries[i]);
    } else {
      out.dropped.push_back(i);
    }
  }
  // Map surviving positions in `valid` back to board entries.
  std::vector<std::size_t> valid_pos;
  for (std::size_t i = 0, d = 0; i < entries.size(); ++i) {
    if (d < out.dropped.size() && out.dropped[d] == i) {
      ++d;
    } else {
      valid_pos.push_back(i);
    }
  }
  for (auto idx : weed_indices(valid, spec.config.weeding)) out.tallied.push_back(&entries[valid_pos[idx]]);
  return out;
}

TallyTranscript homomorphic_core(const Election& election, const BulletinBoard& board, std::int64_t dlog_bound,
                                 bool strict, Rng& rng) {
  const auto& spec = election.spec;
  const auto& params = spec.params;
  const auto kp = election.key_pair();
  auto filtered = filter_and_weed(spec, board);

  TallyTranscript t;
  t.mode = TallyMode::homomorphic;
  t.dropped = std::move(filtered.dropped);
  t.tallied = filtered.tallied.size();
  const auto k = static_cast<std::int64_t>(t.tallied);
  if (strict) dlog_bound = k;

  std::int64_t subtotal = 0;
  for (int col = 0; col + 1 < spec.choices; ++col) {
    Ciphertext combo{params.identity(), params.identity()};
    for (const auto* b : filtered.tallied) combo = hom_add(params, combo, b->ciphertexts[col]);
    auto dec = prove_dec(params, kp, combo, spec.config.fs_mode, rng);
    std::int64_t freq = 0;
    try {
      freq = discrete_log(params, params.div(combo.b, dec.factor), dlog_bound);
    } catch (const DlogOutOfRange&) {
      throw DlogOutOfRange("column " + std::to_string(col + 1) + " does not decrypt to a count in [0, " +
                           std::to_string(dlog_bound) + "]");
    }
    t.ciphertexts.push_back(combo);
    t.decryptions.push_back(std::move(dec));
    t.outcome.frequencies.push_back(freq);
    subtotal += freq;
  }
  const auto last = k - subtotal;
  if (strict && last < 0) {
    throw TallyIntegrityError("frequency of choice " + std::to_string(spec.choices) + " would be negative");
  }
  t.outcome.frequencies.push_back(last);
  return t;
}

}  // namespace

std::string_view to_string(Weeding w) {
  switch (w) {
    case Weeding::none: return "none";
    case Weeding::keep_first: return "keep_first";
    case Weeding::remove_all: return "remove_all";
  }
  return "?";
}

std::string_view to_string(TallyMode m) { return m == TallyMode::homomorphic ? "homomorphic" : "mixnet"; }

std::string_view to_string(BallotRandomness r) {
  return r == BallotRandomness::fresh ? "fresh" : "deterministic";
}

Weeding parse_weeding(std::string_view name) {
  if (name == "none") return Weeding::none;
  if (name == "keep_first") return Weeding::keep_first;
  if (name == "remove_all") return Weeding::remove_all;
  throw InvalidArgument("unknown weeding policy '" + std::string(name) + "'");
}

TallyMode parse_tally_mode(std::string_view name) {
  if (name == "homomorphic") return TallyMode::homomorphic;
  if (name == "mixnet") return TallyMode::mixnet;
  throw InvalidArgument("unknown tally mode '" + std::string(name) + "'");
}

BallotRandomness parse_randomness(std::string_view name) {
  if (name == "fresh") return BallotRandomness::fresh;
  if (name == "deterministic") return BallotRandomness::deterministic;
  throw InvalidArgument("unknown ballot randomness '" + std::string(name) + "'");
}

SchemeConfig SchemeConfig::preset(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) return p.config;
  }
  throw InvalidArgument("unknown scheme preset '" + std::string(name) + "'");
}

std::vector<std::string_view> SchemeConfig::preset_names() {
  std::vector<std::string_view> out;
  for (const auto& p : kPresets) out.push_back(p.name);
  return out;
}

std::string_view preset_name(const SchemeConfig& config) {
  for (const auto& p : kPresets) {
    if (p.config == config) return p.name;
  }
  return "custom";
}

Election setup(const GroupParams& params, int choices, const SchemeConfig& config, Rng& rng) {
  if (choices < 2) throw InvalidArgument("an election needs at least two choices");
  params.validate();
  const auto kp = keygen(params, rng);
  Election e;
  e.spec.choices = choices;
  e.spec.params = params;
  e.spec.pk = kp.pk;
  e.spec.key_proof = prove_key(params, kp, config.fs_mode, rng);
  e.spec.config = config;
  e.sk = kp.sk;
  return e;
}

std::vector<std::int64_t> plaintext_pattern(int choices, Choice v) {
  std::vector<std::int64_t> pattern(static_cast<std::size_t>(choices - 1), 0);
  if (v.value < choices) pattern[static_cast<std::size_t>(v.value - 1)] = 1;
  return pattern;
}

Ballot construct_ballot(const ElectionSpec& spec, Choice v, Rng& rng) {
  if (!spec.valid_choice(v)) {
    throw InvalidArgument("choice " + std::to_string(v.value) + " outside [1, " + std::to_string(spec.choices) + "]");
  }
  const auto& params = spec.params;
  const auto mode = spec.config.fs_mode;
  auto coins = ballot_rng(spec, v, rng);
  Ballot b;

  if (spec.config.tally_mode == TallyMode::mixnet) {
    const auto r = params.random_scalar(coins);
    b.ciphertexts.push_back(encrypt(params, spec.pk, v.value, r));
    b.clause_proofs.push_back(prove_choice(params, spec.pk, b.ciphertexts[0], v.value, spec.choices, r, mode, coins));
    return b;
  }

  const auto pattern = plaintext_pattern(spec.choices, v);
  std::vector<Scalar> rs;
  for (std::size_t col = 0; col < pattern.size(); ++col) {
    rs.push_back(params.random_scalar(coins));
    b.ciphertexts.push_back(encrypt(params, spec.pk, pattern[col], rs.back()));
  }
  for (std::size_t col = 0; col < pattern.size(); ++col) {
    b.clause_proofs.push_back(
        prove_01(params, spec.pk, b.ciphertexts[col], static_cast<int>(pattern[col]), rs[col], col, mode, coins));
  }
  const int total = v.value < spec.choices ? 1 : 0;
  b.sum_proof = prove_sum_01(params, spec.pk, b.ciphertexts, rs, total, mode, coins);
  return b;
}

BallotCheck check_ballot(const ElectionSpec& spec, const Ballot& b) {
  const auto& params = spec.params;
  const auto mode = spec.config.fs_mode;
  auto fail = [](std::string why) { return BallotCheck{false, std::move(why)}; };

  if (spec.config.tally_mode == TallyMode::mixnet) {
    if (b.ciphertexts.size() != 1 || b.clause_proofs.size() != 1 || b.sum_proof) {
      return fail("mixnet ballot shape (one ciphertext, one choice proof)");
    }
    if (!verify_choice(params, spec.pk, b.ciphertexts[0], b.clause_proofs[0], spec.choices, mode)) {
      return fail("choice proof");
    }
    return {};
  }

  const auto columns = static_cast<std::size_t>(spec.choices - 1);
  if (b.ciphertexts.size() != columns) return fail("ciphertext count");
  if (b.clause_proofs.size() != columns) return fail("clause proof count");
  if (!b.sum_proof) return fail("missing sum proof");
  for (std::size_t col = 0; col < columns; ++col) {
    if (!verify_01(params, spec.pk, b.ciphertexts[col], b.clause_proofs[col], col, mode)) {
      return fail("clause proof " + std::to_string(col + 1));
    }
  }
  if (!verify_sum_01(params, spec.pk, b.ciphertexts, *b.sum_proof, mode)) return fail("sum proof");
  return {};
}

std::vector<std::size_t> weed_indices(std::span<const Ballot> ballots, Weeding policy) {
  std::vector<std::size_t> kept;
  if (policy == Weeding::none) {
    for (std::size_t i = 0; i < ballots.size(); ++i) kept.push_back(i);
    return kept;
  }
  std::map<std::string, std::size_t> seen;
  std::vector<std::string> keys;
  for (const auto& b : ballots) {
    keys.push_back(ciphertext_key(b));
    ++seen[keys.back()];
  }
  std::map<std::string, bool> emitted;
  for (std::size_t i = 0; i < ballots.size(); ++i) {
    if (policy == Weeding::remove_all) {
      if (seen[keys[i]] == 1) kept.push_back(i);
    } else if (!emitted[keys[i]]) {
      emitted[keys[i]] = true;
      kept.push_back(i);
    }
  }
  return kept;
}

std::vector<Ballot> weed(std::span<const Ballot> ballots, Weeding policy) {
  std::vector<Ballot> out;
  for (auto i : weed_indices(ballots, policy)) out.push_back(ballots[i]);
  return out;
}

Outcome count_choices(int choices, std::span<const Choice> cast) {
  Outcome out;
  out.frequencies.assign(static_cast<std::size_t>(choices), 0);
  for (auto v : cast) {
    if (v.value < 1 || v.value > choices) throw InvalidArgument("choice out of range");
    ++out.frequencies[static_cast<std::size_t>(v.value - 1)];
  }
  return out;
}

Permutation Permutation::uniform(std::size_t k, Rng& rng) {
  Permutation pi;
  pi.image.resize(k);
  for (std::size_t i = 0; i < k; ++i) pi.image[i] = i;
  for (std::size_t i = k; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(i)));
    std::swap(pi.image[i - 1], pi.image[j]);
  }
  return pi;
}

bool Permutation::is_bijection() const {
  std::vector<bool> hit(image.size(), false);
  for (auto i : image) {
    if (i >= image.size() || hit[i]) return false;
    hit[i] = true;
  }
  return true;
}

TallyTranscript tally_homomorphic(const Election& election, const BulletinBoard& board, Rng& rng) {
  if (election.spec.config.tally_mode != TallyMode::homomorphic) {
    throw InvalidArgument("homomorphic tally on a mixnet election");
  }
  return homomorphic_core(election, board, 0, true, rng);
}

TallyTranscript announce_unchecked(const Election& election, const BulletinBoard& board, std::int64_t dlog_bound,
                                   Rng& rng) {
  return homomorphic_core(election, board, dlog_bound, false, rng);
}

TallyTranscript tally_mixnet(const Election& election, const BulletinBoard& board, Rng& rng) {
  const auto& spec = election.spec;
  if (spec.config.tally_mode != TallyMode::mixnet) throw InvalidArgument("mixnet tally on a homomorphic election");
  const auto& params = spec.params;
  const auto kp = election.key_pair();
  auto filtered = filter_and_weed(spec, board);

  TallyTranscript t;
  t.mode = TallyMode::mixnet;
  t.dropped = std::move(filtered.dropped);
  t.tallied = filtered.tallied.size();

  const auto pi = Permutation::uniform(t.tallied, rng);
  for (auto src : pi.image) {
    t.ciphertexts.push_back(
        reencrypt(params, spec.pk, filtered.tallied[src]->ciphertexts[0], params.random_nonzero_scalar(rng)));
  }
  t.outcome.frequencies.assign(static_cast<std::size_t>(spec.choices), 0);
  for (std::size_t i = 0; i < t.ciphertexts.size(); ++i) {
    const auto& c = t.ciphertexts[i];
    auto dec = prove_dec(params, kp, c, spec.config.fs_mode, rng);
    std::int64_t v = 0;
    try {
      v = discrete_log(params, params.div(c.b, dec.factor), spec.choices);
    } catch (const DlogOutOfRange&) {
      throw DlogOutOfRange("mixed ciphertext " + std::to_string(i + 1) + " does not decrypt to a choice");
    }
    if (v < 1) throw TallyIntegrityError("mixed ciphertext " + std::to_string(i + 1) + " decrypts to 0");
    t.decryptions.push_back(std::move(dec));
    t.revealed.push_back(v);
    ++t.outcome.frequencies[static_cast<std::size_t>(v - 1)];
  }
  return t;
}

TallyTranscript tally(const Election& election, const BulletinBoard& board, Rng& rng) {
  return election.spec.config.tally_mode == TallyMode::mixnet ? tally_mixnet(election, board, rng)
                                                              : tally_homomorphic(election, board, rng);
}

bool VerificationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::string VerificationReport::first_failure() const {
  for (const auto& [name, passed] : checks) {
    if (!passed) return name;
  }
  return {};
}

VerificationReport verify_election_report(const ElectionSpec& spec, const BulletinBoard& board,
                                          const TallyTranscript& t) {
  VerificationReport report;
  auto record = [&](std::string name, bool passed) { report.checks.emplace_back(std::move(name), passed); };
  const auto& params = spec.params;
  const auto mode = spec.config.fs_mode;

  record("spec", spec.choices >= 2 && params.is_valid() && params.is_member(spec.pk) && t.mode == spec.config.tally_mode);
  record("key-proof", verify_key(params, spec.pk, spec.key_proof, mode));

  const auto filtered = filter_and_weed(spec, board);
  record("ballot-validity", filtered.dropped == t.dropped);
  record("weeding", filtered.tallied.size() == t.tallied);
  const auto k = static_cast<std::int64_t>(filtered.tallied.size());

  auto g_to = [&](std::int64_t m) { return params.gen_pow(params.scalar(m)); };
  auto proofs_hold = [&]() {
    if (t.decryptions.size() != t.ciphertexts.size()) return false;
    for (std::size_t i = 0; i < t.ciphertexts.size(); ++i) {
      const auto& d = t.decryptions[i];
      if (!verify_dec(params, spec.pk, t.ciphertexts[i], d.factor, d.proof, mode)) return false;
    }
    return true;
  };

  if (spec.config.tally_mode == TallyMode::homomorphic) {
    const auto columns = static_cast<std::size_t>(std::max(spec.choices - 1, 0));
    bool combos_match = t.ciphertexts.size() == columns;
    for (std::size_t col = 0; combos_match && col < columns; ++col) {
      Ciphertext combo{params.identity(), params.identity()};
      for (const auto* b : filtered.tallied) combo = hom_add(params, combo, b->ciphertexts[col]);
      combos_match = combo == t.ciphertexts[col];
    }
    record("combination", combos_match);
    record("decryption-proofs", proofs_hold());

    bool values_match = t.outcome.frequencies.size() == static_cast<std::size_t>(spec.choices) &&
                        t.decryptions.size() == columns;
    for (std::size_t col = 0; values_match && col < columns; ++col) {
      values_match = g_to(t.outcome.frequencies[col]) == params.div(t.ciphertexts[col].b, t.decryptions[col].factor);
    }
    record("decryption-values", values_match);

    bool formula = t.outcome.frequencies.size() == static_cast<std::size_t>(spec.choices);
    if (formula) {
      std::int64_t subtotal = 0;
      for (std::size_t col = 0; col < columns; ++col) subtotal += t.outcome.frequencies[col];
      formula = t.outcome.frequencies.back() == k - subtotal;
    }
    record("subtraction-formula", formula);
  } else {
    const auto n = filtered.tallied.size();
    record("mix-size", t.ciphertexts.size() == n && t.decryptions.size() == n && t.revealed.size() == n);
    record("decryption-proofs", proofs_hold());

    bool values_match = t.revealed.size() == t.ciphertexts.size() && t.decryptions.size() == t.ciphertexts.size();
    for (std::size_t i = 0; values_match && i < t.revealed.size(); ++i) {
      values_match = t.revealed[i] >= 1 && t.revealed[i] <= spec.choices &&
                     g_to(t.revealed[i]) == params.div(t.ciphertexts[i].b, t.decryptions[i].factor);
    }
    record("decryption-values", values_match);

    bool counts_match = values_match;
    if (counts_match) {
      std::vector<Choice> cast;
      for (auto v : t.revealed) cast.push_back(Choice{static_cast<int>(v)});
      counts_match = count_choices(spec.choices, cast) == t.outcome;
    }
    record("frequency-count", counts_match);
  }
  return report;
}

bool check_recorded(const BulletinBoard& board, const Ballot& b) {
  const auto entries = board.entries();
  return std::find(entries.begin(), entries.end(), b) != entries.end();
}

}  // namespace helios
