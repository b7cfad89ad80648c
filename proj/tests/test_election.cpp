#include <algorithm>

#include "helios/elgamal.hpp"
#include "helios/errors.hpp"
#include "support.hpp"

using namespace helios;
using helios::testing::make_election;

namespace {

BulletinBoard cast_all(const ElectionSpec& spec, std::initializer_list<int> choices, Rng& rng) {
  BulletinBoard board;
  for (int v : choices) board.append(construct_ballot(spec, Choice{v}, rng));
  return board;
}

std::vector<std::int64_t> decrypted_pattern(const Election& e, const Ballot& b) {
  std::vector<std::int64_t> out;
  for (const auto& c : b.ciphertexts) out.push_back(decrypt(e.spec.params, e.sk, c, 5));
  return out;
}

}  // namespace

TEST_CASE("presets") {
  for (auto name : SchemeConfig::preset_names()) {
    CHECK(preset_name(SchemeConfig::preset(name)) == name);
  }
  CHECK(SchemeConfig::preset("helios2.0").fs_mode == FsMode::weak);
  CHECK(SchemeConfig::preset("helios16").fs_mode == FsMode::strong);
  CHECK(SchemeConfig::preset("helios12-removeall").weeding == Weeding::remove_all);
  CHECK_THROWS_AS(SchemeConfig::preset("helios3"), InvalidArgument);
}

TEST_CASE("setup") {
  const auto e = make_election("helios16", 3, 1);
  CHECK(verify_key(e.spec.params, e.spec.pk, e.spec.key_proof, FsMode::strong));
  CHECK(e.spec.params.gen_pow(e.sk) == e.spec.pk);
  Rng rng(1);
  CHECK_THROWS_AS(setup(helios::testing::small_group(), 1, SchemeConfig::preset("helios16"), rng), InvalidArgument);
  CHECK_THROWS_AS(setup(GroupParams{23, 11, 1}, 2, SchemeConfig::preset("helios16"), rng), InvalidParams);
}

TEST_CASE("plaintext patterns") {
  CHECK(plaintext_pattern(3, Choice{1}) == std::vector<std::int64_t>{1, 0});
  CHECK(plaintext_pattern(3, Choice{2}) == std::vector<std::int64_t>{0, 1});
  CHECK(plaintext_pattern(3, Choice{3}) == std::vector<std::int64_t>{0, 0});
  CHECK(plaintext_pattern(2, Choice{1}) == std::vector<std::int64_t>{1});
}

TEST_CASE("ballots encrypt the pattern and validate") {
  for (auto preset : {"helios2.0", "helios16", "mixnet"}) {
    const auto e = make_election(preset, 3, 2);
    Rng rng(2);
    for (int v = 1; v <= 3; ++v) {
      const auto b = construct_ballot(e.spec, Choice{v}, rng);
      CHECK(validate_ballot(e.spec, b));
      if (e.spec.config.tally_mode == TallyMode::mixnet) {
        CHECK(b.ciphertexts.size() == 1);
        CHECK(decrypt(e.spec.params, e.sk, b.ciphertexts[0], 3) == v);
      } else {
        CHECK(decrypted_pattern(e, b) == plaintext_pattern(3, Choice{v}));
      }
      CHECK_FALSE(b == construct_ballot(e.spec, Choice{v}, rng));
    }
    CHECK_THROWS_AS(construct_ballot(e.spec, Choice{4}, rng), InvalidArgument);
    CHECK_THROWS_AS(construct_ballot(e.spec, Choice{0}, rng), InvalidArgument);
  }
}

TEST_CASE("ballot mutations are rejected with a named failure") {
  const auto e = make_election("helios16", 3, 3);
  Rng rng(3);
  const auto b = construct_ballot(e.spec, Choice{2}, rng);

  auto bad = b;
  bad.clause_proofs[1].clauses[0].response = e.spec.params.add(bad.clause_proofs[1].clauses[0].response, Scalar{1});
  auto check = check_ballot(e.spec, bad);
  CHECK_FALSE(check.ok);
  CHECK(check.failure == "clause proof 2");  // columns are numbered from 1

  bad = b;
  bad.sum_proof->clauses[1].challenge = e.spec.params.add(bad.sum_proof->clauses[1].challenge, Scalar{1});
  CHECK(check_ballot(e.spec, bad).failure == "sum proof");

  bad = b;
  bad.sum_proof.reset();
  CHECK(check_ballot(e.spec, bad).failure == "missing sum proof");

  bad = b;
  bad.ciphertexts.pop_back();
  CHECK(check_ballot(e.spec, bad).failure == "ciphertext count");
}

TEST_CASE("deterministic toy config repeats ballots") {
  const auto e = make_election("toy-deterministic", 2, 4);
  Rng a(1), b(2);
  CHECK(construct_ballot(e.spec, Choice{1}, a) == construct_ballot(e.spec, Choice{1}, b));
  CHECK_FALSE(construct_ballot(e.spec, Choice{1}, a) == construct_ballot(e.spec, Choice{2}, b));
}

TEST_CASE("weeding") {
  const auto e = make_election("helios2.0", 2, 5);
  Rng rng(5);
  const auto b = construct_ballot(e.spec, Choice{1}, rng);
  const auto b2 = construct_ballot(e.spec, Choice{2}, rng);
  std::vector<Ballot> plain{b, b2};
  CHECK(weed(plain, Weeding::keep_first) == plain);
  CHECK(weed(plain, Weeding::remove_all) == plain);

  std::vector<Ballot> board{b, b, b2};
  CHECK(weed(board, Weeding::none) == board);
  CHECK(weed(board, Weeding::keep_first) == std::vector<Ballot>{b, b2});
  CHECK(weed(board, Weeding::remove_all) == std::vector<Ballot>{b2});

  // Duplicates are keyed on ciphertexts only.
  auto same_ct = construct_ballot(e.spec, Choice{2}, rng);
  same_ct.ciphertexts = b.ciphertexts;
  std::vector<Ballot> mixed{b, same_ct};
  CHECK(weed_indices(mixed, Weeding::keep_first) == std::vector<std::size_t>{0});
}

TEST_CASE("homomorphic tally example") {
  const auto e = make_election("helios16", 3, 6);
  Rng rng(6);
  const auto board = cast_all(e.spec, {1, 3, 1}, rng);
  const auto t = tally(e, board, rng);
  CHECK(t.outcome.frequencies == std::vector<std::int64_t>{2, 0, 1});
  CHECK(t.tallied == 3);
  CHECK(verify_election(e.spec, board, t));

  const auto empty = tally(e, BulletinBoard{}, rng);
  CHECK(empty.outcome.frequencies == std::vector<std::int64_t>{0, 0, 0});
  CHECK(verify_election(e.spec, BulletinBoard{}, empty));
}

TEST_CASE("referendum") {
  const auto e = make_election("helios2.0", 2, 7);
  Rng rng(7);
  const auto board = cast_all(e.spec, {1, 1, 2}, rng);
  CHECK(tally(e, board, rng).outcome.frequencies == std::vector<std::int64_t>{2, 1});
}

TEST_CASE("mixnet tally") {
  const auto e = make_election("mixnet", 4, 8);
  Rng rng(8);
  const auto one = cast_all(e.spec, {3}, rng);
  const auto t1 = tally(e, one, rng);
  CHECK(t1.revealed == std::vector<std::int64_t>{3});
  CHECK(verify_election(e.spec, one, t1));

  for (int trial = 0; trial < 100; ++trial) {
    const auto k = 2 + rng.below(std::uint64_t{6});
    BulletinBoard board;
    std::vector<std::int64_t> cast;
    for (std::uint64_t i = 0; i < k; ++i) {
      const int v = 1 + static_cast<int>(rng.below(std::uint64_t{4}));
      cast.push_back(v);
      board.append(construct_ballot(e.spec, Choice{v}, rng));
    }
    const auto t = tally(e, board, rng);
    auto revealed = t.revealed;
    std::sort(revealed.begin(), revealed.end());
    std::sort(cast.begin(), cast.end());
    CHECK(revealed == cast);
    for (std::size_t i = 0; i < k; ++i) CHECK_FALSE(t.ciphertexts[i] == board.entries()[i].ciphertexts[0]);
    CHECK(verify_election(e.spec, board, t));
  }
}

TEST_CASE("permutations") {
  Rng rng(9);
  for (std::size_t k : {0u, 1u, 2u, 10u}) CHECK(Permutation::uniform(k, rng).is_bijection());
  CHECK_FALSE(Permutation{{0, 0}}.is_bijection());
  CHECK_FALSE(Permutation{{0, 2}}.is_bijection());
}

TEST_CASE("verification catches tampering") {
  const auto e = make_election("helios16", 3, 10);
  Rng rng(10);
  const auto board = cast_all(e.spec, {1, 2, 2}, rng);
  const auto t = tally(e, board, rng);
  REQUIRE(verify_election(e.spec, board, t));

  auto bumped = t;
  bumped.outcome.frequencies[0] += 1;
  const auto report = verify_election_report(e.spec, board, bumped);
  CHECK_FALSE(report.ok());
  CHECK(report.first_failure() == "decryption-values");

  auto last = t;
  last.outcome.frequencies[2] += 1;
  CHECK(verify_election_report(e.spec, board, last).first_failure() == "subtraction-formula");

  auto forged_factor = t;
  forged_factor.decryptions[0].factor = e.spec.params.mul(forged_factor.decryptions[0].factor, e.spec.params.generator());
  CHECK_FALSE(verify_election(e.spec, board, forged_factor));

  BulletinBoard shorter(std::vector<Ballot>(board.entries().begin(), board.entries().end() - 1));
  CHECK_FALSE(verify_election(e.spec, shorter, t));

  auto spec = e.spec;
  spec.key_proof.response = spec.params.add(spec.key_proof.response, Scalar{1});
  CHECK(verify_election_report(spec, board, t).first_failure() == "key-proof");
}

TEST_CASE("invalid ballots are dropped and recorded") {
  const auto e = make_election("helios16", 2, 11);
  Rng rng(11);
  auto board = cast_all(e.spec, {1, 2}, rng);
  auto bad = construct_ballot(e.spec, Choice{1}, rng);
  bad.clause_proofs[0].clauses[1].response = e.spec.params.add(bad.clause_proofs[0].clauses[1].response, Scalar{1});
  board.append(bad);
  const auto t = tally(e, board, rng);
  CHECK(t.dropped == std::vector<std::size_t>{2});
  CHECK(t.outcome.frequencies == std::vector<std::int64_t>{1, 1});
  CHECK(verify_election(e.spec, board, t));
}

TEST_CASE("check_recorded") {
  const auto e = make_election("helios16", 2, 12);
  Rng rng(12);
  const auto b = construct_ballot(e.spec, Choice{1}, rng);
  CHECK_FALSE(check_recorded(BulletinBoard{}, b));
  BulletinBoard board;
  board.append(b);
  board.append(construct_ballot(e.spec, Choice{2}, rng));
  CHECK(check_recorded(board, b));
  BulletinBoard excluded(std::vector<Ballot>(board.entries().begin() + 1, board.entries().end()));
  CHECK_FALSE(check_recorded(excluded, b));
}

TEST_CASE("count_choices") {
  const std::vector<Choice> cast{Choice{1}, Choice{3}, Choice{1}};
  CHECK(count_choices(3, cast).frequencies == std::vector<std::int64_t>{2, 0, 1});
}
