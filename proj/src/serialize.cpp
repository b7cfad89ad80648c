#include "helios/serialize.hpp"

#include <cstdio>

#include "helios/errors.hpp"

namespace helios {

namespace {

GroupElement get_element(TokenReader& r) { return GroupElement{r.big()}; }
Scalar get_scalar(TokenReader& r) { return Scalar{r.big()}; }

template <class F>
auto parse_whole(std::string_view record, F&& get) {
  TokenReader r(record);
  auto value = get(r);
  r.finish();
  return value;
}

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

void put(TokenWriter& w, const GroupParams& params) {
  w.put("params").put(params.p).put(params.q).put(params.g);
}

void put(TokenWriter& w, const Ciphertext& c) { w.put("ct").put(c.a.value).put(c.b.value); }

void put(TokenWriter& w, const SchnorrProof& proof) {
  w.put("schnorr").put(proof.commitment.value).put(proof.challenge.value).put(proof.response.value);
}

void put(TokenWriter& w, const EqDlogProof& proof) {
  w.put("eqdlog")
      .put(proof.commit_a.value)
      .put(proof.commit_b.value)
      .put(proof.challenge.value)
      .put(proof.response.value);
}

void put(TokenWriter& w, const DecryptionProof& dec) {
  w.put("dec").put(dec.factor.value);
  put(w, dec.proof);
}

void put(TokenWriter& w, const DisjunctiveProof& proof) {
  w.put("disj").put_count(proof.clauses.size());
  for (const auto& c : proof.clauses) {
    w.put(c.commit_a.value).put(c.commit_b.value).put(c.challenge.value).put(c.response.value);
  }
}

void put(TokenWriter& w, const SchemeConfig& config) {
  w.put("config")
      .put(to_string(config.fs_mode))
      .put(to_string(config.weeding))
      .put(to_string(config.tally_mode))
      .put(to_string(config.randomness));
}

void put(TokenWriter& w, const ElectionSpec& spec) {
  w.put("spec").put(static_cast<std::int64_t>(spec.choices));
  put(w, spec.params);
  w.put("pk").put(spec.pk.value);
  put(w, spec.key_proof);
  put(w, spec.config);
}

void put(TokenWriter& w, const Ballot& b) {
  w.put("ballot").put_count(b.ciphertexts.size());
  for (const auto& c : b.ciphertexts) put(w, c);
  w.put_count(b.clause_proofs.size());
  for (const auto& p : b.clause_proofs) put(w, p);
  w.put("sum");
  if (b.sum_proof) {
    w.put("1");
    put(w, *b.sum_proof);
  } else {
    w.put("0");
  }
}

void put(TokenWriter& w, const Outcome& outcome) {
  w.put("outcome").put_count(outcome.frequencies.size());
  for (auto f : outcome.frequencies) w.put(f);
}

void put(TokenWriter& w, const TallyTranscript& t) {
  w.put("transcript").put(to_string(t.mode));
  w.put("dropped").put_count(t.dropped.size());
  for (auto i : t.dropped) w.put_count(i);
  w.put("tallied").put_count(t.tallied);
  w.put("ciphertexts").put_count(t.ciphertexts.size());
  for (const auto& c : t.ciphertexts) put(w, c);
  w.put("decryptions").put_count(t.decryptions.size());
  for (const auto& d : t.decryptions) put(w, d);
  w.put("revealed").put_count(t.revealed.size());
  for (auto v : t.revealed) w.put(v);
  put(w, t.outcome);
}

GroupParams get_params(TokenReader& r) {
  r.expect("params");
  GroupParams params;
  params.p = r.big();
  params.q = r.big();
  params.g = r.big();
  return params;
}

Ciphertext get_ciphertext(TokenReader& r) {
  r.expect("ct");
  Ciphertext c;
  c.a = get_element(r);
  c.b = get_element(r);
  return c;
}

SchnorrProof get_schnorr(TokenReader& r) {
  r.expect("schnorr");
  SchnorrProof p;
  p.commitment = get_element(r);
  p.challenge = get_scalar(r);
  p.response = get_scalar(r);
  return p;
}

EqDlogProof get_eqdlog(TokenReader& r) {
  r.expect("eqdlog");
  EqDlogProof p;
  p.commit_a = get_element(r);
  p.commit_b = get_element(r);
  p.challenge = get_scalar(r);
  p.response = get_scalar(r);
  return p;
}

DecryptionProof get_decryption(TokenReader& r) {
  r.expect("dec");
  DecryptionProof d;
  d.factor = get_element(r);
  d.proof = get_eqdlog(r);
  return d;
}

DisjunctiveProof get_disjunctive(TokenReader& r) {
  r.expect("disj");
  DisjunctiveProof p;
  p.clauses.resize(r.count());
  for (auto& c : p.clauses) {
    c.commit_a = get_element(r);
    c.commit_b = get_element(r);
    c.challenge = get_scalar(r);
    c.response = get_scalar(r);
  }
  return p;
}

SchemeConfig get_config(TokenReader& r) {
  r.expect("config");
  try {
    SchemeConfig config;
    config.fs_mode = parse_fs_mode(r.next());
    config.weeding = parse_weeding(r.next());
    config.tally_mode = parse_tally_mode(r.next());
    config.randomness = parse_randomness(r.next());
    return config;
  } catch (const InvalidArgument& e) {
    throw DecodeError(e.what());
  }
}

ElectionSpec get_spec(TokenReader& r) {
  r.expect("spec");
  ElectionSpec spec;
  const auto choices = r.integer();
  if (choices < 2 || choices > 1'000'000) throw DecodeError("choice count out of range");
  spec.choices = static_cast<int>(choices);
  spec.params = get_params(r);
  r.expect("pk");
  spec.pk = get_element(r);
  spec.key_proof = get_schnorr(r);
  spec.config = get_config(r);
  return spec;
}

Ballot get_ballot(TokenReader& r) {
  r.expect("ballot");
  Ballot b;
  b.ciphertexts.resize(r.count());
  for (auto& c : b.ciphertexts) c = get_ciphertext(r);
  b.clause_proofs.resize(r.count());
  for (auto& p : b.clause_proofs) p = get_disjunctive(r);
  r.expect("sum");
  const auto flag = r.next();
  if (flag == "1") {
    b.sum_proof = get_disjunctive(r);
  } else if (flag != "0") {
    throw DecodeError("sum proof flag must be 0 or 1");
  }
  return b;
}

Outcome get_outcome(TokenReader& r) {
  r.expect("outcome");
  Outcome o;
  o.frequencies.resize(r.count());
  for (auto& f : o.frequencies) f = r.integer();
  return o;
}

TallyTranscript get_transcript(TokenReader& r) {
  r.expect("transcript");
  TallyTranscript t;
  try {
    t.mode = parse_tally_mode(r.next());
  } catch (const InvalidArgument& e) {
    throw DecodeError(e.what());
  }
  r.expect("dropped");
  t.dropped.resize(r.count());
  for (auto& i : t.dropped) i = r.count();
  r.expect("tallied");
  t.tallied = r.count();
  r.expect("ciphertexts");
  t.ciphertexts.resize(r.count());
  for (auto& c : t.ciphertexts) c = get_ciphertext(r);
  r.expect("decryptions");
  t.decryptions.resize(r.count());
  for (auto& d : t.decryptions) d = get_decryption(r);
  r.expect("revealed");
  t.revealed.resize(r.count());
  for (auto& v : t.revealed) v = r.integer();
  t.outcome = get_outcome(r);
  return t;
}

std::string secret_record(const Scalar& sk) {
  TokenWriter w("secret");
  w.put(sk.value);
  return w.str();
}

Scalar parse_secret(std::string_view record) {
  return parse_whole(record, [](TokenReader& r) {
    r.expect("secret");
    return get_scalar(r);
  });
}

GroupParams parse_params(std::string_view record) { return parse_whole(record, get_params); }
ElectionSpec parse_spec(std::string_view record) { return parse_whole(record, get_spec); }
Ballot parse_ballot(std::string_view record) { return parse_whole(record, get_ballot); }
Outcome parse_outcome(std::string_view record) { return parse_whole(record, get_outcome); }
TallyTranscript parse_transcript(std::string_view record) { return parse_whole(record, get_transcript); }

std::string spec_digest(const ElectionSpec& spec) { return to_hex(sha256(to_record(spec))); }

std::string advantage_record(const Advantage& adv) {
  TokenWriter w("advantage");
  w.put(to_string(adv.game)).put(adv.adversary).put(adv.config);
  w.put_count(adv.trials).put_count(adv.wins).put_count(adv.aborts).put_count(adv.rejected);
  w.put(fixed6(adv.rate)).put(fixed6(adv.estimate)).put(fixed6(adv.band_low)).put(fixed6(adv.band_high));
  return w.str();
}

std::string trace_header(std::size_t trial, const GameTrace& trace) {
  TokenWriter w("trace");
  w.put_count(trial)
      .put(static_cast<std::int64_t>(trace.beta))
      .put(static_cast<std::int64_t>(trace.guess))
      .put(trace.win ? "win" : "loss")
      .put(trace.side_condition_met ? "balanced" : "unbalanced")
      .put(trace.aborted ? "aborted" : "completed")
      .put_count(trace.rejected_ballots)
      .put_count(trace.transcript.size());
  return w.str();
}

}  // namespace helios
