#pragma once

// Canonical records for every persisted or hashed value. Each composite is
// its type tag followed by its fields in declaration order, so encodings are
// injective and byte-stable across platforms.

#include <string>
#include <string_view>

#include "helios/election.hpp"
#include "helios/encoding.hpp"
#include "helios/games.hpp"

namespace helios {

void put(TokenWriter& w, const GroupParams& params);
void put(TokenWriter& w, const Ciphertext& c);
void put(TokenWriter& w, const SchnorrProof& proof);
void put(TokenWriter& w, const EqDlogProof& proof);
void put(TokenWriter& w, const DecryptionProof& dec);
void put(TokenWriter& w, const DisjunctiveProof& proof);
void put(TokenWriter& w, const SchemeConfig& config);
void put(TokenWriter& w, const ElectionSpec& spec);
void put(TokenWriter& w, const Ballot& b);
void put(TokenWriter& w, const Outcome& outcome);
void put(TokenWriter& w, const TallyTranscript& t);

GroupParams get_params(TokenReader& r);
Ciphertext get_ciphertext(TokenReader& r);
SchnorrProof get_schnorr(TokenReader& r);
EqDlogProof get_eqdlog(TokenReader& r);
DecryptionProof get_decryption(TokenReader& r);
DisjunctiveProof get_disjunctive(TokenReader& r);
SchemeConfig get_config(TokenReader& r);
ElectionSpec get_spec(TokenReader& r);
Ballot get_ballot(TokenReader& r);
Outcome get_outcome(TokenReader& r);
TallyTranscript get_transcript(TokenReader& r);

template <class T>
std::string to_record(const T& value) {
  TokenWriter w;
  put(w, value);
  return w.str();
}

std::string secret_record(const Scalar& sk);
Scalar parse_secret(std::string_view record);

GroupParams parse_params(std::string_view record);
ElectionSpec parse_spec(std::string_view record);
Ballot parse_ballot(std::string_view record);
Outcome parse_outcome(std::string_view record);
TallyTranscript parse_transcript(std::string_view record);

/// Hex SHA-256 of the spec record.
std::string spec_digest(const ElectionSpec& spec);

std::string advantage_record(const Advantage& adv);
/// Header line of a dumped trial; the trace's transcript records follow it, one per line.
std::string trace_header(std::size_t trial, const GameTrace& trace);

}  // namespace helios
