#pragma once

// Canonical record encoding shared by proofs (challenge hashing) and the
// on-disk bundle: base-10 big integers, '|' separated tokens, one record per
// line, every composite value introduced by a type tag.

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace helios {

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> bytes);
Digest sha256(std::string_view text);
std::string to_hex(std::span<const std::uint8_t> bytes);

/// Canonical base-10 rendering of a non-negative big integer.
std::string to_decimal(const mpz_class& value);

class TokenWriter {
 public:
  TokenWriter() = default;
  explicit TokenWriter(std::string_view tag) { put(tag); }

  TokenWriter& put(std::string_view token);
  TokenWriter& put(const mpz_class& value);
  TokenWriter& put(std::int64_t value);
  TokenWriter& put_count(std::size_t value);

  const std::string& str() const { return out_; }
  bool empty() const { return out_.empty(); }

 private:
  std::string out_;
};

class TokenReader {
 public:
  /// Copies the record; returned views stay valid for the reader's lifetime.
  explicit TokenReader(std::string_view record);
  TokenReader(const TokenReader&) = delete;
  TokenReader& operator=(const TokenReader&) = delete;

  std::string_view next();
  void expect(std::string_view tag);
  mpz_class big();
  std::int64_t integer();
  std::size_t count();
  bool done() const { return pos_ == tokens_.size(); }
  void finish() const;

 private:
  std::string record_;
  std::vector<std::string_view> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace helios
