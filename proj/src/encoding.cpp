#include "helios/encoding.hpp"

#include <charconv>

#include <openssl/evp.h>

#include "helios/errors.hpp"

namespace helios {

Digest sha256(std::span<const std::uint8_t> bytes) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size()) {
    throw Error("sha256 failed");
  }
  return out;
}

Digest sha256(std::string_view text) {
  return sha256(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (auto b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

std::string to_decimal(const mpz_class& value) {
  if (sgn(value) < 0) throw InvalidArgument("canonical big integers are non-negative");
  return value.get_str(10);
}

TokenWriter& TokenWriter::put(std::string_view token) {
  if (!out_.empty()) out_.push_back('|');
  out_.append(token);
  return *this;
}

TokenWriter& TokenWriter::put(const mpz_class& value) { return put(to_decimal(value)); }

TokenWriter& TokenWriter::put(std::int64_t value) { return put(std::to_string(value)); }

TokenWriter& TokenWriter::put_count(std::size_t value) { return put(std::to_string(value)); }

TokenReader::TokenReader(std::string_view input) : record_(input) {
  std::string_view record = record_;
  if (!record.empty() && record.back() == '\n') record.remove_suffix(1);
  std::size_t start = 0;
  while (true) {
    auto bar = record.find('|', start);
    tokens_.push_back(record.substr(start, bar == std::string_view::npos ? bar : bar - start));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
}

std::string_view TokenReader::next() {
  if (pos_ >= tokens_.size()) throw DecodeError("record truncated");
  return tokens_[pos_++];
}

void TokenReader::expect(std::string_view tag) {
  auto got = next();
  if (got != tag) {
    throw DecodeError("expected '" + std::string(tag) + "' but found '" + std::string(got) + "'");
  }
}

namespace {

bool is_canonical_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return s.size() == 1 || s.front() != '0';
}

}  // namespace

mpz_class TokenReader::big() {
  auto tok = next();
  if (!is_canonical_digits(tok)) throw DecodeError("not a canonical integer: '" + std::string(tok) + "'");
  return mpz_class(std::string(tok), 10);
}

std::int64_t TokenReader::integer() {
  auto tok = next();
  auto digits = tok;
  if (!digits.empty() && digits.front() == '-') digits.remove_prefix(1);
  if (!is_canonical_digits(digits) || tok == "-0") {
    throw DecodeError("not a canonical integer: '" + std::string(tok) + "'");
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
    throw DecodeError("integer out of range: '" + std::string(tok) + "'");
  }
  return value;
}

std::size_t TokenReader::count() {
  auto value = integer();
  if (value < 0) throw DecodeError("negative count");
  // Every counted item occupies at least one token.
  if (static_cast<std::size_t>(value) > tokens_.size() - pos_) throw DecodeError("count exceeds record length");
  return static_cast<std::size_t>(value);
}

void TokenReader::finish() const {
  if (!done()) throw DecodeError("trailing fields in record");
}

}  // namespace helios
