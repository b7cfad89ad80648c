#include "helios/bundle.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "helios/errors.hpp"
#include "helios/serialize.hpp"

namespace helios {

namespace fs = std::filesystem;

std::string read_record(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read " + path.string());
  std::string line;
  std::getline(in, line);
  return line;
}

void write_record(const fs::path& path, const std::string& record) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw InvalidArgument("cannot write " + path.string());
  out << record << '\n';
  if (!out) throw Error("write failed: " + path.string());
}

Scalar read_secret(const fs::path& path) { return parse_secret(read_record(path)); }

TallyTranscript read_transcript(const fs::path& path) { return parse_transcript(read_record(path)); }

Bundle Bundle::locate(const std::string& flag) {
  if (!flag.empty()) return Bundle(flag);
  if (const char* env = std::getenv(kBundleEnv); env != nullptr && *env != '\0') return Bundle(env);
  throw InvalidArgument(std::string("no bundle directory given and ") + kBundleEnv + " is unset");
}

void Bundle::write_setup(const Election& election) const {
  fs::create_directories(dir_);
  write_record(params_path(), to_record(election.spec.params));
  write_record(spec_path(), to_record(election.spec));
  write_record(secret_path(), secret_record(election.sk));
  fs::permissions(secret_path(), fs::perms::owner_read | fs::perms::owner_write, fs::perm_options::replace);
}

ElectionSpec Bundle::read_spec() const {
  auto spec = parse_spec(read_record(spec_path()));
  if (fs::exists(params_path()) && !(parse_params(read_record(params_path())) == spec.params)) {
    throw DecodeError("params file disagrees with the spec");
  }
  return spec;
}

BulletinBoard Bundle::read_board() const {
  BulletinBoard board;
  std::ifstream in(board_path(), std::ios::binary);
  if (!in) return board;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    try {
      board.append(parse_ballot(line));
    } catch (const DecodeError& e) {
      throw DecodeError("board line " + std::to_string(n) + ": " + e.what());
    }
  }
  return board;
}

void Bundle::append_ballot(const Ballot& b) const {
  std::ofstream out(board_path(), std::ios::binary | std::ios::app);
  if (!out) throw InvalidArgument("cannot append to " + board_path().string());
  out << to_record(b) << '\n';
  if (!out) throw Error("write failed: " + board_path().string());
}

void Bundle::write_tally(const TallyTranscript& t) const {
  write_record(transcript_path(), to_record(t));
  write_record(outcome_path(), to_record(t.outcome));
}

}  // namespace helios
