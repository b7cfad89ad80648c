#pragma once

// On-disk election bundle: one directory, one canonical record per line.

#include <filesystem>
#include <optional>
#include <string>

#include "helios/election.hpp"

namespace helios {

/// Default bundle directory when a command omits one.
inline constexpr const char* kBundleEnv = "HELIOS_BUNDLE";

class Bundle {
 public:
  explicit Bundle(std::filesystem::path dir) : dir_(std::move(dir)) {}

  /// Directory from `flag`, else $HELIOS_BUNDLE, else InvalidArgument.
  static Bundle locate(const std::string& flag);

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path params_path() const { return dir_ / "params.txt"; }
  std::filesystem::path spec_path() const { return dir_ / "spec.txt"; }
  std::filesystem::path secret_path() const { return dir_ / "secret.txt"; }
  std::filesystem::path board_path() const { return dir_ / "board.txt"; }
  std::filesystem::path transcript_path() const { return dir_ / "transcript.txt"; }
  std::filesystem::path outcome_path() const { return dir_ / "outcome.txt"; }

  void write_setup(const Election& election) const;
  ElectionSpec read_spec() const;

  /// Missing board file reads as an empty board.
  BulletinBoard read_board() const;
  void append_ballot(const Ballot& b) const;

  void write_tally(const TallyTranscript& t) const;

 private:
  std::filesystem::path dir_;
};

std::string read_record(const std::filesystem::path& path);
void write_record(const std::filesystem::path& path, const std::string& record);
Scalar read_secret(const std::filesystem::path& path);
TallyTranscript read_transcript(const std::filesystem::path& path);

}  // namespace helios
