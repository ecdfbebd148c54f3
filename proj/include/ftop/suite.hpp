#pragma once

#include "ftop/collapse.hpp"
#include "ftop/io.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ftop {

/// Version string folded into every report; reports are a pure function of
/// (inputs, seed, version).
extern const char* const kVersion;

struct RunConfig {
  std::uint64_t seed = 1;
  int restarts = 8;
  std::size_t max_subsets = 20;
  std::size_t random_instances = 200;
  /// Golden inputs are read from here when set; built-in copies otherwise.
  /// Every *.certificate.json directly inside is replayed.
  std::optional<std::filesystem::path> fixtures;
};

/// A certificate together with the object it starts from, in the on-disk
/// format {"object": ..., "target": ..., "steps": [...]}.
struct CertificateFile {
  io::Json object;
  std::optional<io::Json> target;
  CollapseCertificate certificate;
};

io::Json to_json(const CertificateFile& file);
/// Relative "object" / "target" paths are resolved against `base`.
CertificateFile certificate_file_from_json(const io::Json& doc, const std::filesystem::path& base = {});
ReplayOutcome replay(const CertificateFile& file);

struct CheckRecord {
  std::string name;
  /// FNV-1a of the serialized inputs, hex.
  std::string inputs_digest;
  std::map<std::string, Verdict> hypotheses;
  std::map<std::string, Verdict> conclusions;
  /// Relative path of the certificate backing a Yes claim, if any.
  std::optional<std::string> certificate;
  bool passed = true;
  std::string message;
};

struct SuiteReport {
  std::string version;
  std::uint64_t seed = 0;
  /// Sorted by name.
  std::vector<CheckRecord> checks;
  std::map<std::string, CertificateFile> certificates;
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t unknown = 0;
  std::size_t replay_failures = 0;
  std::size_t mismatches = 0;

  bool passed() const { return replay_failures == 0 && mismatches == 0; }
};

std::string fnv1a_hex(const std::string& text);

/// Throws Error for unreadable or malformed fixture files.
SuiteReport run_suite(const RunConfig& config);
io::Json to_json(const SuiteReport& report);

}  // namespace ftop
