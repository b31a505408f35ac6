#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bspec/enumerate.hpp"

namespace bspec::cli {

using nlohmann::json;

inline constexpr const char* kVersion = "1.0.0";
inline constexpr int kSchemaVersion = 1;

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsageError = 2 };

struct RunConfig {
  std::string field = "gf4";
  std::optional<std::uint32_t> modulus;
  /// Defaults to 4 where a size is needed; lemma harnesses pick their own sizes when unset.
  std::optional<std::size_t> n;
  std::optional<std::size_t> m;
  std::string construction;
  /// Path of a space JSON file; replaces the construction when set.
  std::string space_file;
  std::string pred = "1-spec";
  std::optional<std::size_t> k;
  /// Unset: 2^24 for space scans, 2^14 for the inner scans of lemma harnesses.
  std::optional<std::uint64_t> budget;
  /// Unset: 10^6 for space scans, 2048 inside lemma harnesses.
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 1;
  unsigned workers = 1;
  std::string lemma;
  std::uint64_t trials = 200;
  /// Choice Lemma input: rows separated by ';', codes by ','.
  std::string matrix;
  std::string target;
  std::size_t p = 1;
};

json config_json(const RunConfig& c);

struct CommandResult {
  json report;
  int exit_code = kOk;
};

CommandResult cmd_verify(const RunConfig& c);
CommandResult cmd_scan_adapted(const RunConfig& c);
CommandResult cmd_detect_hurdle(const RunConfig& c);
CommandResult cmd_trk(const RunConfig& c);
CommandResult cmd_choice(const RunConfig& c);
CommandResult cmd_lemma(const RunConfig& c);
CommandResult cmd_acceptance(const RunConfig& c);

// Acceptance suite

struct AcceptanceOptions {
  std::uint64_t seed = 1;
  unsigned workers = 1;
  /// Worker counts compared by the determinism criterion; empty skips it.
  std::vector<unsigned> determinism_workers{1, 4, 8};
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  json details;
  double timing_ms = 0;
};

struct AcceptanceReport {
  std::vector<CriterionResult> criteria;
  bool passed() const;
  json to_json() const;
};

/// Criteria 1-10 only.
std::vector<CriterionResult> run_criteria(std::uint64_t seed, unsigned workers);
/// Criteria 1-11; the last compares reports across determinism_workers.
AcceptanceReport run_acceptance(const AcceptanceOptions& opts);

}  // namespace bspec::cli
