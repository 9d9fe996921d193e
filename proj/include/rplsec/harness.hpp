#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "rplsec/config.hpp"
#include "rplsec/ledger.hpp"
#include "rplsec/metrics.hpp"

namespace rplsec {

struct RunOptions {
  std::vector<std::string> overrides;  // dotted-path assignments
  unsigned jobs = 1;                   // seeds run concurrently
  std::filesystem::path output_dir;    // empty: cfg.output_dir, still empty: nothing written
};

/// Loads a scenario file and applies overrides, then validates.
ScenarioConfig prepare_config(const std::filesystem::path& path, const std::vector<std::string>& overrides);

/// One seed. With a non-empty dir, writes trace.log, ledger dumps,
/// keys.json, state.json and trust.jsonl into it.
MetricsReport run_seed(const ScenarioConfig& cfg, std::uint64_t seed, const std::filesystem::path& dir = {});

/// Every seed of cfg, in seed order. Writes metrics.jsonl and summary.json
/// under the output dir when one is set.
std::vector<MetricsReport> run_config(const ScenarioConfig& cfg, const RunOptions& opts = {});

std::vector<MetricsReport> run_scenario(const std::filesystem::path& path, const RunOptions& opts = {});

/// Reads a metrics.jsonl file. Throws IoError or ConfigError.
std::vector<MetricsReport> read_metrics(const std::filesystem::path& path);

enum class DumpStatus { Ok, FirstBadIndex, MacError };

struct DumpVerification {
  DumpStatus status = DumpStatus::Ok;
  NodeId owner = kNoNode;
  std::uint64_t first_bad = 0;
  std::string detail;
};

/// Re-verifies a ledger dump offline. The key comes from keys.json next to
/// the dump unless given explicitly. Throws IoError.
DumpVerification verify_ledger_file(const std::filesystem::path& dump, const std::filesystem::path& keys = {});

std::string to_string(const DumpVerification& v);

}  // namespace rplsec
