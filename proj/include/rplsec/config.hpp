#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rplsec/attacks.hpp"
#include "rplsec/trust.hpp"
#include "rplsec/types.hpp"

namespace rplsec {

enum class TopologyKind : std::uint8_t { Grid, Random, Line, Explicit };

std::string_view to_string(TopologyKind t);

struct TimerConfig {
  SimTime dio_interval = 1000;
  SimTime dao_interval = 5000;
  SimTime dis_interval = 2000;
  SimTime data_interval = 1000;
  SimTime data_start = 5000;
  std::uint32_t payload_size = 32;
};

struct DefenseConfig {
  bool firewall = true;
  bool trust = true;
  bool ids = true;

  [[nodiscard]] bool any() const { return firewall || trust || ids; }
};

struct TamperSpec {
  NodeId sink = 0;
  SimTime at = 0;
  bool also_backup = false;
};

struct ScenarioConfig {
  std::string name = "scenario";
  std::uint32_t node_count = 50;
  std::vector<std::uint64_t> seeds{1};
  SimTime duration = 60000;

  TopologyKind topology = TopologyKind::Grid;
  double radio_range = 15.0;
  double spacing = 10.0;
  double loss_probability = 0.05;
  SimTime link_latency = 5;
  Rank link_cost = 1;
  std::vector<Position> positions;  // explicit topology only
  bool multi_sink = true;           // false: would-be sinks run as normal nodes
  bool mobility = false;            // random waypoint for normal nodes
  double mobility_speed = 1.0;      // metres per second

  TimerConfig timers;
  DefenseConfig defense;
  Thresholds thresholds;
  std::vector<AttackConfig> attacks;

  std::optional<SimTime> root_disable_at;
  std::vector<SimTime> root_version_bumps;
  std::vector<TamperSpec> tampers;

  std::size_t max_pending_events = 2'000'000;
  std::string output_dir;

  [[nodiscard]] double sink_fraction() const { return thresholds.sink_fraction; }
  [[nodiscard]] std::uint32_t local_sink_count() const;
  /// Benign DATA originations per block interval.
  [[nodiscard]] double benign_rate_per_block() const;

  /// Throws ConfigError naming the offending field.
  void validate() const;
};

/// Parses the key = value section format. Unknown sections or keys are
/// rejected with `source:line` context.
ScenarioConfig parse_scenario(std::string_view text, std::string_view source = "<string>");
ScenarioConfig load_scenario(const std::filesystem::path& path);

/// Applies one dotted-path override, e.g. "thresholds.best_ratio=0.8" or
/// "attack.sink1.onset=15000". A bare key is looked up in [scenario].
void apply_override(ScenarioConfig& cfg, std::string_view assignment);

}  // namespace rplsec
