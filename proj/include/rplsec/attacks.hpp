#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rplsec/types.hpp"

namespace rplsec {

enum class AttackKind : std::uint8_t {
  Sinkhole,
  VersionNumber,
  DosFlood,
  NeighborReplay,
  Wormhole,
  DecreasedRank,
  CloneId,
  Sybil,
  Sniffing,
};

inline constexpr AttackKind kAllAttackKinds[] = {
    AttackKind::Sinkhole,  AttackKind::VersionNumber, AttackKind::DosFlood, AttackKind::NeighborReplay,
    AttackKind::Wormhole,  AttackKind::DecreasedRank, AttackKind::CloneId,  AttackKind::Sybil,
    AttackKind::Sniffing,
};

std::string_view to_string(AttackKind k);
/// Accepts the snake_case config spelling; throws ConfigError.
AttackKind parse_attack_kind(std::string_view name);
std::string_view describe(AttackKind k);

/// Kind-specific parameters; unset values take the kind's default.
struct AttackParams {
  std::optional<Rank> rank_delta;
  std::optional<double> drop_rate;
  std::optional<double> flood_rate;  // DATA messages per tick
  std::optional<NodeId> victim_id;
  std::optional<std::uint32_t> sybil_count;
  std::optional<SimTime> tunnel_latency;
  std::optional<Version> version_k;
  std::optional<SimTime> replay_delay;
};

/// One attacker group as written in a scenario file.
struct AttackConfig {
  std::string name;
  AttackKind kind = AttackKind::Sinkhole;
  std::uint32_t count = 1;
  std::vector<NodeId> attacker_ids;  // explicit placement; overrides count
  std::optional<SimTime> onset;      // default: 20% of duration
  AttackParams params;
  bool external = false;  // attacker is never provisioned in any allowlist
};

/// Parameters after defaults are applied.
struct ResolvedAttackParams {
  Rank rank_delta = 0;
  double drop_rate = 0.0;
  double flood_rate = 0.0;
  std::optional<NodeId> victim_id;
  std::uint32_t sybil_count = 1;
  SimTime tunnel_latency = 1;
  Version version_k = 1;
  SimTime replay_delay = 20;
};

ResolvedAttackParams resolve_params(AttackKind kind, const AttackParams& p, double benign_rate_per_tick);

/// Throws ConfigError when the group is incomplete for its kind.
void validate(const AttackConfig& a, SimTime duration, std::uint32_t node_count);

SimTime default_onset(SimTime duration);

/// Rank a rank-falsifying attacker advertises: true rank minus delta,
/// floored one above the root.
Rank advertised_rank(Rank true_rank, Rank rank_delta, Rank root_rank = kRootRank);

Version bumped_version(Version current_global, Version k);

/// Fabricated identity k (1-based) of a sybil on physical node `phys`.
NodeId sybil_identity(std::uint32_t phys, std::uint32_t k);

}  // namespace rplsec
