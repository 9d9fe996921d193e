#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rplsec/attacks.hpp"
#include "rplsec/config.hpp"
#include "rplsec/types.hpp"

namespace rplsec {

/// One attacking physical node after placement.
struct AttackerSpec {
  std::size_t group = 0;  // index into ScenarioConfig::attacks
  AttackKind kind = AttackKind::Sinkhole;
  NodeId phys = kNoNode;
  ResolvedAttackParams params;
  SimTime onset = 0;
  NodeId partner = kNoNode;  // wormhole peer endpoint
  NodeId victim = kNoNode;   // clone target
  bool external = false;
  /// Every identity the node advertises once active (own id first).
  std::vector<NodeId> identities;
};

struct NodeSpec {
  NodeId id = kNoNode;
  Role role = Role::Normal;
  Position pos;
  std::vector<NodeId> neighbors;  // physical nodes in radio range, sorted
};

/// Physical layout. Index = physical node id. The global root is node 0,
/// local sinks are 1..k; sniffers are appended after node_count and are in
/// nobody's neighbour list.
struct Network {
  std::vector<NodeSpec> nodes;
  std::uint32_t node_count = 0;
  std::vector<NodeId> sinks;  // local sinks; empty in single-sink mode
  double radio_range = 0.0;
  std::vector<AttackerSpec> attackers;

  [[nodiscard]] bool is_sink(NodeId phys) const;
  [[nodiscard]] bool is_root(NodeId phys) const { return phys == 0; }
  [[nodiscard]] const AttackerSpec* attacker_at(NodeId phys) const;
  [[nodiscard]] bool adjacent(NodeId a, NodeId b) const;
  /// Recomputes every neighbour list from the current positions.
  void rebuild_neighbors();
  /// Stable textual adjacency, one node per line.
  [[nodiscard]] std::string adjacency_text() const;
};

/// Places nodes, assigns roles and attackers. Throws ConfigError when some
/// node cannot reach the root over radio links plus the sink backbone.
Network build_topology(const ScenarioConfig& cfg, std::uint64_t seed);

/// Hop distance from the root over radio edges plus root-sink backbone
/// edges (each backbone edge counts one hop). kInfiniteRank if unreachable.
std::vector<Rank> bfs_hops(const Network& net);

}  // namespace rplsec
