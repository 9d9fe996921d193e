#pragma once

#include <map>
#include <set>

#include "rplsec/trust.hpp"
#include "rplsec/types.hpp"

namespace rplsec {

/// Hop-count objective function: parent rank plus link cost.
Rank compute_rank(Rank parent_rank, Rank link_cost);

struct Candidate {
  Rank rank = kInfiniteRank;
  Version version = 0;
  NodeId parent = kNoNode;  // the candidate's own preferred parent
};

/// DODAG membership of one node. Candidates are keyed by the identity whose
/// routing information a DIO carries.
struct RoutingState {
  NodeId self = kNoNode;
  Rank rank = kInfiniteRank;
  Version version = 1;
  NodeId parent = kNoNode;
  std::map<NodeId, Candidate> candidates;
};

struct RoutingContext {
  Rank link_cost = 1;
  const std::map<NodeId, TrustRecord>* trust = nullptr;  // Worst peers are never parents
  const std::set<NodeId>* excluded = nullptr;            // quarantined identities
};

struct ParentDecision {
  bool parent_changed = false;
  bool rank_changed = false;
  bool version_reset = false;
  NodeId old_parent = kNoNode;
};

bool eligible_parent(const RoutingState& s, NodeId id, const Candidate& c, const RoutingContext& ctx);

/// Handles one admitted DIO. A higher version resets the node and rejoins;
/// a lower one is ignored. Otherwise the origin becomes parent iff it gives a
/// strictly lower rank and is not Worst; news from the current parent
/// re-derives the rank and may trigger reselection.
ParentDecision process_dio(RoutingState& s, const ControlMessage& msg, const RoutingContext& ctx);

/// Picks the eligible candidate with the lowest (rank + cost, id). Leaves the
/// node detached when none is eligible.
ParentDecision reselect_parent(RoutingState& s, const RoutingContext& ctx);

}  // namespace rplsec
