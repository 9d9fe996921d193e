#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "rplsec/types.hpp"

namespace rplsec {

enum class DropReason : std::uint8_t { Unknown, StaleSeq, RankOutOfRange, VersionMismatch };

std::string_view to_string(DropReason r);

struct FirewallEntry {
  NodeId node = kNoNode;
  // Empty range until the first DIO from the peer is admitted.
  std::optional<std::pair<Rank, Rank>> expected_rank_range;
  Version expected_version = 0;
  std::optional<std::uint64_t> last_seq;
};

struct AdmitResult {
  bool allowed = true;
  DropReason reason = DropReason::Unknown;

  static AdmitResult allow() { return {true, DropReason::Unknown}; }
  static AdmitResult drop(DropReason r) { return {false, r}; }
};

/// Default-deny allowlist of authenticated peers.
class FirewallTable {
 public:
  void provision(NodeId peer, Version version);
  void remove(NodeId peer) { m_entries.erase(peer); }
  [[nodiscard]] bool contains(NodeId peer) const { return m_entries.contains(peer); }
  [[nodiscard]] const FirewallEntry* find(NodeId peer) const;
  [[nodiscard]] const std::map<NodeId, FirewallEntry>& entries() const { return m_entries; }

  /// Checks a message and, when allowed, advances last_seq. `root_origin`
  /// marks a sender whose version changes are authoritative. With
  /// `enforce_rank_band` false the rank band is not checked (formation grace).
  AdmitResult admit(const ControlMessage& msg, bool root_origin = false, bool enforce_rank_band = true);

  /// Recentres the rank band on the last admitted advertised rank.
  void sync_entry(NodeId peer, Rank observed_rank, std::uint32_t rank_jump_limit);

  /// Root-originated version change: every entry follows.
  void set_expected_version(Version v);

 private:
  std::map<NodeId, FirewallEntry> m_entries;
};

}  // namespace rplsec
