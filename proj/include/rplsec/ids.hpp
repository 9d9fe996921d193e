#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rplsec/ledger.hpp"
#include "rplsec/types.hpp"

namespace rplsec {

namespace rules {
inline constexpr std::string_view kRankOrder = "RankOrder";
inline constexpr std::string_view kVersionFromRootOnly = "VersionFromRootOnly";
inline constexpr std::string_view kSelfInfoRequired = "SelfInfoRequired";
inline constexpr std::string_view kRankJump = "RankJump";
inline constexpr std::string_view kFloodThreshold = "FloodThreshold";
inline constexpr std::string_view kSeqReplay = "SeqReplay";
inline constexpr std::string_view kRepeatOffender = "RepeatOffender";
inline constexpr std::string_view kIdentityBurst = "IdentityBurst";
}  // namespace rules

/// The rule set written into every Table 1.
std::vector<RuleDescriptor> default_rules();

enum class Severity : std::uint8_t { Flag, Escalate };

struct SignatureHit {
  NodeId subject = kNoNode;
  std::string rule;
  Severity severity = Severity::Flag;
  std::uint64_t block_index = 0;

  friend bool operator==(const SignatureHit&, const SignatureHit&) = default;
};

/// What a sink remembers between blocks.
struct IdsSnapshot {
  std::map<NodeId, Rank> last_rank;  // last self-advertised DIO rank
  std::map<NodeId, NodeId> last_parent;
  std::map<NodeId, std::uint64_t> last_seq;
  std::map<NodeId, std::uint32_t> rank_order_streak;
  std::set<NodeId> seen;

  friend bool operator==(const IdsSnapshot&, const IdsSnapshot&) = default;
};

struct SignatureContext {
  Version root_version = 1;  // authoritative version at evaluation time
  SimTime window = 0;        // ticks covered by the batch
  std::uint32_t rank_order_streak = 2;
};

struct SignatureResult {
  std::vector<SignatureHit> hits;
  IdsSnapshot next;
};

/// A record with the index of the block that holds it.
struct IndexedRecord {
  const TrafficRecord* record;
  std::uint64_t block_index;
};

/// Records of several blocks in time order with duplicate transmissions
/// (same content seen by more than one region) removed.
std::vector<IndexedRecord> merge_records(std::span<const Block* const> blocks);

/// Pure: identical inputs give identical hits and snapshot.
SignatureResult eval_signatures(std::span<const IndexedRecord> records, const IdsSnapshot& before, const TableOne& t1,
                                const SignatureContext& ctx);
SignatureResult eval_signatures(std::span<const Block> blocks, const IdsSnapshot& before, const TableOne& t1,
                                const SignatureContext& ctx);

namespace metrics_id {
inline constexpr std::string_view kMessageRate = "message_rate";
inline constexpr std::string_view kParentChangeCount = "parent_change_count";
inline constexpr std::string_view kRankDrop = "rank_drop";
inline constexpr std::string_view kDistinctSenderCount = "distinct_sender_count";
}  // namespace metrics_id

/// Per-interval statistics feeding the anomaly profile.
struct BatchStats {
  // message_rate, parent_change_count, rank_drop
  std::map<NodeId, std::array<double, 3>> node;
  std::set<NodeId> senders;
};

BatchStats batch_stats(std::span<const IndexedRecord> records, const IdsSnapshot& before);

struct AnomalyHit {
  NodeId subject = kNoNode;
  std::string metric;
  double z = 0.0;
};

/// Baseline learned over the first `warmup` intervals, then frozen.
/// z = (x - mean) / max(std, sqrt(mean), 1).
class AnomalyProfile {
 public:
  explicit AnomalyProfile(std::uint32_t warmup = 10, double z_threshold = 3.0)
      : m_warmup(warmup), m_threshold(z_threshold) {}

  /// Learns while warming up (returns nothing), evaluates afterwards.
  std::vector<AnomalyHit> observe(const BatchStats& stats);
  [[nodiscard]] std::vector<AnomalyHit> eval(const BatchStats& stats) const;
  void learn(const BatchStats& stats);

  [[nodiscard]] bool frozen() const { return m_seen >= m_warmup; }
  [[nodiscard]] std::uint32_t intervals_seen() const { return m_seen; }

 private:
  struct Acc {
    double n = 0, sum = 0, sumsq = 0;
    void add(double x) {
      n += 1;
      sum += x;
      sumsq += x * x;
    }
    [[nodiscard]] double z(double x) const;
  };

  std::uint32_t m_warmup;
  double m_threshold;
  std::uint32_t m_seen = 0;
  std::map<NodeId, std::array<Acc, 3>> m_node;
  Acc m_region;
  std::set<NodeId> m_known;
};

enum class VerdictPhase : std::uint8_t { Trust, LocalSink, GlobalRoot };
enum class VerdictLabel : std::uint8_t { Benign, Suspicious, Malicious };

std::string_view to_string(VerdictPhase p);
std::string_view to_string(VerdictLabel l);

struct Evidence {
  std::string source;  // rule id, anomaly metric, "trust", or cross-network check
  std::uint64_t block_index = 0;
};

struct Verdict {
  NodeId subject = kNoNode;
  VerdictPhase phase = VerdictPhase::LocalSink;
  VerdictLabel label = VerdictLabel::Benign;
  std::vector<Evidence> evidence;
  SimTime time = 0;
  NodeId issuer = kNoNode;
};

/// A phase-1 flag relayed by a member node to its sink.
struct TrustReport {
  NodeId reporter = kNoNode;
  NodeId subject = kNoNode;
};

/// Suspicious iff at least one Escalate hit or at least two independent
/// evidence sources (trust, each rule, each anomaly metric).
std::vector<Verdict> local_verdict(NodeId sink, SimTime now, std::uint64_t block_index,
                                   std::span<const TrustReport> flags, std::span<const SignatureHit> hits,
                                   std::span<const AnomalyHit> anomalies);

/// Records of one region (one sink's new blocks) for the cross-network check.
struct RegionBatch {
  NodeId sink = kNoNode;
  std::uint64_t block_index = 0;
  std::vector<IndexedRecord> records;
};

struct CloneSighting {
  NodeId identity = kNoNode;
  std::vector<Evidence> evidence;  // one per region
};

/// One identity reported in two regions by reporters more than twice the
/// radio range apart: no single radio can be heard by both.
std::vector<CloneSighting> cross_network_check(std::span<const RegionBatch> regions,
                                               const std::vector<Position>& reporter_positions, double radio_range);

/// Sinks and the root whose position changed since t=0.
std::vector<NodeId> stationarity_check(const std::vector<Position>& initial, const std::vector<Position>& now,
                                       std::span<const NodeId> fixed_nodes);

struct GlobalInput {
  NodeId root = 0;
  SimTime now = 0;
  std::uint64_t block_index = 0;
  std::vector<Verdict> suspicious;
  std::vector<SignatureHit> union_hits;
  std::vector<AnomalyHit> union_anomalies;
  std::vector<TrustReport> union_flags;
  std::vector<CloneSighting> clones;
  std::vector<NodeId> moved;
};

/// Malicious for cross-network hits and for Suspicious subjects that the
/// union re-evaluation independently escalates; Benign otherwise.
std::vector<Verdict> global_verdict(const GlobalInput& in);

}  // namespace rplsec
