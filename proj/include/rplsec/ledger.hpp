#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rplsec/digest.hpp"
#include "rplsec/trust.hpp"
#include "rplsec/types.hpp"

namespace rplsec {

enum class RecordDisposition : std::uint8_t { Admitted = 0, DroppedByFirewall = 1 };

/// One reception reported by an honest node to its region sink.
struct TrafficRecord {
  SimTime time = 0;
  NodeId reporter = kNoNode;
  NodeId sender = kNoNode;
  NodeId claimed_origin = kNoNode;
  MessageKind kind = MessageKind::Dio;
  Rank rank = kInfiniteRank;
  Version version = 0;
  std::uint64_t seq = 0;
  NodeId parent = kNoNode;
  RecordDisposition outcome = RecordDisposition::Admitted;

  friend bool operator==(const TrafficRecord&, const TrafficRecord&) = default;
};

struct Block {
  std::uint64_t index = 0;
  SimTime start = 0;
  SimTime end = 0;
  std::vector<TrafficRecord> records;
  Digest prev_hash{};
  Digest self_hash{};
};

/// Fixed-order big-endian bytes of everything except self_hash.
Bytes canonical_bytes(const Block& b);
Digest compute_block_hash(const Block& b);
/// canonical_bytes followed by self_hash; the unit written to dumps.
Bytes serialize_block(const Block& b);
/// Throws std::out_of_range / std::invalid_argument on malformed input.
Block parse_block(std::span<const std::uint8_t> bytes);

struct RuleDescriptor {
  std::string id;
  bool escalate = false;
};

struct SummaryRule {
  std::uint64_t first_index = 0;
  std::uint64_t last_index = 0;
  std::map<NodeId, std::uint64_t> message_counts;  // by sender
  std::vector<NodeId> flagged;
  std::map<NodeId, double> mean_rates;  // messages per block
};

/// Rules, allowlist, thresholds and pruning summaries.
struct TableOne {
  std::vector<RuleDescriptor> signature_rules;
  std::vector<NodeId> firewall_allowlist;
  Thresholds thresholds;
  double benign_rate_per_block = 5.0;
  std::vector<SummaryRule> summaries;

  [[nodiscard]] Bytes canonical() const;
  [[nodiscard]] Digest digest() const { return sha256(canonical()); }
};

/// Block hashes plus the Table 1 hash, sealed with the sink's key.
struct TableTwo {
  Digest table_one_hash{};
  std::map<std::uint64_t, Digest> block_hashes;
  std::optional<std::pair<std::uint64_t, Digest>> anchor;
  Digest mac{};

  [[nodiscard]] Bytes canonical_body() const;
  [[nodiscard]] Bytes serialize() const;
  static TableTwo parse(std::span<const std::uint8_t> bytes);
};

using SinkKey = Bytes;

SinkKey derive_sink_key(std::uint64_t seed, NodeId sink);

struct VerifyResult {
  bool ok = true;
  std::uint64_t first_bad = 0;

  static VerifyResult good() { return {true, 0}; }
  static VerifyResult bad(std::uint64_t k) { return {false, k}; }
  friend bool operator==(const VerifyResult&, const VerifyResult&) = default;
};

std::string to_string(const VerifyResult& r);

/// Shared by live ledgers, backup replicas and offline dumps. Throws
/// MacError when Table 2's keyed digest (or the Table 1 hash it seals) fails.
VerifyResult verify_chain(std::span<const Block> blocks, const TableTwo& t2, const Digest& table_one_digest,
                          std::span<const std::uint8_t> key);

struct LedgerReplica {
  NodeId owner = kNoNode;
  std::vector<Block> blocks;
  TableOne table_one;
  TableTwo table_two;
};

/// Per-sink database: hash-chained block list, Table 1, and Table 2.
class Ledger {
 public:
  Ledger(NodeId owner, SinkKey key, TableOne table_one);

  /// Seals `records` into one or more consecutive blocks (split at
  /// block_capacity). An empty batch still yields one block.
  std::vector<Block> append_block(std::span<const TrafficRecord> records, SimTime now);

  [[nodiscard]] VerifyResult verify_chain() const;

  /// Drops the oldest (len - keep) blocks, folding them into a SummaryRule.
  SummaryRule prune(std::size_t keep, std::span<const NodeId> flagged = {});

  /// Replaces blocks bad_index..tail from `backup`. Throws BackupCorrupt.
  void restore_from_backup(const LedgerReplica& backup, std::uint64_t bad_index);

  void set_table_one(TableOne t1);

  [[nodiscard]] LedgerReplica replica() const { return {m_owner, m_blocks, m_table_one, m_table_two}; }

  [[nodiscard]] NodeId owner() const { return m_owner; }
  [[nodiscard]] const std::vector<Block>& blocks() const { return m_blocks; }
  [[nodiscard]] const TableOne& table_one() const { return m_table_one; }
  [[nodiscard]] const TableTwo& table_two() const { return m_table_two; }
  [[nodiscard]] std::uint64_t next_index() const { return m_next_index; }
  [[nodiscard]] SimTime last_end() const { return m_last_end; }

  // Direct mutable access for tamper injection; bypasses all protection.
  std::vector<Block>& mutable_blocks() { return m_blocks; }
  TableTwo& mutable_table_two() { return m_table_two; }

  void write_dump(const std::filesystem::path& path) const;

 private:
  void reseal();
  void check_mac() const;

  NodeId m_owner;
  SinkKey m_key;
  TableOne m_table_one;
  TableTwo m_table_two;
  std::vector<Block> m_blocks;
  std::uint64_t m_next_index = 0;
  SimTime m_last_end = 0;
};

Bytes dump_bytes(const LedgerReplica& replica);

/// Owner id from a dump header. Throws IoError on a bad header.
NodeId dump_owner(std::span<const std::uint8_t> bytes);

/// Offline verification of a dump file's bytes. Malformed blocks count as
/// bad at their position; a malformed header throws IoError.
VerifyResult verify_dump(std::span<const std::uint8_t> bytes, std::span<const std::uint8_t> key,
                         NodeId* owner_out = nullptr);

}  // namespace rplsec
