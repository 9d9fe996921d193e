#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "rplsec/config.hpp"
#include "rplsec/event_queue.hpp"
#include "rplsec/firewall.hpp"
#include "rplsec/ids.hpp"
#include "rplsec/ledger.hpp"
#include "rplsec/routing.hpp"
#include "rplsec/topology.hpp"
#include "rplsec/trace.hpp"
#include "rplsec/trust.hpp"

namespace rplsec {

struct NodeState {
  NodeId phys = kNoNode;
  Role role = Role::Normal;
  RoutingState routing;
  std::map<NodeId, TrustRecord> trust;
  FirewallTable firewall;
  std::map<NodeId, std::uint64_t> seq;  // per advertised identity
  std::uint64_t tx_counter = 0;
  bool attacking = false;  // attack onset reached
  Version max_version_seen = 1;
  std::uint64_t captures = 0;
  NodeId last_region = kNoNode;
  bool reply_pending = false;
  Position waypoint;
};

struct PacketInfo {
  NodeId origin_phys = kNoNode;
  NodeId origin_id = kNoNode;
  SimTime created = 0;
  std::uint32_t bytes = 0;
  bool attack = false;  // generated by attack behaviour, excluded from PDR
  std::optional<DeliveryOutcome> outcome;
  SimTime resolved = 0;
};

struct SimCounters {
  std::uint64_t control_sent = 0;
  std::uint64_t parent_changes = 0;
  std::uint64_t blocks_sealed = 0;
};

struct QuarantineEvent {
  SimTime time = 0;
  NodeId subject = kNoNode;
};

/// One seeded run: the RPL control plane, the attacks, and the defense.
class Simulator {
 public:
  Simulator(const ScenarioConfig& cfg, std::uint64_t seed);
  Simulator(const ScenarioConfig& cfg, std::uint64_t seed, Network net);

  /// Processes every event with time <= t.
  void run_until(SimTime t);
  /// Runs to the configured duration.
  const TraceLog& run();

  /// Originates one DATA packet now and processes events until it
  /// resolves. Throws NoRouteError when src has no parent chain to a sink.
  DeliveryOutcome send_data(NodeId src, std::uint32_t payload_size);

  [[nodiscard]] SimTime now() const { return m_now; }
  [[nodiscard]] const ScenarioConfig& config() const { return m_cfg; }
  [[nodiscard]] std::uint64_t seed() const { return m_seed; }
  [[nodiscard]] const Network& network() const { return m_net; }
  [[nodiscard]] const NodeState& node(NodeId phys) const { return m_nodes.at(phys); }
  [[nodiscard]] const std::vector<NodeState>& nodes() const { return m_nodes; }
  [[nodiscard]] const TraceLog& trace() const { return m_trace; }
  [[nodiscard]] const std::vector<Verdict>& verdicts() const { return m_verdicts; }
  [[nodiscard]] const std::set<NodeId>& quarantined() const { return m_quarantined; }
  [[nodiscard]] const std::vector<QuarantineEvent>& quarantine_events() const { return m_quarantine_events; }
  [[nodiscard]] const std::map<std::uint64_t, PacketInfo>& packets() const { return m_packets; }
  [[nodiscard]] const std::vector<Position>& initial_positions() const { return m_initial_positions; }
  [[nodiscard]] std::vector<Position> positions() const;
  [[nodiscard]] Version root_version() const { return m_nodes[0].routing.version; }
  [[nodiscard]] bool root_enabled() const { return m_root_enabled; }
  [[nodiscard]] std::uint64_t tamper_events() const { return m_tamper_events; }
  [[nodiscard]] const SimCounters& counters() const { return m_counters; }

  /// Sinks (and the root) that keep a ledger, in NodeId order.
  [[nodiscard]] const std::vector<NodeId>& ledger_owners() const { return m_owners; }
  [[nodiscard]] const Ledger& ledger(NodeId owner) const { return m_ledgers.at(owner); }
  [[nodiscard]] Ledger& mutable_ledger(NodeId owner) { return m_ledgers.at(owner); }
  /// Next sink on the backup ring (the holder of owner's copy).
  [[nodiscard]] NodeId backup_holder(NodeId owner) const;
  /// Copy of `owner`'s chain held by its ring successor.
  [[nodiscard]] const LedgerReplica* backup_of(NodeId owner) const;
  [[nodiscard]] const std::map<NodeId, LedgerReplica>& root_mirror() const { return m_mirror; }
  [[nodiscard]] SinkKey key_of(NodeId owner) const { return derive_sink_key(m_seed, owner); }

  /// Region (sink or root) at the top of the node's parent chain.
  [[nodiscard]] NodeId region_of(NodeId phys) const;
  /// Physical node answering to an advertised identity, if any.
  [[nodiscard]] NodeId phys_of(NodeId identity) const;

  /// Called at the end of every block boundary.
  void on_block_boundary(std::function<void(const Simulator&)> fn) { m_on_block = std::move(fn); }

  /// Sniffer capture counts by physical id.
  [[nodiscard]] std::map<NodeId, std::uint64_t> captures() const;

 private:
  enum class Ev : std::uint8_t {
    Arrive,
    DioTimer,
    DaoTimer,
    DisTimer,
    DataTimer,
    DioReply,
    TriggeredDao,
    BlockBoundary,
    Onset,
    FloodTick,
    ReplayDio,
    TunnelEmit,
    VersionBump,
    RootDisable,
    Tamper,
    Mobility,
  };
  struct Event {
    Ev type;
    NodeId node;
    std::uint64_t a = 0;
    std::uint64_t b = 0;
  };
  struct Tx {
    ControlMessage msg;
    NodeId phys;
    bool tunneled;
  };

  void init();
  void schedule(SimTime t, Event e);
  void process(const Event& e);
  std::uint64_t hash_draw(std::uint64_t a, std::uint64_t b, std::uint64_t c) const;

  // Radio.
  std::uint64_t transmit(NodeId phys, ControlMessage msg, bool tunneled = false);
  NodeId resolve_unicast(NodeId phys, NodeId dest) const;
  bool answers_to(NodeId phys, NodeId identity) const;
  void on_arrive(NodeId q, std::uint64_t tx);
  void on_arrive_attacker(NodeId q, const Tx& tx, std::uint64_t tx_id);
  void handle_dio(NodeId q, const ControlMessage& msg);
  void handle_dao(NodeId q, const ControlMessage& msg);
  void handle_data(NodeId q, const ControlMessage& msg, NodeId from_phys);
  void forward_data(NodeId q, const ControlMessage& msg, NodeId from_phys);

  // Node behaviour.
  bool is_delivery_point(NodeId phys) const;
  bool honest_mode(NodeId phys) const;
  std::uint64_t next_seq(NodeId phys, NodeId identity);
  void send_dio(NodeId phys);
  void send_dao(NodeId phys);
  std::uint64_t originate(NodeId phys, NodeId identity, bool attack);
  void resolve_packet(std::uint64_t uid, DeliveryOutcome outcome);
  void record_trust(NodeId phys, NodeId peer, ExchangeOutcome outcome);
  void after_routing_change(NodeId phys, const ParentDecision& d);
  RoutingContext routing_context(NodeId phys) const;
  void set_global_version(Version v, bool authoritative);
  void report(NodeId reporter, std::uint64_t tx, const ControlMessage& msg, RecordDisposition disposition);

  // Defense.
  void block_boundary();
  void quarantine(NodeId subject);
  void exonerate_subject(NodeId subject);
  void emit_verdict(const Verdict& v);
  void tamper(NodeId owner, bool also_backup);
  void move_nodes();

  ScenarioConfig m_cfg;
  std::uint64_t m_seed;
  Network m_net;
  std::vector<NodeState> m_nodes;
  std::vector<Position> m_initial_positions;
  EventQueue<Event> m_queue;
  SimTime m_now = 0;
  TraceLog m_trace;
  std::vector<Tx> m_txs;
  std::map<std::uint64_t, PacketInfo> m_packets;
  std::uint64_t m_next_uid = 1;
  bool m_root_enabled = true;
  std::set<NodeId> m_quarantined;
  std::vector<QuarantineEvent> m_quarantine_events;
  std::vector<Verdict> m_verdicts;
  std::uint64_t m_tamper_events = 0;
  SimCounters m_counters;
  std::function<void(const Simulator&)> m_on_block;

  // Per ledger owner.
  std::vector<NodeId> m_owners;
  std::map<NodeId, Ledger> m_ledgers;
  std::map<NodeId, std::vector<TrafficRecord>> m_pending;
  std::map<NodeId, std::set<std::uint64_t>> m_pending_tx;
  std::map<NodeId, IdsSnapshot> m_snapshots;
  std::map<NodeId, AnomalyProfile> m_profiles;
  std::map<NodeId, std::set<NodeId>> m_flagged;
  std::map<NodeId, LedgerReplica> m_backups;  // keyed by source owner
  std::map<NodeId, bool> m_gate_closed;
  std::map<NodeId, LedgerReplica> m_mirror;
  IdsSnapshot m_union_snapshot;
  AnomalyProfile m_union_profile;
  TableOne m_table_one;
};

}  // namespace rplsec
