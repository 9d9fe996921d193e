#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rplsec {

/// Identity advertised on the air. Physical nodes 0..n-1 use their index;
/// fabricated (sybil) identities live above kFabricatedIdBase.
using NodeId = std::uint32_t;
inline constexpr NodeId kNoNode = 0xFFFFFFFFu;
inline constexpr NodeId kFabricatedIdBase = 1'000'000u;

/// Simulated time in ticks; one tick is one millisecond.
using SimTime = std::uint64_t;

using Rank = std::uint32_t;
inline constexpr Rank kInfiniteRank = 0xFFFFFFFFu;
inline constexpr Rank kRootRank = 0;

using Version = std::uint32_t;

enum class Role : std::uint8_t { Normal, LocalSink, GlobalRoot, Attacker };

enum class MessageKind : std::uint8_t { Dio = 0, Dao = 1, Dis = 2, Data = 3 };

enum class DeliveryOutcome : std::uint8_t { Delivered, LostOnLink, DroppedByAttacker, DroppedByFirewall };

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

inline double distance(const Position& a, const Position& b) { return std::hypot(a.x - b.x, a.y - b.y); }

/// Simulated DIO / DAO / DIS / DATA record. `sender` is the link-layer source
/// as advertised; `claimed_origin` is the identity whose routing information
/// (DIO) or payload (DATA) the message carries.
struct ControlMessage {
  MessageKind kind = MessageKind::Dio;
  NodeId sender = kNoNode;
  NodeId claimed_origin = kNoNode;
  Rank rank = kInfiniteRank;
  Version version = 0;
  std::uint64_t seq = 0;
  std::uint32_t payload_size = 0;
  NodeId parent = kNoNode;  // preferred parent (DIO / DAO only)
  NodeId dest = kNoNode;    // kNoNode = broadcast
  std::uint64_t data_uid = 0;
  std::uint8_t hops = 0;
};

std::string_view to_string(Role role);
std::string_view to_string(MessageKind kind);
std::string_view to_string(DeliveryOutcome outcome);

inline bool is_control(MessageKind kind) { return kind != MessageKind::Data; }

// Error taxonomy. Each carries a human-readable context string.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SimulationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NoRouteError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MacError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct BackupCorrupt : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rplsec
