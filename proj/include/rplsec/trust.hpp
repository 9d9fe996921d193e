#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <string_view>
#include <vector>

#include "rplsec/types.hpp"

namespace rplsec {

enum class TrustClass : std::uint8_t { Best, Probation, Worst };

enum class ExchangeOutcome : std::uint8_t { Success, Failure };

std::string_view to_string(TrustClass c);

/// Every named constant the defense uses. Serialized into ledger Table 1.
struct Thresholds {
  double best_ratio = 0.70;
  double worst_ratio = 0.40;
  std::uint32_t max_rechecks = 3;
  std::uint32_t window_size = 20;
  double flood_multiplier = 5.0;
  std::uint32_t rank_jump_limit = 2;
  SimTime block_interval = 5000;
  std::uint32_t block_capacity = 512;
  std::uint32_t prune_every = 20;
  std::uint32_t prune_keep = 10;
  double sink_fraction = 0.10;
  std::uint32_t anomaly_warmup = 10;
  double z_threshold = 3.0;

  /// Throws ConfigError when an invariant is violated.
  void validate() const;
};

/// Direct trust one node holds about one neighbour. Counts are over the
/// sliding window of the last `window_size` attempts.
struct TrustRecord {
  std::uint32_t successes = 0;
  std::uint32_t attempts = 0;
  TrustClass classification = TrustClass::Best;
  std::uint32_t rechecks_used = 0;
  std::deque<bool> window;
  std::uint64_t lifetime_attempts = 0;

  [[nodiscard]] double ratio() const { return attempts == 0 ? 1.0 : static_cast<double>(successes) / attempts; }
};

/// Pure classification: >best -> Best, <worst -> Worst, otherwise Probation
/// unless the recheck budget is spent.
TrustClass classify(double ratio, std::uint32_t rechecks_used, const Thresholds& t = {});

/// Updates the window and recomputes the class. Worst is absorbing; a
/// return to Best clears the recheck counter. Rechecks are not consumed here.
TrustRecord record_exchange(TrustRecord record, ExchangeOutcome outcome, const Thresholds& t = {});

/// Block-boundary re-evaluation: a Probation record spends one recheck.
TrustRecord recheck(TrustRecord record, const Thresholds& t = {});

/// Clears a Worst classification after the global root exonerates the peer.
TrustRecord exonerate(TrustRecord record);

enum class SuspicionReason : std::uint8_t { LowExchangeRatio };

struct TrustFlag {
  NodeId subject;
  SuspicionReason reason;
};

/// Neighbours currently classified Worst, in NodeId order.
std::vector<TrustFlag> phase1_flags(const std::map<NodeId, TrustRecord>& trust_table);

}  // namespace rplsec
