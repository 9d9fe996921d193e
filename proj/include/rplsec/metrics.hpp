#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rplsec/simulator.hpp"

namespace rplsec {

inline constexpr std::string_view kMetricsSchema = "rplsec.metrics/1";

struct AttackerDetection {
  NodeId phys = kNoNode;
  std::string kind;
  std::string group;
  SimTime onset = 0;
  std::vector<NodeId> identities;
  bool detected = false;
  std::optional<SimTime> time_to_detection;
};

struct SubjectSummary {
  NodeId subject = kNoNode;
  std::string final_label;
  SimTime first_flag = 0;
  std::map<std::string, std::uint64_t> evidence_counts;
};

/// Per-run numbers. Every count can be recomputed from the trace.
struct MetricsReport {
  std::string scenario;
  std::uint64_t seed = 0;
  SimTime duration = 0;

  std::uint64_t data_sent = 0;  // excludes attack-generated packets
  std::uint64_t data_delivered = 0;
  std::uint64_t bytes_delivered = 0;
  std::uint64_t lost_on_link = 0;
  std::uint64_t dropped_by_attacker = 0;
  std::uint64_t dropped_by_firewall = 0;
  std::uint64_t control_messages = 0;  // DIO + DAO + DIS transmissions
  std::uint64_t parent_changes = 0;

  double pdr = 0.0;
  double control_overhead = 0.0;  // control transmissions per delivered packet
  double throughput = 0.0;        // delivered payload bytes per 1000 ticks

  std::vector<AttackerDetection> detection;
  std::uint64_t malicious_verdicts = 0;
  std::uint64_t suspicious_verdicts = 0;
  std::uint64_t false_positive_count = 0;
  std::vector<QuarantineEvent> quarantines;
  std::optional<double> pdr_pre_quarantine;
  std::optional<double> pdr_post_quarantine;

  std::uint64_t blocks_sealed = 0;
  std::uint64_t tamper_events = 0;
  std::map<NodeId, std::uint64_t> captures;
  std::string trace_digest;
  std::vector<SubjectSummary> verdict_summary;
};

MetricsReport collect_metrics(const Simulator& sim, const std::string& scenario_name);

/// One JSON object on a single line, keys in fixed order.
std::string to_json_line(const MetricsReport& r);
MetricsReport from_json_line(const std::string& line);

struct DeltaRow {
  std::uint64_t seed = 0;
  std::string metric;
  double a = 0.0;
  double b = 0.0;
  double abs_delta = 0.0;  // b - a
  std::optional<double> rel_delta;
};

/// Seed-paired deltas of the scalar metrics. Throws ShapeMismatch unless
/// both sides cover the same seeds.
std::vector<DeltaRow> compare(std::span<const MetricsReport> a, std::span<const MetricsReport> b);

}  // namespace rplsec
