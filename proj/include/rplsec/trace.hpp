#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rplsec/digest.hpp"
#include "rplsec/types.hpp"

namespace rplsec {

/// Builds the `k=v` tail of a trace line in call order.
class TraceFields {
 public:
  TraceFields& add(std::string_view key, std::string_view value);
  TraceFields& add(std::string_view key, std::uint64_t value);
  TraceFields& add_id(std::string_view key, NodeId id);  // kNoNode -> "-"
  TraceFields& add_rank(std::string_view key, Rank r);   // infinite -> "inf"

  [[nodiscard]] const std::string& str() const { return m_text; }

 private:
  std::string m_text;
};

/// Append-only event log: "time KIND actor peer k=v ...", '-' for absent ids.
class TraceLog {
 public:
  explicit TraceLog(bool keep_lines = true) : m_keep(keep_lines) {}

  void add(SimTime t, std::string_view kind, NodeId actor, NodeId peer, const TraceFields& fields = {});

  [[nodiscard]] const std::vector<std::string>& lines() const { return m_lines; }
  [[nodiscard]] std::size_t size() const { return m_count; }
  /// SHA-256 over every line, newline-terminated.
  [[nodiscard]] Digest digest() const;

  void write(const std::filesystem::path& path) const;

 private:
  bool m_keep;
  std::vector<std::string> m_lines;
  std::size_t m_count = 0;
  Sha256 m_hash;
};

struct TraceRecord {
  SimTime time = 0;
  std::string kind;
  NodeId actor = kNoNode;
  NodeId peer = kNoNode;
  std::map<std::string, std::string> fields;

  [[nodiscard]] const std::string* field(const std::string& key) const;
  [[nodiscard]] std::uint64_t num(const std::string& key, std::uint64_t fallback = 0) const;
};

/// Parses one trace line; std::nullopt on malformed input.
std::optional<TraceRecord> parse_trace_line(std::string_view line);

}  // namespace rplsec
