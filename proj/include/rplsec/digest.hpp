#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rplsec {

using Digest = std::array<std::uint8_t, 32>;
using Bytes = std::vector<std::uint8_t>;

inline constexpr Digest kZeroDigest{};

Digest sha256(std::span<const std::uint8_t> data);
Digest sha256(std::string_view text);
Digest hmac_sha256(std::span<const std::uint8_t> key, std::span<const std::uint8_t> data);

std::string to_hex(std::span<const std::uint8_t> data);
Bytes from_hex(std::string_view hex);  // throws std::invalid_argument

/// Incremental SHA-256.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;
  Sha256(Sha256&&) noexcept;
  Sha256& operator=(Sha256&&) noexcept;

  void update(std::span<const std::uint8_t> data);
  void update(std::string_view text);
  Digest finish();
  /// Digest of everything so far without ending the stream.
  [[nodiscard]] Digest peek() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> m_impl;
};

/// Append-only big-endian writer used for every canonical serialization.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { m_out.push_back(v); }
  void u32(std::uint32_t v) {
    for (int s = 24; s >= 0; s -= 8) m_out.push_back(static_cast<std::uint8_t>(v >> s));
  }
  void u64(std::uint64_t v) {
    for (int s = 56; s >= 0; s -= 8) m_out.push_back(static_cast<std::uint8_t>(v >> s));
  }
  void f64(double v);
  void bytes(std::span<const std::uint8_t> b) { m_out.insert(m_out.end(), b.begin(), b.end()); }
  void str(std::string_view s) {
    u32(static_cast<std::uint32_t>(s.size()));
    m_out.insert(m_out.end(), s.begin(), s.end());
  }

  [[nodiscard]] const Bytes& data() const { return m_out; }
  Bytes take() { return std::move(m_out); }

 private:
  Bytes m_out;
};

/// Bounds-checked reader matching ByteWriter; throws std::out_of_range on underrun.
class ByteReader {
 public:
  explicit ByteReader(std::span<const std::uint8_t> data) : m_data(data) {}

  std::uint8_t u8();
  std::uint32_t u32();
  std::uint64_t u64();
  double f64();
  std::span<const std::uint8_t> bytes(std::size_t n);
  std::string str();

  [[nodiscard]] bool done() const { return m_pos == m_data.size(); }
  [[nodiscard]] std::size_t remaining() const { return m_data.size() - m_pos; }

 private:
  std::span<const std::uint8_t> m_data;
  std::size_t m_pos = 0;
};

}  // namespace rplsec
