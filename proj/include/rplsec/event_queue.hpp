#pragma once

#include <cstdint>
#include <queue>
#include <vector>

#include "rplsec/types.hpp"

namespace rplsec {

/// Min-heap of (time, insertion counter, payload). Equal times pop in
/// insertion order, which is what makes a seeded run reproducible.
template <typename Payload>
class EventQueue {
 public:
  struct Entry {
    SimTime time;
    std::uint64_t order;
    Payload payload;
  };

  void push(SimTime time, Payload payload) { m_heap.push(Entry{time, m_counter++, std::move(payload)}); }

  [[nodiscard]] bool empty() const { return m_heap.empty(); }
  [[nodiscard]] std::size_t size() const { return m_heap.size(); }
  [[nodiscard]] const Entry& top() const { return m_heap.top(); }

  Entry pop() {
    Entry e = m_heap.top();
    m_heap.pop();
    return e;
  }

 private:
  struct Later {
    bool operator()(const Entry& a, const Entry& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.order > b.order;
    }
  };

  std::priority_queue<Entry, std::vector<Entry>, Later> m_heap;
  std::uint64_t m_counter = 0;
};

}  // namespace rplsec
