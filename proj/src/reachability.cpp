#include "reachlab/reachability.hpp"

#include <array>
#include <bit>

namespace reachlab {

namespace {

// a-images of whole masks are assembled from per-byte lookup tables so the
// BFS inner loop does three table lookups instead of up to 24 bit scans.
struct ByteTables {
  std::array<std::array<std::uint32_t, 256>, 3> t;
  int count = 0;

  void build(const BinaryDfa& dfa) {
    int n = dfa.n();
    count = (n + 7) / 8;
    for (int bi = 0; bi < count; ++bi) {
      int width = n - 8 * bi;
      if (width > 8) width = 8;
      t[bi][0] = 0;
      for (std::uint32_t v = 1; v < (1u << width); ++v) {
        int j = std::countr_zero(v);
        t[bi][v] = t[bi][v & (v - 1)] | (1u << dfa.a(8 * bi + j));
      }
    }
  }

  std::uint32_t a_image(std::uint32_t m) const {
    std::uint32_t out = t[0][m & 255];
    if (count > 1) out |= t[1][(m >> 8) & 255];
    if (count > 2) out |= t[2][(m >> 16) & 255];
    return out;
  }
};

}  // namespace

void reach_table_into(const BinaryDfa& dfa, ReachTable& table) {
  int n = dfa.n();
  if (n > kMaxBfsStates)
    throw ReachError(ErrorCode::TooLarge,
                     "subset tables need 2^" + std::to_string(n) +
                         " entries; the limit is n=" +
                         std::to_string(kMaxBfsStates));
  std::size_t size = std::size_t{1} << n;
  table.n = n;
  table.dist.assign(size, ReachTable::kUnreached);
  table.parent.resize(size);

  ByteTables tables;
  tables.build(dfa);
  std::uint32_t full = static_cast<std::uint32_t>(size - 1);

  static thread_local std::vector<std::uint32_t> queue;
  queue.clear();
  queue.reserve(size);
  table.dist[full] = 0;
  queue.push_back(full);
  std::uint64_t reached = 1;

  std::size_t head = 0;
  while (head < queue.size()) {
    std::uint32_t m = queue[head++];
    std::uint16_t d = table.dist[m];
    if (d + 1 >= ReachTable::kUnreached)
      throw ReachError(ErrorCode::TooLarge, "breadth-first distance overflow");
    std::uint16_t nd = static_cast<std::uint16_t>(d + 1);
    std::uint32_t ia = tables.a_image(m);
    std::uint32_t ib = ((m << 1) | (m >> (n - 1))) & full;
    if (table.dist[ia] == ReachTable::kUnreached) {
      table.dist[ia] = nd;
      table.parent[ia] = (m << 1) | 0u;
      queue.push_back(ia);
      ++reached;
    }
    if (table.dist[ib] == ReachTable::kUnreached) {
      table.dist[ib] = nd;
      table.parent[ib] = (m << 1) | 1u;
      queue.push_back(ib);
      ++reached;
    }
  }
  table.reached_count = reached;
}

ReachTable reach_table(const BinaryDfa& dfa) {
  ReachTable table;
  reach_table_into(dfa, table);
  return table;
}

bool is_completely_reachable(const ReachTable& table) {
  return table.reached_count == (std::uint64_t{1} << table.n) - 1;
}

bool is_completely_reachable(const BinaryDfa& dfa) {
  return is_completely_reachable(reach_table(dfa));
}

std::vector<StateSet> witnesses(const ReachTable& table) {
  int n = table.n;
  std::size_t size = std::size_t{1} << n;
  // has_unreachable_superset[m], filled from larger masks downward.
  std::vector<char> above(size, 0);
  std::vector<StateSet> out;
  for (std::uint32_t m = static_cast<std::uint32_t>(size - 1); m > 0; --m) {
    for (int j = 0; j < n; ++j) {
      if ((m >> j) & 1u) continue;
      std::uint32_t sup = m | (1u << j);
      if (!table.reached(sup) || above[sup]) {
        above[m] = 1;
        break;
      }
    }
  }
  for (std::uint32_t m = 1; m < size; ++m)
    if (!table.reached(m) && !above[m]) out.push_back(StateSet(n, m));
  return out;
}

std::vector<StateSet> witnesses(const BinaryDfa& dfa) {
  return witnesses(reach_table(dfa));
}

}  // namespace reachlab
