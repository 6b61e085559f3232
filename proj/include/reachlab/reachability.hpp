// Exact reachability of state sets via breadth-first search over all 2^n
// subset masks. Memory is the limiting factor, so this layer is capped at
// n <= 24 states (96 MiB of tables at the cap).
#pragma once

#include <cstdint>
#include <vector>

#include "reachlab/core_automata.hpp"

namespace reachlab {

inline constexpr int kMaxBfsStates = 24;

// Distance and shortest-word parent for every subset of states, computed
// from the full set Q. dist[m] is the length of the shortest word w with
// apply(Q, w) equal to the subset encoded by mask m.
//
// Tie-break (fixed, so reconstructed words are deterministic): breadth
// first from Q, the a-image is explored before the b-image, and the first
// parent found is kept.
struct ReachTable {
  static constexpr std::uint16_t kUnreached = 0xFFFF;

  int n = 0;
  std::vector<std::uint16_t> dist;
  // (predecessor mask << 1) | letter, valid for reached masks with dist > 0.
  std::vector<std::uint32_t> parent;
  // Number of reached masks; equals 2^n - 1 exactly when every nonempty
  // subset is reachable.
  std::uint64_t reached_count = 0;

  bool reached(std::uint64_t mask) const { return dist[mask] != kUnreached; }
};

// Throws TooLarge for n > 24.
ReachTable reach_table(const BinaryDfa& dfa);

// Same, reusing the buffers of `table` (for sweeps over many automata).
void reach_table_into(const BinaryDfa& dfa, ReachTable& table);

bool is_completely_reachable(const ReachTable& table);
bool is_completely_reachable(const BinaryDfa& dfa);

// Inclusion-maximal unreachable sets: unreachable nonempty sets all of
// whose strict supersets are reachable. Empty exactly when the automaton
// is completely reachable. Ascending mask order.
std::vector<StateSet> witnesses(const ReachTable& table);
std::vector<StateSet> witnesses(const BinaryDfa& dfa);

}  // namespace reachlab
