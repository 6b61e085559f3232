// Hand-built automata whose shortest reaching words beat the n(n-|s|)
// ceiling, plus a checker that certifies the violation.
#pragma once

#include "reachlab/core_automata.hpp"

namespace reachlab {

// The 8-state instance: a-map 1,3,5,7,6,4,2,4.
BinaryDfa build_B_8();

// The even-n family (n >= 10): a is the identity except
//   0 -> n-3 -> 1 -> n-2 -> n/2 -> n-4 -> n-1 -> n/2.
// Throws BadN for odd n or n < 10.
BinaryDfa build_A_n(int n);

struct CounterexampleReport {
  int n = 0;
  bool is_cr = false;
  StateSet target;      // Q minus {n/2 - 1, n - 1}
  int shortest_len = 0; // exact distance of the target
  int lower_bound = 0;  // 5n/2 - 3, met with equality by this family
  int don_bound = 0;    // 2n = n * (n - |target|)
  bool violates = false;
};

// Builds the n-state family member and measures its designated target set.
CounterexampleReport verify_counterexample(int n);

}  // namespace reachlab
