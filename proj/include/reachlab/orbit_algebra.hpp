// Subgroup machinery for the cyclic group Z_n.
//
// Every subgroup of Z_n is d*Z_n for a divisor d of n, so subgroups are
// represented by their generator d and all lattice operations reduce to
// gcd arithmetic on divisors.
#pragma once

#include <vector>

#include "reachlab/core_automata.hpp"

namespace reachlab {

// The subgroup d*Z_n = {0, d, 2d, ...} of Z_n. d divides n; d == n encodes
// the trivial subgroup {0} and d == 1 encodes all of Z_n.
struct Subgroup {
  int n = 0;
  int d = 0;

  int order() const { return n / d; }
  bool contains(int q) const { return q % d == 0; }
  StateSet members() const;
  // True when this subgroup contains `other` (other.d is a multiple of d).
  bool contains_subgroup(const Subgroup& other) const;

  bool operator==(const Subgroup&) const = default;
};

// The coset r + subgroup; r is the minimum element, in [0, d).
struct Coset {
  Subgroup subgroup;
  int r = 0;

  StateSet members() const { return subgroup.members().shifted(r); }

  bool operator==(const Coset&) const = default;
};

// Smallest subgroup of Z_n containing the given states.
Subgroup span(int n, const StateSet& states);

// True when s is a union of cosets of h, i.e. s + d = s.
bool is_union_of_cosets(const Subgroup& h, const StateSet& s);

// The ascending tower H_0 <= H_1 <= ... produced by closing under the
// a-image: H_0 = {0}, H_{i+1} = span(H_i + a(H_i)). Construction stops at
// the first repeat; `complete` records whether the top level is all of Z_n.
struct SubgroupChain {
  std::vector<Subgroup> levels;
  // u_sets[i] = a(H_i) \ H_i, for i < levels.size()-1 (the strict steps).
  std::vector<StateSet> u_sets;
  // Number of strict steps, i.e. levels.size()-1.
  int ell = 0;
  bool complete = false;
};

// States that a eventually visits starting from 0: {a^i(0) : i >= 1}.
StateSet orbit(const BinaryDfa& dfa);

// Subgroup of Z_n generated by the orbit of 0 under a.
Subgroup orbit_subgroup(const BinaryDfa& dfa);

SubgroupChain subgroup_chain(const BinaryDfa& dfa);

struct LevelPair {
  // m: first level whose subgroup cuts s properly (H_m & s is neither empty
  // nor all of H_m). t: last level i <= m-1 such that H_m & s is a union of
  // H_i-cosets. Always 0 <= t < m.
  int m = 0;
  int t = 0;
};

// Requires s proper and nonempty (NotProperNonempty) and a complete chain
// (ChainIncomplete).
LevelPair m_t(const SubgroupChain& chain, const StateSet& s);

// Index of an h-coset c within a larger subgroup h_prime: its minimum
// element r. Validates h <= h_prime (NotSubgroupPair) and c inside h_prime
// (CosetNotInside). The result is a multiple of h_prime.d and is at most
// h.d - h_prime.d.
int coset_index(const Subgroup& h, const Subgroup& h_prime, const Coset& c);

}  // namespace reachlab
