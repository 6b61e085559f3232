// Shortest reaching words, coset-based word construction with explicit
// length bounds, and expandability search.
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "reachlab/orbit_algebra.hpp"
#include "reachlab/reachability.hpp"

namespace reachlab {

// Shortest word w with apply(Q, w) == s, reconstructed from the table's
// parent chain (deterministic; see ReachTable). Throws Unreachable when s
// has no entry (including the empty set).
Word shortest_reaching_word(const ReachTable& table, const StateSet& s);

// All predecessors of s of the form a b^i: pairs (r, a b^i) with
// apply(r, a b^i) == s and r the full preimage. One candidate per i in
// [0, n); i qualifies iff the b^i-preimage of s avoids excl(a), so the
// a-step loses no states. Ascending i; empty for s == Q.
std::vector<std::pair<StateSet, Word>> pi_predecessors(const BinaryDfa& dfa,
                                                       const StateSet& s);

enum class ExpandKind { Grew, Descended };

struct ExpandStep {
  StateSet r;      // full preimage of s under w
  Word w;          // a b^i with i the chosen coset index
  ExpandKind kind; // grew: |r| == |s|+1; descended: |r| == |s|, lower level
  int m = 0;       // level pair of the input set
  int t = 0;
};

// One step of the coset-based expansion: picks the smallest coset index i
// (then the smallest helper element u of U_t) such that the H_t-coset at i
// lies inside H_m, avoids s, and its shift by u lies inside s. The word
// a b^i then either grows the set or keeps its size while strictly lowering
// the level m. Word length is at most d_t - d_m + 1.
//
// Throws NotProperNonempty / ChainIncomplete (via the level pair) and
// LemmaAFailure if no coset/helper pair exists (impossible for complete
// chains).
ExpandStep expand_step(const BinaryDfa& dfa, const SubgroupChain& chain,
                       const StateSet& s);

// Iterates expand_step from s up to the full set and concatenates the step
// words right-to-left. The result w satisfies apply(Q, w) == s and
// |w| <= n(n - |s|) + n - 1.
//
// Requires a standardized automaton (NotCircularNormalized otherwise): with
// the duplicated value elsewhere the steps can stop growing and cycle.
// Throws NotCompletelyReachable when the subgroup tower stalls before Z_n.
Word construct_reaching_word(const BinaryDfa& dfa, const StateSet& s);

// Shortest w (up to max_len) such that s is reached exactly from some
// strictly larger set: apply(r, w) == s with |r| > |s|, where r is the full
// preimage of s under w. Multi-source breadth-first search over subset
// masks; throws TooLarge for n > 24.
std::optional<Word> find_expanding_word(const BinaryDfa& dfa, const StateSet& s,
                                        int max_len);

// Batch form: dist[m] = length of the shortest word reaching mask m exactly
// from some set of size > size_class (ReachTable::kUnreached if none).
std::vector<std::uint16_t> expansion_distances(const BinaryDfa& dfa,
                                               int size_class);

struct DonViolation {
  StateSet s;
  int shortest_len = 0;
  int bound = 0;  // n * (n - |s|)
};

// All subsets whose shortest reaching word is longer than n(n - |s|),
// sorted by size then by elements. Requires a completely reachable
// automaton (NotCompletelyReachable).
std::vector<DonViolation> don_check(const BinaryDfa& dfa);
std::vector<DonViolation> don_check(const BinaryDfa& dfa, const ReachTable& table);

struct BoundsReport {
  int n = 0;
  int s = 0;  // target set size
  std::optional<int> k;
  // n(n-s): the subset ceiling that don_check scans against.
  long long don = 0;
  // n(n-s) + n - 1: the constructive ceiling realized by expansion words.
  long long thm1 = 0;
  // 2(n-s)n - n ln(n-s) - n/(n-s): the sharper asymptotic ceiling (0 at s=n).
  double fs = 0.0;
  // Extra cost of transporting a word through the substitution a -> b^k a:
  // (n-s)n + n - 1 + k(2n - s - 1). Present iff k was given.
  std::optional<long long> std_transfer;
};

// Throws OutOfRange unless 2 <= n, 1 <= s <= n, and (if given) 1 <= k < n.
BoundsReport bounds_report(int n, int s, std::optional<int> k = std::nullopt);

}  // namespace reachlab
