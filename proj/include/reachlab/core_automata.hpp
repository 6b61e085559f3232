// Binary automata over the cyclic state set {0,...,n-1}.
//
// The alphabet is fixed: letter b always acts as the cyclic shift q -> q+1
// (mod n), so an automaton is fully described by the transition map of
// letter a. Words act on state sets from left to right.
#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "reachlab/errors.hpp"

namespace reachlab {

enum class Letter : std::uint8_t { A = 0, B = 1 };

// A word over {a,b}. Kept as an explicit letter sequence; the run-length
// form "a2 b5 a b5 a" is only a display format.
struct Word {
  std::vector<Letter> letters;

  Word() = default;
  explicit Word(std::vector<Letter> ls) : letters(std::move(ls)) {}

  // The word a b^i.
  static Word a_then_b(int b_count);

  int length() const { return static_cast<int>(letters.size()); }
  bool empty() const { return letters.empty(); }
  void push_back(Letter x) { letters.push_back(x); }

  // Concatenation.
  Word operator+(const Word& rhs) const;

  // Run-length text, e.g. "a2 b5 a b5 a b3". Empty word prints as "".
  std::string to_string() const;

  // For a word of the form a b^{i_1} a b^{i_2} ... a b^{i_k} (possibly with
  // a leading b-run, which is dropped), returns {i_1, ..., i_k}.
  std::vector<int> block_shifts() const;

  bool operator==(const Word&) const = default;
};

// A subset of {0,...,n-1} stored as a bitmask. Valid for n <= 64.
struct StateSet {
  int n = 0;
  std::uint64_t mask = 0;

  StateSet() = default;
  StateSet(int n, std::uint64_t mask) : n(n), mask(mask) {}
  static StateSet empty_set(int n) { return StateSet(n, 0); }
  static StateSet full_set(int n);
  static StateSet singleton(int n, int q);
  static StateSet of(int n, std::initializer_list<int> states);

  bool contains(int q) const { return (mask >> q) & 1u; }
  StateSet& insert(int q);
  StateSet& erase(int q);

  int size() const;
  bool empty() const { return mask == 0; }
  bool full() const { return *this == full_set(n); }
  bool proper_nonempty() const { return !empty() && !full(); }
  bool subset_of(const StateSet& other) const;

  StateSet operator|(const StateSet& rhs) const;
  StateSet operator&(const StateSet& rhs) const;
  // Set difference.
  StateSet operator-(const StateSet& rhs) const;
  // Complement within {0,...,n-1}.
  StateSet complement() const;

  // { q + k mod n : q in this set }. Accepts any k, including negatives.
  StateSet shifted(int k) const;

  // Ascending.
  std::vector<int> elements() const;

  // "{1,2,3}"; empty set prints as "{}".
  std::string to_string() const;

  bool operator==(const StateSet&) const = default;
};

// Deterministic automaton over {a,b} with states 0..n-1 and b = +1 (mod n).
// Only the a-map is stored. 2 <= n <= 64; every a-value must lie in [0,n).
class BinaryDfa {
 public:
  static constexpr int kMaxStates = 64;

  BinaryDfa() = default;
  explicit BinaryDfa(const std::vector<int>& a_map);

  int n() const { return n_; }
  int a(int q) const { return a_[q]; }
  int step(int q, Letter x) const {
    return x == Letter::A ? a_[q] : (q + 1 == n_ ? 0 : q + 1);
  }
  std::vector<int> a_map() const;

  bool operator==(const BinaryDfa&) const = default;

 private:
  int n_ = 0;
  std::array<std::uint8_t, kMaxStates> a_{};
};

// Image of a set under one letter or a word.
StateSet apply(const BinaryDfa& dfa, StateSet s, Letter x);
StateSet apply(const BinaryDfa& dfa, StateSet s, const Word& w);

// Full preimage: all states that the letter/word maps into s.
StateSet preimage(const BinaryDfa& dfa, StateSet s, Letter x);
StateSet preimage(const BinaryDfa& dfa, StateSet s, const Word& w);

struct ExclDupl {
  StateSet excl;  // states missing from the image of the word
  StateSet dupl;  // image points hit by more than one state
};

// Exclusion and duplication sets of the map induced by w.
ExclDupl excl_dupl(const BinaryDfa& dfa, const Word& w);
// Same for the single letter a.
ExclDupl excl_dupl_a(const BinaryDfa& dfa);

// The a-map has rank n-1: exactly one state is excluded from its image and
// exactly one image point is duplicated.
bool has_rank_n_minus_1(const BinaryDfa& dfa);

// Rank n-1 with excl(a) = {0}.
bool is_normal_form(const BinaryDfa& dfa);

// Normal form with, additionally, dupl(a) = {a(0)}.
bool is_standardized(const BinaryDfa& dfa);

// Conjugates a rank-(n-1) automaton by a cyclic shift so that the excluded
// state becomes 0. Throws NotRankNMinus1 otherwise.
BinaryDfa normalize_circular(const BinaryDfa& dfa);

// The automata obtained by substituting a -> b^k a for each k in [1,n) such
// that a(k) equals the duplicated state; their a-map is q -> a(q + k mod n).
// Each result is standardized. Requires is_normal_form; throws
// NotCircularNormalized otherwise. Results ordered by increasing k.
std::vector<BinaryDfa> standardize(const BinaryDfa& dfa);
// Same, also reporting the k used for each result.
std::vector<std::pair<int, BinaryDfa>> standardize_with_shifts(const BinaryDfa& dfa);

// One automaton per line: "n=8; a=1,3,5,7,6,4,2,4".
std::string serialize(const BinaryDfa& dfa);
// Parses one such line. `line_no` is used in error messages.
BinaryDfa parse_automaton_line(const std::string& line, int line_no = 1);
// Parses a whole file body; skips blank lines and lines starting with '#'.
std::vector<BinaryDfa> parse_automata(const std::string& text);
// Parses "3,5,0,1" (an a-map with n inferred from the entry count).
BinaryDfa parse_a_map(const std::string& text);
// Parses "{1,2,3}" or "1,2,3" against a known n.
StateSet parse_state_set(int n, const std::string& text);

struct DotOptions {
  // Drop a-edges q -> q to reduce clutter.
  bool omit_a_self_loops = false;
  std::string graph_name = "automaton";
};

// Graphviz export: solid edges for a, dashed edges for b.
std::string to_dot(const BinaryDfa& dfa, const DotOptions& options = {});

}  // namespace reachlab
