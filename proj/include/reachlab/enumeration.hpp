// Exhaustive enumeration of the n-state automata whose a-map has image
// exactly {1,...,n-1}, with reachability statistics over the whole class.
//
// Candidates split into n-1 equal shards keyed by a(0); each shard is
// generated directly (no filtering), so sweeps parallelize over shards
// with a deterministic merge.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "reachlab/core_automata.hpp"

namespace reachlab {

enum class EnumMode { Binary, Standardized };

const char* enum_mode_name(EnumMode mode);

// Number of candidates: C(n,2) * (n-1)! in Binary mode (all a-maps with
// image {1,...,n-1}), (n-1)^2 * (n-2)! in Standardized mode (those whose
// duplicated value is a(0)).
std::uint64_t candidate_count(int n, EnumMode mode);

// Streams candidates without materializing them. Within a shard, the maps
// where state 0 belongs to the duplicated pair come first (these are
// exactly the standardized ones), then the rest; both groups advance in
// lexicographic order of their defining choices. Shards stream in
// ascending a(0).
class CandidateStream {
 public:
  // a0 = 0 streams all shards; a0 in [1, n) restricts to one shard.
  // Throws OutOfRange unless 3 <= n <= 10 and a0 is valid.
  CandidateStream(int n, EnumMode mode, int a0 = 0);

  // Advances the stream. Returns false when exhausted. When `standardized`
  // is non-null it is set to whether the emitted candidate is standardized.
  bool next(BinaryDfa& out, bool* standardized = nullptr);

  int n() const { return n_; }

 private:
  void enter_shard();
  void advance();
  void reset_case_a();
  void reset_case_b();
  void set_case_b_perm();

  int n_ = 0;
  EnumMode mode_{};
  int shard_lo_ = 0, shard_hi_ = 0;
  int a0_ = 0;
  bool in_case_a_ = true;
  bool done_ = false;
  // Case A: state 0 paired with partner_; the other states take perm_.
  // Case B: states pair_p_ < pair_q_ share dup_value_; 0 takes a0_ alone.
  int partner_ = 0;
  int dup_index_ = 0;  // index into rest_values_
  int pair_p_ = 0, pair_q_ = 0;
  std::vector<int> rest_values_;  // {1,...,n-1} minus a0_
  std::vector<int> perm_;
};

// Same stream as CandidateStream(n, mode); convenience entry point.
CandidateStream enumerate_candidates(int n, EnumMode mode = EnumMode::Binary);

// Calls fn(candidate, standardized) for every candidate, shard by shard.
void for_each_candidate(int n, EnumMode mode,
                        const std::function<void(const BinaryDfa&, bool)>& fn);

struct EnumerationSummary {
  int n = 0;
  EnumMode mode{};
  std::uint64_t total_candidates = 0;
  std::uint64_t cr_count = 0;
  // Candidates that are completely reachable yet have a subset whose
  // shortest reaching word exceeds n(n-|s|). The binary count covers every
  // candidate; the standardized count covers the standardized ones. In
  // Standardized mode only the latter is populated.
  std::uint64_t violator_count_binary = 0;
  std::uint64_t violator_count_standardized = 0;
  // a-maps of the violators, sorted lexicographically; filled only when
  // requested in Table1Options.
  std::vector<std::vector<int>> violator_list;
};

struct Table1Options {
  // 0 means one worker per hardware thread (capped at the shard count).
  int workers = 1;
  bool collect_violators = false;
  // When nonempty, per-shard results are written to (and reloaded from)
  // JSON files in this directory, so an interrupted sweep resumes.
  std::string checkpoint_dir;
};

// Full sweep over all candidates for one n: counts candidates, the
// completely reachable ones, and the violators among them. Deterministic
// for every worker count. Throws OutOfRange unless 3 <= n <= 10.
EnumerationSummary table1(int n, EnumMode mode, const Table1Options& options = {});

}  // namespace reachlab
