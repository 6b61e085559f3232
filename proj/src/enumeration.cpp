#include "reachlab/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <thread>

#include "json.hpp"

#include "reachlab/reachability.hpp"

namespace reachlab {

const char* enum_mode_name(EnumMode mode) {
  return mode == EnumMode::Binary ? "binary" : "standardized";
}

namespace {

std::uint64_t factorial(int k) {
  std::uint64_t out = 1;
  for (int i = 2; i <= k; ++i) out *= i;
  return out;
}

void check_enum_range(int n) {
  if (n < 3 || n > 10)
    throw ReachError(ErrorCode::OutOfRange,
                     "enumeration supports 3 <= n <= 10, got n=" +
                         std::to_string(n));
}

}  // namespace

std::uint64_t candidate_count(int n, EnumMode mode) {
  check_enum_range(n);
  if (mode == EnumMode::Binary)
    return std::uint64_t{1} * n * (n - 1) / 2 * factorial(n - 1);
  return std::uint64_t{1} * (n - 1) * (n - 1) * factorial(n - 2);
}

CandidateStream::CandidateStream(int n, EnumMode mode, int a0)
    : n_(n), mode_(mode) {
  check_enum_range(n);
  if (a0 < 0 || a0 >= n)
    throw ReachError(ErrorCode::OutOfRange,
                     "shard key must be 0 (all) or in [1,n), got " +
                         std::to_string(a0));
  shard_lo_ = a0 == 0 ? 1 : a0;
  shard_hi_ = a0 == 0 ? n - 1 : a0;
  a0_ = shard_lo_;
  enter_shard();
}

void CandidateStream::enter_shard() {
  rest_values_.clear();
  for (int v = 1; v < n_; ++v)
    if (v != a0_) rest_values_.push_back(v);
  in_case_a_ = true;
  partner_ = 1;
  reset_case_a();
}

void CandidateStream::reset_case_a() { perm_ = rest_values_; }

void CandidateStream::reset_case_b() {
  dup_index_ = 0;
  pair_p_ = 1;
  pair_q_ = 2;
  set_case_b_perm();
}

bool CandidateStream::next(BinaryDfa& out, bool* standardized) {
  if (done_) return false;
  static thread_local std::vector<int> a;
  a.assign(n_, 0);
  a[0] = a0_;
  if (in_case_a_) {
    a[partner_] = a0_;
    int pi = 0;
    for (int q = 1; q < n_; ++q)
      if (q != partner_) a[q] = perm_[pi++];
  } else {
    int dup = rest_values_[dup_index_];
    a[pair_p_] = dup;
    a[pair_q_] = dup;
    int pi = 0;
    for (int q = 1; q < n_; ++q)
      if (q != pair_p_ && q != pair_q_) a[q] = perm_[pi++];
  }
  out = BinaryDfa(a);
  if (standardized) *standardized = in_case_a_;
  advance();
  return true;
}

void CandidateStream::advance() {
  if (std::next_permutation(perm_.begin(), perm_.end())) return;
  if (in_case_a_) {
    ++partner_;
    if (partner_ < n_) {
      reset_case_a();
      return;
    }
    if (mode_ == EnumMode::Binary) {
      in_case_a_ = false;
      reset_case_b();
      return;
    }
  } else {
    ++pair_q_;
    if (pair_q_ >= n_) {
      ++pair_p_;
      pair_q_ = pair_p_ + 1;
    }
    if (pair_q_ < n_) {
      set_case_b_perm();
      return;
    }
    ++dup_index_;
    if (dup_index_ < static_cast<int>(rest_values_.size())) {
      pair_p_ = 1;
      pair_q_ = 2;
      set_case_b_perm();
      return;
    }
  }
  ++a0_;
  if (a0_ > shard_hi_) {
    done_ = true;
    return;
  }
  enter_shard();
}

void CandidateStream::set_case_b_perm() {
  perm_.clear();
  for (std::size_t i = 0; i < rest_values_.size(); ++i)
    if (static_cast<int>(i) != dup_index_) perm_.push_back(rest_values_[i]);
}

CandidateStream enumerate_candidates(int n, EnumMode mode) {
  return CandidateStream(n, mode);
}

void for_each_candidate(int n, EnumMode mode,
                        const std::function<void(const BinaryDfa&, bool)>& fn) {
  CandidateStream stream(n, mode);
  BinaryDfa dfa;
  bool standardized = false;
  while (stream.next(dfa, &standardized)) fn(dfa, standardized);
}

namespace {

struct ShardResult {
  std::uint64_t total = 0;
  std::uint64_t cr = 0;
  std::uint64_t viol_binary = 0;
  std::uint64_t viol_standardized = 0;
  bool has_violator_list = false;
  std::vector<std::vector<int>> violators;
};

ShardResult sweep_shard(int n, EnumMode mode, int a0, bool collect) {
  ShardResult res;
  res.has_violator_list = collect;
  CandidateStream stream(n, mode, a0);
  BinaryDfa dfa;
  bool standardized = false;
  ReachTable table;
  std::uint64_t all_reached = (std::uint64_t{1} << n) - 1;
  std::array<int, 25> bound{};
  for (int k = 0; k <= n; ++k) bound[k] = n * (n - k);
  while (stream.next(dfa, &standardized)) {
    ++res.total;
    reach_table_into(dfa, table);
    if (table.reached_count != all_reached) continue;
    ++res.cr;
    bool violates = false;
    std::uint32_t size = 1u << n;
    for (std::uint32_t m = 1; m < size; ++m) {
      if (table.dist[m] > bound[std::popcount(m)]) {
        violates = true;
        break;
      }
    }
    if (!violates) continue;
    if (mode == EnumMode::Binary) ++res.viol_binary;
    if (standardized) ++res.viol_standardized;
    if (collect) res.violators.push_back(dfa.a_map());
  }
  return res;
}

std::string checkpoint_path(const std::string& dir, int n, EnumMode mode,
                            int a0) {
  return dir + "/table1_n" + std::to_string(n) + "_" + enum_mode_name(mode) +
         "_a0_" + std::to_string(a0) + ".json";
}

bool load_checkpoint(const std::string& path, int n, EnumMode mode, int a0,
                     bool need_violators, ShardResult& res) {
  std::ifstream in(path);
  if (!in) return false;
  nlohmann::json j;
  try {
    in >> j;
    if (j.at("n") != n || j.at("mode") != enum_mode_name(mode) ||
        j.at("a0") != a0)
      return false;
    bool has_list = j.at("has_violator_list").get<bool>();
    if (need_violators && !has_list) return false;
    res.total = j.at("total").get<std::uint64_t>();
    res.cr = j.at("cr").get<std::uint64_t>();
    res.viol_binary = j.at("violators_binary").get<std::uint64_t>();
    res.viol_standardized = j.at("violators_standardized").get<std::uint64_t>();
    res.has_violator_list = has_list;
    if (has_list)
      res.violators = j.at("violator_list").get<std::vector<std::vector<int>>>();
  } catch (const nlohmann::json::exception&) {
    return false;
  }
  return true;
}

void store_checkpoint(const std::string& path, int n, EnumMode mode, int a0,
                      const ShardResult& res) {
  nlohmann::json j;
  j["n"] = n;
  j["mode"] = enum_mode_name(mode);
  j["a0"] = a0;
  j["total"] = res.total;
  j["cr"] = res.cr;
  j["violators_binary"] = res.viol_binary;
  j["violators_standardized"] = res.viol_standardized;
  j["has_violator_list"] = res.has_violator_list;
  if (res.has_violator_list) j["violator_list"] = res.violators;
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    out << j.dump();
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

EnumerationSummary table1(int n, EnumMode mode, const Table1Options& options) {
  check_enum_range(n);
  int shard_count = n - 1;
  std::vector<ShardResult> results(shard_count);
  std::vector<char> ready(shard_count, 0);
  bool checkpointing = !options.checkpoint_dir.empty();
  if (checkpointing) {
    std::filesystem::create_directories(options.checkpoint_dir);
    for (int i = 0; i < shard_count; ++i)
      ready[i] = load_checkpoint(
          checkpoint_path(options.checkpoint_dir, n, mode, i + 1), n, mode,
          i + 1, options.collect_violators, results[i]);
  }

  int workers = options.workers;
  if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
  if (workers < 1) workers = 1;
  if (workers > shard_count) workers = shard_count;

  std::atomic<int> next_shard{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto run = [&]() {
    try {
      while (true) {
        int i = next_shard.fetch_add(1);
        if (i >= shard_count) break;
        if (ready[i]) continue;
        results[i] = sweep_shard(n, mode, i + 1, options.collect_violators);
        if (checkpointing)
          store_checkpoint(checkpoint_path(options.checkpoint_dir, n, mode, i + 1),
                           n, mode, i + 1, results[i]);
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  };
  if (workers == 1) {
    run();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int i = 0; i < workers; ++i) pool.emplace_back(run);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  EnumerationSummary summary;
  summary.n = n;
  summary.mode = mode;
  for (const ShardResult& r : results) {
    summary.total_candidates += r.total;
    summary.cr_count += r.cr;
    summary.violator_count_binary += r.viol_binary;
    summary.violator_count_standardized += r.viol_standardized;
    summary.violator_list.insert(summary.violator_list.end(),
                                 r.violators.begin(), r.violators.end());
  }
  std::sort(summary.violator_list.begin(), summary.violator_list.end());
  return summary;
}

}  // namespace reachlab
