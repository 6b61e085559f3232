#include "doctest.h"

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <set>
#include <string>
#include <vector>

#include "reachlab/core_automata.hpp"
#include "reachlab/enumeration.hpp"
#include "reachlab/errors.hpp"

using namespace reachlab;

TEST_CASE("candidate counts") {
  CHECK(candidate_count(3, EnumMode::Binary) == 6);
  CHECK(candidate_count(3, EnumMode::Standardized) == 4);
  CHECK(candidate_count(4, EnumMode::Binary) == 36);
  CHECK(candidate_count(4, EnumMode::Standardized) == 18);
  CHECK(candidate_count(5, EnumMode::Binary) == 240);
  CHECK(candidate_count(5, EnumMode::Standardized) == 96);
  CHECK(candidate_count(6, EnumMode::Binary) == 1800);
  CHECK(candidate_count(6, EnumMode::Standardized) == 600);
  CHECK(candidate_count(7, EnumMode::Binary) == 15120);
  CHECK(candidate_count(7, EnumMode::Standardized) == 4320);
  CHECK(candidate_count(8, EnumMode::Binary) == 141120);
  CHECK(candidate_count(8, EnumMode::Standardized) == 35280);
  CHECK(candidate_count(10, EnumMode::Binary) == 16329600);
}

TEST_CASE("streaming the binary candidates") {
  CandidateStream stream(4, EnumMode::Binary);
  std::set<std::string> seen;
  int standardized_count = 0;
  int last_a0 = 0;
  bool prev_flag = true;
  BinaryDfa dfa;
  bool flag = false;
  while (stream.next(dfa, &flag)) {
    CHECK(seen.insert(serialize(dfa)).second);
    // Image is exactly {1,...,n-1}.
    ExclDupl ed = excl_dupl_a(dfa);
    CHECK(ed.excl == StateSet::singleton(4, 0));
    CHECK(ed.dupl.size() == 1);
    CHECK(flag == is_standardized(dfa));
    if (flag) ++standardized_count;
    // Standardized candidates come first within each shard.
    if (dfa.a(0) != last_a0) {
      last_a0 = dfa.a(0);
      prev_flag = true;
    }
    CHECK((prev_flag || !flag));
    prev_flag = flag;
  }
  CHECK(seen.size() == 36);
  CHECK(standardized_count == 18);
}

TEST_CASE("shards partition the candidates") {
  std::set<std::string> all;
  CandidateStream whole(5, EnumMode::Binary);
  BinaryDfa dfa;
  while (whole.next(dfa)) all.insert(serialize(dfa));
  CHECK(all.size() == 240);

  std::set<std::string> merged;
  for (int a0 = 1; a0 < 5; ++a0) {
    CandidateStream shard(5, EnumMode::Binary, a0);
    std::uint64_t count = 0;
    while (shard.next(dfa)) {
      CHECK(dfa.a(0) == a0);
      merged.insert(serialize(dfa));
      ++count;
    }
    CHECK(count == 60);
  }
  CHECK(merged == all);
}

TEST_CASE("standardized mode streams only standardized maps") {
  CandidateStream stream(5, EnumMode::Standardized);
  BinaryDfa dfa;
  std::uint64_t count = 0;
  while (stream.next(dfa)) {
    CHECK(is_standardized(dfa));
    ++count;
  }
  CHECK(count == 96);
}

TEST_CASE("callback form visits everything once") {
  std::uint64_t count = 0;
  std::uint64_t standardized = 0;
  for_each_candidate(4, EnumMode::Binary, [&](const BinaryDfa& dfa, bool flag) {
    CHECK(flag == is_standardized(dfa));
    ++count;
    if (flag) ++standardized;
  });
  CHECK(count == 36);
  CHECK(standardized == 18);
}

TEST_CASE("stream argument validation") {
  CHECK_THROWS_AS(CandidateStream(2, EnumMode::Binary), ReachError);
  CHECK_THROWS_AS(CandidateStream(11, EnumMode::Binary), ReachError);
  CHECK_THROWS_AS(CandidateStream(5, EnumMode::Binary, 5), ReachError);
  CHECK_THROWS_AS(CandidateStream(5, EnumMode::Binary, -1), ReachError);
  try {
    CandidateStream(11, EnumMode::Binary);
  } catch (const ReachError& e) {
    CHECK(e.code() == ErrorCode::OutOfRange);
  }
  CHECK_THROWS_AS(table1(2, EnumMode::Binary), ReachError);
  CHECK_THROWS_AS(table1(11, EnumMode::Binary), ReachError);
}

TEST_CASE("full sweeps over small n") {
  Table1Options options;
  options.workers = 2;
  options.collect_violators = true;

  struct Row {
    int n;
    std::uint64_t total, cr;
  };
  const Row binary_rows[] = {{3, 6, 6}, {4, 36, 32}, {5, 240, 240}, {6, 1800, 1656}};
  for (const Row& row : binary_rows) {
    EnumerationSummary s = table1(row.n, EnumMode::Binary, options);
    CHECK(s.n == row.n);
    CHECK(s.mode == EnumMode::Binary);
    CHECK(s.total_candidates == row.total);
    CHECK(s.cr_count == row.cr);
    CHECK(s.violator_count_binary == 0);
    CHECK(s.violator_count_standardized == 0);
    CHECK(s.violator_list.empty());
  }

  const Row std_rows[] = {{3, 4, 4}, {4, 18, 16}, {5, 96, 96}, {6, 600, 552}};
  for (const Row& row : std_rows) {
    EnumerationSummary s = table1(row.n, EnumMode::Standardized, options);
    CHECK(s.total_candidates == row.total);
    CHECK(s.cr_count == row.cr);
    CHECK(s.violator_count_standardized == 0);
    CHECK(s.violator_list.empty());
  }
}

TEST_CASE("worker count does not change the result") {
  Table1Options one;
  one.workers = 1;
  one.collect_violators = true;
  Table1Options three;
  three.workers = 3;
  three.collect_violators = true;

  EnumerationSummary a = table1(6, EnumMode::Binary, one);
  EnumerationSummary b = table1(6, EnumMode::Binary, three);
  CHECK(a.total_candidates == b.total_candidates);
  CHECK(a.cr_count == b.cr_count);
  CHECK(a.violator_count_binary == b.violator_count_binary);
  CHECK(a.violator_count_standardized == b.violator_count_standardized);
  CHECK(a.violator_list == b.violator_list);
}

TEST_CASE("checkpointed sweeps resume and survive corruption") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "reachlab_ckpt_test";
  fs::remove_all(dir);

  Table1Options options;
  options.workers = 2;
  options.collect_violators = true;
  options.checkpoint_dir = dir.string();

  EnumerationSummary first = table1(4, EnumMode::Binary, options);
  CHECK(first.total_candidates == 36);
  CHECK(first.cr_count == 32);
  for (int a0 = 1; a0 < 4; ++a0)
    CHECK(fs::exists(dir / ("table1_n4_binary_a0_" + std::to_string(a0) + ".json")));

  EnumerationSummary reloaded = table1(4, EnumMode::Binary, options);
  CHECK(reloaded.total_candidates == first.total_candidates);
  CHECK(reloaded.cr_count == first.cr_count);
  CHECK(reloaded.violator_list == first.violator_list);

  {
    std::ofstream out(dir / "table1_n4_binary_a0_2.json", std::ios::trunc);
    out << "not json";
  }
  EnumerationSummary repaired = table1(4, EnumMode::Binary, options);
  CHECK(repaired.total_candidates == first.total_candidates);
  CHECK(repaired.cr_count == first.cr_count);

  fs::remove_all(dir);
}
