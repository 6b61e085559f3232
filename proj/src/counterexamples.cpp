#include "reachlab/counterexamples.hpp"

#include <numeric>

#include "reachlab/reachability.hpp"

namespace reachlab {

BinaryDfa build_B_8() { return BinaryDfa({1, 3, 5, 7, 6, 4, 2, 4}); }

BinaryDfa build_A_n(int n) {
  if (n < 10 || n % 2 != 0)
    throw ReachError(ErrorCode::BadN,
                     "the family is defined for even n >= 10, got n=" +
                         std::to_string(n));
  std::vector<int> a(n);
  std::iota(a.begin(), a.end(), 0);
  a[0] = n - 3;
  a[n - 3] = 1;
  a[1] = n - 2;
  a[n - 2] = n / 2;
  a[n / 2] = n - 4;
  a[n - 4] = n - 1;
  a[n - 1] = n / 2;
  return BinaryDfa(a);
}

CounterexampleReport verify_counterexample(int n) {
  BinaryDfa dfa = build_A_n(n);
  ReachTable table = reach_table(dfa);
  CounterexampleReport report;
  report.n = n;
  report.is_cr = is_completely_reachable(table);
  report.target = StateSet::full_set(n);
  report.target.erase(n / 2 - 1).erase(n - 1);
  if (!table.reached(report.target.mask))
    throw ReachError(ErrorCode::Unreachable,
                     "target " + report.target.to_string() + " is unreachable");
  report.shortest_len = table.dist[report.target.mask];
  report.lower_bound = 5 * n / 2 - 3;
  report.don_bound = 2 * n;
  report.violates = report.shortest_len > report.don_bound;
  return report;
}

}  // namespace reachlab
