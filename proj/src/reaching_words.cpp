#include "reachlab/reaching_words.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace reachlab {

namespace {

Word word_from_parents(const std::vector<std::uint16_t>& dist,
                       const std::vector<std::uint32_t>& parent,
                       std::uint32_t target) {
  std::vector<Letter> letters;
  std::uint32_t cur = target;
  while (dist[cur] != 0) {
    std::uint32_t p = parent[cur];
    letters.push_back(static_cast<Letter>(p & 1u));
    cur = p >> 1;
  }
  std::reverse(letters.begin(), letters.end());
  return Word(std::move(letters));
}

}  // namespace

Word shortest_reaching_word(const ReachTable& table, const StateSet& s) {
  if (s.n != table.n)
    throw ReachError(ErrorCode::OutOfRange,
                     "set is over " + std::to_string(s.n) +
                         " states but the table is over " +
                         std::to_string(table.n));
  if (s.empty() || !table.reached(s.mask))
    throw ReachError(ErrorCode::Unreachable,
                     "no word reaches " + s.to_string());
  return word_from_parents(table.dist, table.parent,
                           static_cast<std::uint32_t>(s.mask));
}

std::vector<std::pair<StateSet, Word>> pi_predecessors(const BinaryDfa& dfa,
                                                       const StateSet& s) {
  ExclDupl ed = excl_dupl_a(dfa);
  std::vector<std::pair<StateSet, Word>> out;
  for (int i = 0; i < dfa.n(); ++i) {
    StateSet t = s.shifted(-i);
    if (!(t & ed.excl).empty()) continue;  // the a-step would drop states
    out.emplace_back(preimage(dfa, t, Letter::A), Word::a_then_b(i));
  }
  return out;
}

ExpandStep expand_step(const BinaryDfa& dfa, const SubgroupChain& chain,
                       const StateSet& s) {
  LevelPair lp = m_t(chain, s);
  int n = dfa.n();
  int d_m = chain.levels[lp.m].d;
  int d_t = chain.levels[lp.t].d;
  for (int i = 0; i < d_t; i += d_m) {
    StateSet coset = Coset{Subgroup{n, d_t}, i}.members();
    if (!(coset & s).empty()) continue;  // coset must avoid s inside H_m
    for (int u : chain.u_sets[lp.t].elements()) {
      if (!coset.shifted(u).subset_of(s)) continue;
      Word w = Word::a_then_b(i);
      ExpandStep step;
      step.r = preimage(dfa, s, w);
      step.w = std::move(w);
      step.kind = step.r.size() > s.size() ? ExpandKind::Grew
                                           : ExpandKind::Descended;
      step.m = lp.m;
      step.t = lp.t;
      return step;
    }
  }
  throw ReachError(ErrorCode::LemmaAFailure,
                   "no coset/helper pair expands " + s.to_string());
}

Word construct_reaching_word(const BinaryDfa& dfa, const StateSet& s) {
  if (!is_standardized(dfa))
    throw ReachError(ErrorCode::NotCircularNormalized,
                     "word construction needs a standardized automaton");
  SubgroupChain chain = subgroup_chain(dfa);
  if (!chain.complete)
    throw ReachError(ErrorCode::NotCompletelyReachable,
                     "subgroup tower stalls at d=" +
                         std::to_string(chain.levels.back().d));
  int n = dfa.n();
  Word out;
  StateSet cur = s;
  bool prev_descended = false;
  int prev_m = 0;
  int guard = n * (n + 1);
  while (cur.size() < n) {
    ExpandStep step = expand_step(dfa, chain, cur);
    // After a size-preserving step the level must strictly drop, otherwise
    // the loop could cycle; this cannot happen for a complete chain.
    if (prev_descended && step.m >= prev_m)
      throw ReachError(ErrorCode::LemmaAFailure,
                       "level did not decrease after a size-preserving step");
    prev_descended = step.kind == ExpandKind::Descended;
    prev_m = step.m;
    out = step.w + out;
    cur = step.r;
    if (--guard < 0)
      throw ReachError(ErrorCode::LemmaAFailure,
                       "expansion loop did not terminate");
  }
  return out;
}

namespace {

// Multi-source breadth-first search over subset masks: sources are all
// masks larger than size_class (ascending, distance 0), edges are exact
// letter images. dist[m] is then the shortest length of a word carrying
// some strictly larger set exactly onto m.
void expansion_bfs(const BinaryDfa& dfa, int size_class,
                   std::vector<std::uint16_t>& dist,
                   std::vector<std::uint32_t>* parent) {
  int n = dfa.n();
  if (n > kMaxBfsStates)
    throw ReachError(ErrorCode::TooLarge,
                     "subset tables need 2^" + std::to_string(n) +
                         " entries; the limit is n=" +
                         std::to_string(kMaxBfsStates));
  std::size_t size = std::size_t{1} << n;
  dist.assign(size, ReachTable::kUnreached);
  if (parent) parent->resize(size);

  static thread_local std::vector<std::uint32_t> queue;
  queue.clear();
  queue.reserve(size);
  for (std::uint32_t m = 1; m < size; ++m) {
    if (std::popcount(m) > size_class) {
      dist[m] = 0;
      queue.push_back(m);
    }
  }
  std::uint32_t full = static_cast<std::uint32_t>(size - 1);
  std::size_t head = 0;
  while (head < queue.size()) {
    std::uint32_t m = queue[head++];
    std::uint16_t nd = static_cast<std::uint16_t>(dist[m] + 1);
    std::uint32_t ia = 0;
    std::uint32_t rest = m;
    while (rest) {
      int q = std::countr_zero(rest);
      rest &= rest - 1;
      ia |= 1u << dfa.a(q);
    }
    std::uint32_t ib = ((m << 1) | (m >> (n - 1))) & full;
    if (dist[ia] == ReachTable::kUnreached) {
      dist[ia] = nd;
      if (parent) (*parent)[ia] = (m << 1) | 0u;
      queue.push_back(ia);
    }
    if (dist[ib] == ReachTable::kUnreached) {
      dist[ib] = nd;
      if (parent) (*parent)[ib] = (m << 1) | 1u;
      queue.push_back(ib);
    }
  }
}

}  // namespace

std::optional<Word> find_expanding_word(const BinaryDfa& dfa, const StateSet& s,
                                        int max_len) {
  std::vector<std::uint16_t> dist;
  std::vector<std::uint32_t> parent;
  expansion_bfs(dfa, s.size(), dist, &parent);
  std::uint32_t m = static_cast<std::uint32_t>(s.mask);
  if (dist[m] == ReachTable::kUnreached || dist[m] > max_len) return std::nullopt;
  return word_from_parents(dist, parent, m);
}

std::vector<std::uint16_t> expansion_distances(const BinaryDfa& dfa,
                                               int size_class) {
  std::vector<std::uint16_t> dist;
  expansion_bfs(dfa, size_class, dist, nullptr);
  return dist;
}

std::vector<DonViolation> don_check(const BinaryDfa& dfa,
                                    const ReachTable& table) {
  if (!is_completely_reachable(table))
    throw ReachError(ErrorCode::NotCompletelyReachable,
                     "some nonempty subset is unreachable");
  int n = dfa.n();
  std::array<int, kMaxBfsStates + 1> bound{};
  for (int k = 0; k <= n; ++k) bound[k] = n * (n - k);
  std::vector<DonViolation> out;
  std::size_t size = std::size_t{1} << n;
  for (std::uint32_t m = 1; m < size; ++m) {
    int d = table.dist[m];
    int b = bound[std::popcount(m)];
    if (d > b) out.push_back(DonViolation{StateSet(n, m), d, b});
  }
  std::sort(out.begin(), out.end(), [](const DonViolation& x, const DonViolation& y) {
    if (x.s.size() != y.s.size()) return x.s.size() < y.s.size();
    return x.s.elements() < y.s.elements();
  });
  return out;
}

std::vector<DonViolation> don_check(const BinaryDfa& dfa) {
  return don_check(dfa, reach_table(dfa));
}

BoundsReport bounds_report(int n, int s, std::optional<int> k) {
  if (n < 2)
    throw ReachError(ErrorCode::OutOfRange, "need n >= 2");
  if (s < 1 || s > n)
    throw ReachError(ErrorCode::OutOfRange,
                     "need 1 <= s <= n, got s=" + std::to_string(s));
  if (k && (*k < 1 || *k >= n))
    throw ReachError(ErrorCode::OutOfRange,
                     "need 1 <= k <= n-1, got k=" + std::to_string(*k));
  BoundsReport report;
  report.n = n;
  report.s = s;
  report.k = k;
  long long gap = n - s;
  report.don = static_cast<long long>(n) * gap;
  report.thm1 = report.don + n - 1;
  report.fs = s == n ? 0.0
                     : 2.0 * gap * n - n * std::log(static_cast<double>(gap)) -
                           static_cast<double>(n) / gap;
  if (k)
    report.std_transfer =
        gap * n + n - 1 + static_cast<long long>(*k) * (2LL * n - s - 1);
  return report;
}

}  // namespace reachlab
