#include "reachlab/orbit_algebra.hpp"

#include <numeric>

namespace reachlab {

StateSet Subgroup::members() const {
  StateSet out(n, 0);
  for (int q = 0; q < n; q += d) out.insert(q);
  return out;
}

bool Subgroup::contains_subgroup(const Subgroup& other) const {
  return other.d % d == 0;
}

Subgroup span(int n, const StateSet& states) {
  int d = n;
  for (int q : states.elements()) d = std::gcd(d, q);
  return Subgroup{n, d == 0 ? n : d};
}

bool is_union_of_cosets(const Subgroup& h, const StateSet& s) {
  return s.shifted(h.d) == s;
}

StateSet orbit(const BinaryDfa& dfa) {
  StateSet out(dfa.n(), 0);
  int p = dfa.a(0);
  while (!out.contains(p)) {
    out.insert(p);
    p = dfa.a(p);
  }
  return out;
}

Subgroup orbit_subgroup(const BinaryDfa& dfa) {
  return span(dfa.n(), orbit(dfa));
}

SubgroupChain subgroup_chain(const BinaryDfa& dfa) {
  int n = dfa.n();
  SubgroupChain chain;
  chain.levels.push_back(Subgroup{n, n});
  while (true) {
    Subgroup h = chain.levels.back();
    StateSet image(n, 0);
    for (int q = 0; q < n; q += h.d) image.insert(dfa.a(q));
    int next_d = h.d;
    for (int q : image.elements()) next_d = std::gcd(next_d, q);
    if (next_d == h.d) break;  // closed under a: the tower stalls here
    chain.u_sets.push_back(image - h.members());
    chain.levels.push_back(Subgroup{n, next_d});
  }
  chain.ell = static_cast<int>(chain.levels.size()) - 1;
  chain.complete = chain.levels.back().d == 1;
  return chain;
}

LevelPair m_t(const SubgroupChain& chain, const StateSet& s) {
  if (!s.proper_nonempty())
    throw ReachError(ErrorCode::NotProperNonempty,
                     "level pair is defined only for proper nonempty sets, got " +
                         s.to_string());
  if (!chain.complete)
    throw ReachError(ErrorCode::ChainIncomplete,
                     "subgroup tower stalls at d=" +
                         std::to_string(chain.levels.back().d));
  int m = -1;
  for (int i = 0; i <= chain.ell; ++i) {
    StateSet cut = chain.levels[i].members() & s;
    if (!cut.empty() && cut != chain.levels[i].members()) {
      m = i;
      break;
    }
  }
  // The top level is all of Z_n and s is proper nonempty, so m exists.
  StateSet cut = chain.levels[m].members() & s;
  for (int t = m - 1; t >= 0; --t)
    if (is_union_of_cosets(chain.levels[t], cut)) return LevelPair{m, t};
  throw ReachError(ErrorCode::NotProperNonempty, "unreachable");  // t=0 always fits
}

int coset_index(const Subgroup& h, const Subgroup& h_prime, const Coset& c) {
  if (h.n != h_prime.n || c.subgroup.n != h.n || c.subgroup.d != h.d)
    throw ReachError(ErrorCode::NotSubgroupPair,
                     "coset/subgroup arguments do not agree");
  if (!h_prime.contains_subgroup(h))
    throw ReachError(ErrorCode::NotSubgroupPair,
                     std::to_string(h.d) + "Z_" + std::to_string(h.n) +
                         " is not contained in " + std::to_string(h_prime.d) +
                         "Z_" + std::to_string(h.n));
  int r = ((c.r % h.d) + h.d) % h.d;
  if (r % h_prime.d != 0)
    throw ReachError(ErrorCode::CosetNotInside,
                     "coset with offset " + std::to_string(r) +
                         " does not lie inside " + std::to_string(h_prime.d) +
                         "Z_" + std::to_string(h.n));
  return r;
}

}  // namespace reachlab
