#include "reachlab/core_automata.hpp"

#include <bit>
#include <cctype>
#include <sstream>

namespace reachlab {

Word Word::a_then_b(int b_count) {
  Word w;
  w.letters.reserve(1 + b_count);
  w.letters.push_back(Letter::A);
  for (int i = 0; i < b_count; ++i) w.letters.push_back(Letter::B);
  return w;
}

Word Word::operator+(const Word& rhs) const {
  Word out;
  out.letters.reserve(letters.size() + rhs.letters.size());
  out.letters = letters;
  out.letters.insert(out.letters.end(), rhs.letters.begin(), rhs.letters.end());
  return out;
}

std::string Word::to_string() const {
  std::string out;
  std::size_t i = 0;
  while (i < letters.size()) {
    std::size_t j = i;
    while (j < letters.size() && letters[j] == letters[i]) ++j;
    if (!out.empty()) out += ' ';
    out += letters[i] == Letter::A ? 'a' : 'b';
    if (j - i > 1) out += std::to_string(j - i);
    i = j;
  }
  return out;
}

std::vector<int> Word::block_shifts() const {
  std::vector<int> shifts;
  std::size_t i = 0;
  while (i < letters.size() && letters[i] == Letter::B) ++i;
  while (i < letters.size()) {
    // letters[i] == A
    std::size_t j = i + 1;
    while (j < letters.size() && letters[j] == Letter::B) ++j;
    shifts.push_back(static_cast<int>(j - i - 1));
    i = j;
  }
  return shifts;
}

StateSet StateSet::full_set(int n) {
  return StateSet(n, n == 64 ? ~0ull : (1ull << n) - 1);
}

StateSet StateSet::singleton(int n, int q) { return StateSet(n, 1ull << q); }

StateSet StateSet::of(int n, std::initializer_list<int> states) {
  StateSet s(n, 0);
  for (int q : states) s.insert(q);
  return s;
}

StateSet& StateSet::insert(int q) {
  mask |= 1ull << q;
  return *this;
}

StateSet& StateSet::erase(int q) {
  mask &= ~(1ull << q);
  return *this;
}

int StateSet::size() const { return std::popcount(mask); }

bool StateSet::subset_of(const StateSet& other) const {
  return (mask & ~other.mask) == 0;
}

StateSet StateSet::operator|(const StateSet& rhs) const {
  return StateSet(n, mask | rhs.mask);
}

StateSet StateSet::operator&(const StateSet& rhs) const {
  return StateSet(n, mask & rhs.mask);
}

StateSet StateSet::operator-(const StateSet& rhs) const {
  return StateSet(n, mask & ~rhs.mask);
}

StateSet StateSet::complement() const {
  return StateSet(n, ~mask & full_set(n).mask);
}

StateSet StateSet::shifted(int k) const {
  k %= n;
  if (k < 0) k += n;
  if (k == 0) return *this;
  std::uint64_t full = full_set(n).mask;
  return StateSet(n, ((mask << k) | (mask >> (n - k))) & full);
}

std::vector<int> StateSet::elements() const {
  std::vector<int> out;
  for (int q = 0; q < n; ++q)
    if (contains(q)) out.push_back(q);
  return out;
}

std::string StateSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int q : elements()) {
    if (!first) out += ',';
    out += std::to_string(q);
    first = false;
  }
  return out + "}";
}

BinaryDfa::BinaryDfa(const std::vector<int>& a_map) {
  if (a_map.size() < 2 || a_map.size() > kMaxStates)
    throw ReachError(ErrorCode::BadN, "state count must be in [2,64], got " +
                                          std::to_string(a_map.size()));
  n_ = static_cast<int>(a_map.size());
  for (int q = 0; q < n_; ++q) {
    if (a_map[q] < 0 || a_map[q] >= n_)
      throw ReachError(ErrorCode::OutOfRange,
                       "a(" + std::to_string(q) + ") = " + std::to_string(a_map[q]) +
                           " is not a state of a " + std::to_string(n_) +
                           "-state automaton");
    a_[q] = static_cast<std::uint8_t>(a_map[q]);
  }
}

std::vector<int> BinaryDfa::a_map() const {
  return std::vector<int>(a_.begin(), a_.begin() + n_);
}

StateSet apply(const BinaryDfa& dfa, StateSet s, Letter x) {
  if (x == Letter::B) return s.shifted(1);
  std::uint64_t out = 0;
  std::uint64_t m = s.mask;
  while (m) {
    int q = std::countr_zero(m);
    m &= m - 1;
    out |= 1ull << dfa.a(q);
  }
  return StateSet(dfa.n(), out);
}

StateSet apply(const BinaryDfa& dfa, StateSet s, const Word& w) {
  for (Letter x : w.letters) s = apply(dfa, s, x);
  return s;
}

StateSet preimage(const BinaryDfa& dfa, StateSet s, Letter x) {
  if (x == Letter::B) return s.shifted(-1);
  StateSet out(dfa.n(), 0);
  for (int q = 0; q < dfa.n(); ++q)
    if (s.contains(dfa.a(q))) out.insert(q);
  return out;
}

StateSet preimage(const BinaryDfa& dfa, StateSet s, const Word& w) {
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    s = preimage(dfa, s, *it);
  return s;
}

ExclDupl excl_dupl(const BinaryDfa& dfa, const Word& w) {
  int n = dfa.n();
  std::array<int, BinaryDfa::kMaxStates> hits{};
  for (int q = 0; q < n; ++q) {
    int p = q;
    for (Letter x : w.letters) p = dfa.step(p, x);
    ++hits[p];
  }
  ExclDupl out{StateSet(n, 0), StateSet(n, 0)};
  for (int p = 0; p < n; ++p) {
    if (hits[p] == 0) out.excl.insert(p);
    if (hits[p] >= 2) out.dupl.insert(p);
  }
  return out;
}

ExclDupl excl_dupl_a(const BinaryDfa& dfa) {
  return excl_dupl(dfa, Word({Letter::A}));
}

bool has_rank_n_minus_1(const BinaryDfa& dfa) {
  ExclDupl ed = excl_dupl_a(dfa);
  return ed.excl.size() == 1 && ed.dupl.size() == 1;
}

bool is_normal_form(const BinaryDfa& dfa) {
  ExclDupl ed = excl_dupl_a(dfa);
  return ed.excl == StateSet::singleton(dfa.n(), 0) && ed.dupl.size() == 1;
}

bool is_standardized(const BinaryDfa& dfa) {
  ExclDupl ed = excl_dupl_a(dfa);
  return ed.excl == StateSet::singleton(dfa.n(), 0) &&
         ed.dupl == StateSet::singleton(dfa.n(), dfa.a(0));
}

BinaryDfa normalize_circular(const BinaryDfa& dfa) {
  ExclDupl ed = excl_dupl_a(dfa);
  if (ed.excl.size() != 1 || ed.dupl.size() != 1)
    throw ReachError(ErrorCode::NotRankNMinus1,
                     "a-map has excl " + ed.excl.to_string() + " and dupl " +
                         ed.dupl.to_string() + "; need exactly one of each");
  int n = dfa.n();
  int e = ed.excl.elements()[0];
  int c = (n - e) % n;
  // Conjugation by q -> q+c maps the excluded state e to 0 and commutes
  // with b, so the letter's behavior is preserved up to relabeling.
  std::vector<int> a_map(n);
  for (int q = 0; q < n; ++q)
    a_map[q] = (dfa.a(((q - c) % n + n) % n) + c) % n;
  return BinaryDfa(a_map);
}

std::vector<std::pair<int, BinaryDfa>> standardize_with_shifts(const BinaryDfa& dfa) {
  if (!is_normal_form(dfa))
    throw ReachError(ErrorCode::NotCircularNormalized,
                     "automaton must have excl(a) = {0} and a single duplicated "
                     "image point");
  int n = dfa.n();
  int d = excl_dupl_a(dfa).dupl.elements()[0];
  std::vector<std::pair<int, BinaryDfa>> out;
  for (int k = 1; k < n; ++k) {
    if (dfa.a(k) != d) continue;
    // Substituting a -> b^k a relabels the a-map to q -> a(q+k); the result
    // has a(0) equal to the duplicated state.
    std::vector<int> a_map(n);
    for (int q = 0; q < n; ++q) a_map[q] = dfa.a((q + k) % n);
    out.emplace_back(k, BinaryDfa(a_map));
  }
  return out;
}

std::vector<BinaryDfa> standardize(const BinaryDfa& dfa) {
  std::vector<BinaryDfa> out;
  for (auto& [k, std_dfa] : standardize_with_shifts(dfa)) out.push_back(std_dfa);
  return out;
}

std::string serialize(const BinaryDfa& dfa) {
  std::string out = "n=" + std::to_string(dfa.n()) + "; a=";
  for (int q = 0; q < dfa.n(); ++q) {
    if (q) out += ',';
    out += std::to_string(dfa.a(q));
  }
  return out;
}

namespace {

// Cursor over one line of text; positions are 1-based for error messages.
struct LineCursor {
  const std::string& text;
  int line_no;
  std::size_t pos = 0;

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(line_no, static_cast<int>(pos) + 1, message);
  }
  void skip_spaces() {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  }
  bool at_end() {
    skip_spaces();
    return pos >= text.size();
  }
  void expect(char c) {
    skip_spaces();
    if (pos >= text.size() || text[pos] != c)
      fail(std::string("expected '") + c + "'");
    ++pos;
  }
  int expect_int() {
    skip_spaces();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      fail("expected a number");
    long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + (text[pos] - '0');
      if (value > 1'000'000) fail("number too large");
      ++pos;
    }
    return static_cast<int>(value);
  }
  std::vector<int> expect_int_list() {
    std::vector<int> out;
    out.push_back(expect_int());
    while (true) {
      skip_spaces();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        out.push_back(expect_int());
      } else {
        break;
      }
    }
    return out;
  }
};

}  // namespace

BinaryDfa parse_automaton_line(const std::string& line, int line_no) {
  LineCursor cur{line, line_no};
  cur.expect('n');
  cur.expect('=');
  int n = cur.expect_int();
  cur.expect(';');
  cur.expect('a');
  cur.expect('=');
  std::vector<int> a_map = cur.expect_int_list();
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  if (static_cast<int>(a_map.size()) != n)
    throw ParseError(line_no, 0,
                     "a-map has " + std::to_string(a_map.size()) +
                         " entries but n=" + std::to_string(n));
  try {
    return BinaryDfa(a_map);
  } catch (const ReachError& e) {
    throw ParseError(line_no, 0, e.what());
  }
}

std::vector<BinaryDfa> parse_automata(const std::string& text) {
  std::vector<BinaryDfa> out;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(parse_automaton_line(line, line_no));
  }
  return out;
}

BinaryDfa parse_a_map(const std::string& text) {
  LineCursor cur{text, 1};
  std::vector<int> a_map = cur.expect_int_list();
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  try {
    return BinaryDfa(a_map);
  } catch (const ReachError& e) {
    throw ParseError(1, 0, e.what());
  }
}

StateSet parse_state_set(int n, const std::string& text) {
  LineCursor cur{text, 1};
  cur.skip_spaces();
  bool braced = cur.pos < text.size() && text[cur.pos] == '{';
  if (braced) ++cur.pos;
  StateSet s(n, 0);
  cur.skip_spaces();
  bool empty_list = braced && cur.pos < text.size() && text[cur.pos] == '}';
  if (!empty_list && !cur.at_end()) {
    for (int q : cur.expect_int_list()) {
      if (q >= n)
        throw ParseError(1, 0, "state " + std::to_string(q) +
                                   " is out of range for n=" + std::to_string(n));
      s.insert(q);
    }
  }
  if (braced) cur.expect('}');
  if (!cur.at_end()) cur.fail("unexpected trailing text");
  return s;
}

std::string to_dot(const BinaryDfa& dfa, const DotOptions& options) {
  std::string out = "digraph " + options.graph_name + " {\n";
  out += "  rankdir=LR;\n  node [shape=circle];\n";
  for (int q = 0; q < dfa.n(); ++q) {
    if (options.omit_a_self_loops && dfa.a(q) == q) continue;
    out += "  " + std::to_string(q) + " -> " + std::to_string(dfa.a(q)) +
           " [style=solid, label=\"a\"];\n";
  }
  for (int q = 0; q < dfa.n(); ++q) {
    out += "  " + std::to_string(q) + " -> " + std::to_string((q + 1) % dfa.n()) +
           " [style=dashed, label=\"b\"];\n";
  }
  return out + "}\n";
}

}  // namespace reachlab
