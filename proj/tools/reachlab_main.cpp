// Command line front end for the reachlab library.
//
// Exit codes: 0 success, 1 analysis error (unreachable set, incomplete
// tower, out-of-range argument, ...), 2 malformed input or usage.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "reachlab/counterexamples.hpp"
#include "reachlab/enumeration.hpp"
#include "reachlab/reaching_words.hpp"

namespace {

using nlohmann::json;
using namespace reachlab;

struct AutomatonInput {
  std::string a_map_text;
  std::string input_path;
};

void add_automaton_options(CLI::App* cmd, AutomatonInput& in) {
  auto* inline_opt = cmd->add_option(
      "--a-map", in.a_map_text, "Inline a-map, e.g. \"1,3,5,7,6,4,2,4\"");
  auto* file_opt =
      cmd->add_option("--input", in.input_path,
                      "File with one automaton per line: n=<int>; a=<v0,...>")
          ->check(CLI::ExistingFile);
  inline_opt->excludes(file_opt);
  file_opt->excludes(inline_opt);
}

std::vector<BinaryDfa> load_automata(const AutomatonInput& in) {
  if (!in.a_map_text.empty()) return {parse_a_map(in.a_map_text)};
  if (in.input_path.empty())
    throw CLI::ValidationError("input", "need --a-map or --input");
  std::ifstream file(in.input_path);
  std::ostringstream body;
  body << file.rdbuf();
  std::vector<BinaryDfa> out = parse_automata(body.str());
  if (out.empty())
    throw ParseError(1, 0, "no automata found in " + in.input_path);
  return out;
}

BinaryDfa load_single(const AutomatonInput& in) {
  std::vector<BinaryDfa> all = load_automata(in);
  if (all.size() != 1)
    throw ParseError(1, 0, "this command needs exactly one automaton, got " +
                               std::to_string(all.size()));
  return all[0];
}

json set_to_json(const StateSet& s) { return json(s.elements()); }

// ---- check ----------------------------------------------------------------

void run_check(const AutomatonInput& in, const std::string& format) {
  std::vector<BinaryDfa> automata = load_automata(in);
  json all = json::array();
  bool first = true;
  for (const BinaryDfa& dfa : automata) {
    ExclDupl ed = excl_dupl_a(dfa);
    StateSet orb = orbit(dfa);
    Subgroup k = orbit_subgroup(dfa);
    SubgroupChain chain = subgroup_chain(dfa);
    bool bfs_possible = dfa.n() <= kMaxBfsStates;
    bool cr = false;
    std::vector<DonViolation> violations;
    std::vector<StateSet> wit;
    if (bfs_possible) {
      ReachTable table = reach_table(dfa);
      cr = is_completely_reachable(table);
      if (cr)
        violations = don_check(dfa, table);
      else
        wit = witnesses(table);
    }
    if (format == "json") {
      json j;
      j["n"] = dfa.n();
      j["a_map"] = dfa.a_map();
      j["excl"] = set_to_json(ed.excl);
      j["dupl"] = set_to_json(ed.dupl);
      j["rank_n_minus_1"] = has_rank_n_minus_1(dfa);
      j["normal_form"] = is_normal_form(dfa);
      j["standardized"] = is_standardized(dfa);
      j["orbit"] = set_to_json(orb);
      j["orbit_subgroup_d"] = k.d;
      json divisors = json::array();
      for (const Subgroup& h : chain.levels) divisors.push_back(h.d);
      j["chain_divisors"] = divisors;
      j["chain_complete"] = chain.complete;
      if (bfs_possible) {
        j["completely_reachable"] = cr;
        if (cr) {
          json v = json::array();
          for (const DonViolation& dv : violations)
            v.push_back({{"set", set_to_json(dv.s)},
                         {"shortest_len", dv.shortest_len},
                         {"bound", dv.bound}});
          j["don_violations"] = v;
        } else {
          json w = json::array();
          for (const StateSet& s : wit) w.push_back(set_to_json(s));
          j["witnesses"] = w;
        }
      } else {
        j["completely_reachable"] = nullptr;
      }
      all.push_back(j);
      continue;
    }
    if (!first) std::cout << "\n";
    first = false;
    std::cout << serialize(dfa) << "\n";
    std::cout << "rank_n_minus_1=" << (has_rank_n_minus_1(dfa) ? "yes" : "no")
              << " normal_form=" << (is_normal_form(dfa) ? "yes" : "no")
              << " standardized=" << (is_standardized(dfa) ? "yes" : "no")
              << "\n";
    std::cout << "excl=" << ed.excl.to_string() << " dupl=" << ed.dupl.to_string()
              << "\n";
    std::cout << "orbit=" << orb.to_string() << " orbit_subgroup_d=" << k.d
              << "\n";
    std::cout << "chain_divisors=";
    for (std::size_t i = 0; i < chain.levels.size(); ++i)
      std::cout << (i ? "," : "") << chain.levels[i].d;
    std::cout << " complete=" << (chain.complete ? "yes" : "no") << "\n";
    if (!bfs_possible) {
      std::cout << "completely_reachable=skipped (n > "
                << kMaxBfsStates << ")\n";
      continue;
    }
    std::cout << "completely_reachable=" << (cr ? "yes" : "no") << "\n";
    if (cr) {
      std::cout << "don_violations=" << violations.size() << "\n";
      for (const DonViolation& dv : violations)
        std::cout << "  " << dv.s.to_string() << " len=" << dv.shortest_len
                  << " bound=" << dv.bound << "\n";
    } else {
      std::cout << "witnesses=" << wit.size() << "\n";
      std::size_t shown = 0;
      for (const StateSet& s : wit) {
        if (shown == 16) {
          std::cout << "  ...\n";
          break;
        }
        std::cout << "  " << s.to_string() << "\n";
        ++shown;
      }
    }
  }
  if (format == "json") std::cout << all.dump(2) << "\n";
}

// ---- words ----------------------------------------------------------------

void run_shortest_word(const AutomatonInput& in, const std::string& set_text,
                       const std::string& format) {
  BinaryDfa dfa = load_single(in);
  StateSet target = parse_state_set(dfa.n(), set_text);
  ReachTable table = reach_table(dfa);
  Word word = shortest_reaching_word(table, target);
  if (format == "json") {
    json j{{"n", dfa.n()},
           {"set", set_to_json(target)},
           {"length", word.length()},
           {"word", word.to_string()}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "set=" << target.to_string() << "\n"
            << "length=" << word.length() << "\n"
            << "word=" << word.to_string() << "\n";
}

void run_construct_word(const AutomatonInput& in, const std::string& set_text,
                        const std::string& format) {
  BinaryDfa dfa = load_single(in);
  StateSet target = parse_state_set(dfa.n(), set_text);
  Word word = construct_reaching_word(dfa, target);
  int n = dfa.n();
  long long bound =
      static_cast<long long>(n) * (n - target.size()) + n - 1;
  bool reaches = apply(dfa, StateSet::full_set(n), word) == target;
  if (format == "json") {
    json j{{"n", n},
           {"set", set_to_json(target)},
           {"length", word.length()},
           {"bound", bound},
           {"word", word.to_string()},
           {"reaches", reaches}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "set=" << target.to_string() << "\n"
            << "length=" << word.length() << " bound=" << bound << "\n"
            << "word=" << word.to_string() << "\n"
            << "reaches=" << (reaches ? "yes" : "no") << "\n";
}

void run_expand(const AutomatonInput& in, const std::string& set_text,
                int max_len, const std::string& format) {
  BinaryDfa dfa = load_single(in);
  StateSet s = parse_state_set(dfa.n(), set_text);
  std::optional<Word> word = find_expanding_word(dfa, s, max_len);
  if (format == "json") {
    json j{{"n", dfa.n()},
           {"set", set_to_json(s)},
           {"max_len", max_len},
           {"found", word.has_value()}};
    if (word) {
      j["length"] = word->length();
      j["word"] = word->to_string();
    }
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "set=" << s.to_string() << "\n";
  if (word)
    std::cout << "length=" << word->length() << "\n"
              << "word=" << word->to_string() << "\n";
  else
    std::cout << "no expanding word of length <= " << max_len << "\n";
}

// ---- enumeration ----------------------------------------------------------

void run_enumerate(int n, const std::string& mode_name, int workers,
                   bool long_ok, const std::string& emit_violators,
                   const std::string& checkpoint_dir,
                   const std::string& format) {
  if (n >= 9 && !long_ok)
    throw CLI::ValidationError(
        "enumerate", "n >= 9 sweeps are long; pass --long to confirm");
  EnumMode mode =
      mode_name == "standardized" ? EnumMode::Standardized : EnumMode::Binary;
  Table1Options options;
  options.workers = workers;
  options.collect_violators = !emit_violators.empty();
  options.checkpoint_dir = checkpoint_dir;
  EnumerationSummary summary = table1(n, mode, options);
  std::uint64_t primary = mode == EnumMode::Binary
                              ? summary.violator_count_binary
                              : summary.violator_count_standardized;
  if (!emit_violators.empty()) {
    std::ofstream out(emit_violators);
    for (const std::vector<int>& a_map : summary.violator_list)
      out << serialize(BinaryDfa(a_map)) << "\n";
  }
  if (format == "json") {
    json j{{"n", summary.n},
           {"mode", enum_mode_name(summary.mode)},
           {"candidates", summary.total_candidates},
           {"cr", summary.cr_count},
           {"violators_binary", summary.violator_count_binary},
           {"violators_standardized", summary.violator_count_standardized}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  if (format == "csv") {
    std::cout << "n,mode,candidates,cr,violators\n"
              << summary.n << "," << enum_mode_name(summary.mode) << ","
              << summary.total_candidates << "," << summary.cr_count << ","
              << primary << "\n";
    return;
  }
  std::cout << "n=" << summary.n << " mode=" << enum_mode_name(summary.mode)
            << "\n"
            << "candidates=" << summary.total_candidates << "\n"
            << "completely_reachable=" << summary.cr_count << "\n"
            << "violators=" << primary << "\n";
  if (summary.mode == EnumMode::Binary)
    std::cout << "violators_standardized="
              << summary.violator_count_standardized << "\n";
}

// ---- counterexample -------------------------------------------------------

void run_counterexample(int n, const std::string& format) {
  if (format == "dot") {
    std::cout << to_dot(build_A_n(n));
    return;
  }
  CounterexampleReport report = verify_counterexample(n);
  if (format == "json") {
    json j{{"n", report.n},
           {"completely_reachable", report.is_cr},
           {"target", set_to_json(report.target)},
           {"shortest_len", report.shortest_len},
           {"lower_bound", report.lower_bound},
           {"don_bound", report.don_bound},
           {"violates", report.violates}};
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "n=" << report.n << "\n"
            << "completely_reachable=" << (report.is_cr ? "yes" : "no") << "\n"
            << "target=" << report.target.to_string() << "\n"
            << "shortest_len=" << report.shortest_len << "\n"
            << "lower_bound=" << report.lower_bound << "\n"
            << "don_bound=" << report.don_bound << "\n"
            << "violates=" << (report.violates ? "yes" : "no") << "\n";
}

// ---- export / bounds ------------------------------------------------------

void run_export_dot(const AutomatonInput& in, bool omit_self_loops) {
  BinaryDfa dfa = load_single(in);
  DotOptions options;
  options.omit_a_self_loops = omit_self_loops;
  std::cout << to_dot(dfa, options);
}

void run_bounds(int n, int s, int k, const std::string& format) {
  BoundsReport report =
      bounds_report(n, s, k < 0 ? std::nullopt : std::optional<int>(k));
  if (format == "json") {
    json j{{"n", report.n},
           {"s", report.s},
           {"don", report.don},
           {"thm1", report.thm1},
           {"fs", report.fs}};
    if (report.k) j["k"] = *report.k;
    if (report.std_transfer) j["std_transfer"] = *report.std_transfer;
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::cout << "n=" << report.n << " s=" << report.s;
  if (report.k) std::cout << " k=" << *report.k;
  std::cout << "\n"
            << "don=" << report.don << "\n"
            << "thm1=" << report.thm1 << "\n"
            << "fs=" << report.fs << "\n";
  if (report.std_transfer) std::cout << "std_transfer=" << *report.std_transfer << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reachability toolkit for binary automata with a cyclic letter"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "reachlab 0.1.0");

  AutomatonInput check_in;
  std::string check_format = "text";
  auto* check = app.add_subcommand("check", "Analyze automata");
  add_automaton_options(check, check_in);
  check->add_option("--format", check_format)
      ->check(CLI::IsMember({"text", "json"}));

  AutomatonInput sw_in;
  std::string sw_set, sw_format = "text";
  auto* shortest = app.add_subcommand("shortest-word",
                                      "Shortest word reaching a subset");
  add_automaton_options(shortest, sw_in);
  shortest->add_option("--set", sw_set, "Target subset, e.g. \"{1,2,3}\"")
      ->required();
  shortest->add_option("--format", sw_format)
      ->check(CLI::IsMember({"text", "json"}));

  AutomatonInput cw_in;
  std::string cw_set, cw_format = "text";
  auto* construct = app.add_subcommand(
      "construct-word", "Bounded-length reaching word via coset expansion");
  add_automaton_options(construct, cw_in);
  construct->add_option("--set", cw_set, "Target subset")->required();
  construct->add_option("--format", cw_format)
      ->check(CLI::IsMember({"text", "json"}));

  AutomatonInput ex_in;
  std::string ex_set, ex_format = "text";
  int ex_max_len = 64;
  auto* expand = app.add_subcommand(
      "expand", "Shortest word carrying a strictly larger set onto the subset");
  add_automaton_options(expand, ex_in);
  expand->add_option("--set", ex_set, "Subset to expand")->required();
  expand->add_option("--max-len", ex_max_len, "Length cap (default 64)");
  expand->add_option("--format", ex_format)
      ->check(CLI::IsMember({"text", "json"}));

  int en_n = 0, en_workers = 0;
  bool en_long = false;
  std::string en_mode = "binary", en_format = "text";
  std::string en_emit, en_checkpoint;
  auto* enumerate = app.add_subcommand(
      "enumerate", "Sweep all candidate a-maps for one n");
  enumerate->add_option("--n", en_n, "State count (3..10)")->required();
  enumerate->add_option("--mode", en_mode)
      ->check(CLI::IsMember({"binary", "standardized"}));
  enumerate->add_option("--workers", en_workers,
                        "Worker threads (0 = all cores)");
  enumerate->add_flag("--long", en_long, "Allow the long n >= 9 sweeps");
  enumerate->add_option("--emit-violators", en_emit,
                        "Write violator a-maps to this file");
  enumerate->add_option("--checkpoint", en_checkpoint,
                        "Directory for per-shard resume files");
  enumerate->add_option("--format", en_format)
      ->check(CLI::IsMember({"text", "json", "csv"}));

  int ce_n = 0;
  std::string ce_format = "text";
  auto* counterexample = app.add_subcommand(
      "counterexample", "Build and measure the even-n family member");
  counterexample->add_option("--n", ce_n, "Even state count >= 10")->required();
  counterexample->add_option("--format", ce_format)
      ->check(CLI::IsMember({"text", "json", "dot"}));

  AutomatonInput dot_in;
  bool dot_omit = false;
  auto* export_dot = app.add_subcommand("export-dot", "Graphviz export");
  add_automaton_options(export_dot, dot_in);
  export_dot->add_flag("--omit-a-self-loops", dot_omit,
                       "Drop a-edges that are self loops");

  int b_n = 0, b_s = 0, b_k = -1;
  std::string b_format = "text";
  auto* bounds = app.add_subcommand("bounds", "Word-length ceilings");
  bounds->add_option("--n", b_n, "State count")->required();
  bounds->add_option("--s", b_s, "Target set size")->required();
  bounds->add_option("--k", b_k, "Standardization shift (optional)");
  bounds->add_option("--format", b_format)
      ->check(CLI::IsMember({"text", "json"}));

  check->callback([&] { run_check(check_in, check_format); });
  shortest->callback([&] { run_shortest_word(sw_in, sw_set, sw_format); });
  construct->callback([&] { run_construct_word(cw_in, cw_set, cw_format); });
  expand->callback([&] { run_expand(ex_in, ex_set, ex_max_len, ex_format); });
  enumerate->callback([&] {
    run_enumerate(en_n, en_mode, en_workers, en_long, en_emit, en_checkpoint,
                  en_format);
  });
  counterexample->callback([&] { run_counterexample(ce_n, ce_format); });
  export_dot->callback([&] { run_export_dot(dot_in, dot_omit); });
  bounds->callback([&] { run_bounds(b_n, b_s, b_k, b_format); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const reachlab::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const reachlab::ReachError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
