// Command-line front end: graph export, parameter classification, cop
// numbers, property verification, interactive play and solver benchmarks.
//
// Exit codes: 0 success, 1 verification violation, 2 parameter error,
// 3 resource or budget error.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "gpcops/gpcops.hpp"

namespace {

using namespace gpcops;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitParam = 2;
constexpr int kExitBudget = 3;

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

struct RunReport {
  std::string command;
  json parameters = json::object();
  json results = json::object();
  unsigned worker_count = 1;
  bool table_cache_hit = false;
  json timings = json::array();

  json to_json(double wall_ms) const {
    return {{"command", command},         {"parameters", parameters},
            {"results", results},         {"wall_time_ms", wall_ms},
            {"worker_count", worker_count}, {"table_cache_hit", table_cache_hit},
            {"timings", timings}};
  }
};

std::string cops_text(const GPGraph& g, const CopSet& cops) {
  std::string out;
  for (int i = 0; i < cops.size(); ++i) out += (i ? "," : "") + g.name(cops[i]);
  return out;
}

Symmetry parse_symmetry(const std::string& text) {
  if (text == "on" || text == "dihedral") return Symmetry::Dihedral;
  if (text == "off" || text == "none") return Symmetry::None;
  throw ParamError("--symmetry must be on or off");
}

VerifyScope parse_scope(const std::string& text, std::uint64_t seed) {
  if (text == "exhaustive") return VerifyScope::Exhaustive();
  const std::string prefix = "sample:";
  if (text.rfind(prefix, 0) == 0) {
    try {
      std::size_t used = 0;
      auto count = std::stoull(text.substr(prefix.size()), &used);
      if (used == text.size() - prefix.size() && count > 0) return VerifyScope::Sample(count, seed);
    } catch (const std::exception&) {
    }
  }
  throw ParamError("--scope must be 'exhaustive' or 'sample:<count>'");
}

// graph

struct GraphArgs {
  int n = 0, k = 0;
  std::string format = "adjlist";
};

int cmd_graph(const GraphArgs& a) {
  GPGraph g(a.n, a.k);
  std::cout << export_graph(g, parse_graph_format(a.format));
  return kExitOk;
}

// classify

struct ClassifyArgs {
  int n = 0, k = 0;
  bool json = false;
};

int cmd_classify(const ClassifyArgs& a) {
  auto started = Clock::now();
  GPGraph g(a.n, a.k);
  RunReport report{"classify"};
  report.parameters = {{"n", a.n}, {"k", a.k}};
  json tags = json::array();
  for (auto t : girth7_conditions(a.n, a.k)) tags.push_back(std::string(to_string(t)));
  auto family = family_membership(a.n, a.k);
  int gi = girth(g);
  report.results = {{"girth", gi}, {"girth7_conditions", tags}, {"family", family.has_value()}};
  if (family) {
    report.results["divisor"] = family->divisor;
    report.results["exception"] = family->exception;
  }
  if (a.json) {
    std::cout << report.to_json(elapsed_ms(started)).dump(2) << '\n';
    return kExitOk;
  }
  std::cout << "GP(" << a.n << "," << a.k << ")\n";
  std::cout << "girth: " << gi << '\n';
  std::cout << "girth-7 conditions:";
  if (tags.empty()) std::cout << " none";
  for (const auto& t : tags) std::cout << ' ' << t.get<std::string>();
  std::cout << '\n';
  if (family)
    std::cout << "family: yes (i=" << family->divisor << ", exception=" << (family->exception ? "true" : "false")
              << ")\n";
  else
    std::cout << "family: no\n";
  return kExitOk;
}

// copnumber

struct CopNumberArgs {
  int n = 0, k = 0;
  int max_cops = 4;
  std::string symmetry = "on";
  unsigned threads = 0;
  std::string cache_dir;
  bool no_cache = false;
  bool assume_upper_4 = false;
  bool distances = false;
  double memory_gib = 8;
  bool json = false;
};

struct TableResult {
  WinTable table;
  bool cache_hit;
};

TableResult obtain_table(const GPGraph& g, int c, const SolveOptions& options, bool use_cache,
                         const std::filesystem::path& dir) {
  if (use_cache)
    if (auto cached = load_cached_table(dir, g, c, options.symmetry); cached && (!options.distances || cached->has_distances()))
      return {std::move(*cached), true};
  WinTable t = solve(g, c, options);
  if (use_cache) {
    try {
      store_cached_table(dir, t);
    } catch (const std::exception& e) {
      std::cerr << "warning: could not write table cache: " << e.what() << '\n';
    }
  }
  return {std::move(t), false};
}

int cmd_copnumber(const CopNumberArgs& a) {
  auto started = Clock::now();
  GPGraph g(a.n, a.k);
  if (a.max_cops < 1 || a.max_cops > kMaxCops) throw ParamError("--max-cops must be in [1, 4]");
  SolveOptions options;
  options.symmetry = parse_symmetry(a.symmetry);
  options.threads = resolve_threads(a.threads);
  options.distances = a.distances;
  options.memory_budget = static_cast<std::uint64_t>(a.memory_gib * double(std::uint64_t{1} << 30));
  const auto dir = resolve_cache_dir(a.cache_dir);

  RunReport report{"copnumber"};
  report.worker_count = options.threads;
  report.parameters = {{"n", a.n},
                       {"k", a.k},
                       {"max_cops", a.max_cops},
                       {"symmetry", a.symmetry},
                       {"assume_upper_4", a.assume_upper_4}};
  json per_c = json::array();
  std::optional<int> answer;
  bool assumed = false;
  bool any_hit = false;
  for (int c = 1; c <= a.max_cops && !answer; ++c) {
    if (c == 4 && a.assume_upper_4) {
      per_c.push_back({{"c", 4}, {"assumed", true}});
      answer = 4;
      assumed = true;
      break;
    }
    auto solve_start = Clock::now();
    auto [table, hit] = obtain_table(g, c, options, !a.no_cache, dir);
    any_hit = any_hit || hit;
    auto placement = table.winning_placement();
    json entry = {{"c", c},
                  {"cops_win", placement.has_value()},
                  {"states", table.stats().states},
                  {"stored_states", table.stats().stored_states},
                  {"representatives", table.stats().representatives},
                  {"sweeps", table.stats().sweeps}};
    if (placement) entry["winning_placement"] = cops_text(g, *placement);
    per_c.push_back(entry);
    report.timings.push_back({{"c", c}, {"ms", elapsed_ms(solve_start)}, {"cache_hit", hit}});
    if (!a.json)
      std::cout << "c=" << c << " states=" << table.stats().states << " stored=" << table.stats().stored_states
                << " sweeps=" << table.stats().sweeps << " cops_win=" << (placement ? "true" : "false")
                << " ms=" << static_cast<long long>(elapsed_ms(solve_start)) << (hit ? " (cached)" : "") << '\n';
    if (placement) answer = c;
  }
  report.table_cache_hit = any_hit;
  if (!answer)
    throw ExceedsMaxError("the cops lose with " + std::to_string(a.max_cops) + " cops on GP(" + std::to_string(a.n) +
                          "," + std::to_string(a.k) + ")");
  report.results = {{"cop_number", *answer}, {"upper_bound_assumed", assumed}, {"per_c", per_c}};
  if (a.json)
    std::cout << report.to_json(elapsed_ms(started)).dump(2) << '\n';
  else
    std::cout << "cop number: " << *answer << (assumed ? " (4-cop upper bound assumed)" : "") << '\n';
  return kExitOk;
}

// verify

struct VerifyArgs {
  int n = 0, k = 0;
  std::string lemma;
  std::string scope = "exhaustive";
  std::uint64_t seed = 0x5eed;
  unsigned threads = 0;
  bool json = false;
};

int cmd_verify(const VerifyArgs& a) {
  auto started = Clock::now();
  GPGraph g(a.n, a.k);
  require_family(g);
  const unsigned threads = resolve_threads(a.threads);
  RunReport report{"verify"};
  report.worker_count = threads;
  report.parameters = {{"n", a.n}, {"k", a.k}, {"lemma", a.lemma}, {"scope", a.scope}};
  bool ok = false;
  std::ostringstream text;
  if (a.lemma == "lemma1") {
    auto r = verify_lemma1(g, parse_scope(a.scope, a.seed), threads);
    report.results = to_json(g, r);
    ok = r.violation_count == 0;
    text << "states checked: " << r.states_checked << " (captured skipped: " << r.captured_skipped << ")\n"
         << "case1: " << r.case_counts.case1 << " case2: " << r.case_counts.case2 << " case3: " << r.case_counts.case3
         << " trapped: " << r.case_counts.trapped << '\n'
         << "case-3 condition by subcase: A=" << r.subcases[0] << " B=" << r.subcases[1] << " C=" << r.subcases[2]
         << '\n'
         << "violations: " << r.violation_count << '\n';
    for (const auto& s : r.violations) text << "  " << format_state(g, s) << '\n';
  } else if (a.lemma == "lemma2") {
    auto r = verify_lemma2(g, parse_scope(a.scope, a.seed), threads);
    report.results = to_json(g, r);
    ok = r.violation_count == 0;
    text << "states checked: " << r.states_checked << " (untrapped: " << r.untrapped_states << ")\n"
         << "cop replies checked: " << r.replies_checked << '\n'
         << "violations: " << r.violation_count << '\n';
    for (const auto& s : r.reasons) text << "  " << s << '\n';
  } else if (a.lemma == "counts") {
    auto r = verify_counts(g, threads);
    report.results = to_json(g, r);
    ok = r.adjacent.min == 10 && r.adjacent.max == 10 && r.distance_two.min == 13 && r.distance_two.max == 13 &&
         r.placement_violations == 0;
    text << "adjacent cops: trapped-set size min " << r.adjacent.min << " max " << r.adjacent.max << " over "
         << r.adjacent.configurations << " configurations\n"
         << "distance-2 cops: trapped-set size min " << r.distance_two.min << " max " << r.distance_two.max
         << " over " << r.distance_two.configurations << " configurations\n"
         << "initial placements: " << r.placements_checked << " checked, " << r.placement_violations
         << " trapped\n";
  } else if (a.lemma == "figures") {
    auto r = audit_structure(g);
    report.results = to_json(g, r);
    ok = r.ok();
    text << "girth: " << r.girth << '\n'
         << "roots with the expected depth-4 neighbourhood: " << r.roots_ok << "/" << r.roots_checked << '\n'
         << "edge b_{j+3k} b_{j-3k} for every j: " << (r.dotted_edges ? "yes" : "no") << '\n';
    for (const auto& p : r.problems) text << "  " << p << '\n';
  } else {
    throw ParamError("--lemma must be lemma1, lemma2, counts or figures");
  }
  report.results["verified"] = ok;
  if (a.json)
    std::cout << report.to_json(elapsed_ms(started)).dump(2) << '\n';
  else
    std::cout << text.str() << (ok ? "verified\n" : "VIOLATIONS FOUND\n");
  return ok ? kExitOk : kExitViolation;
}

// play

struct PlayArgs {
  int n = 0, k = 0;
  int cops = 3;
  std::string robber = "strategy";
  std::string cache_dir;
  bool json = false;
};

std::optional<CopSet> read_cops(const GPGraph& g, std::istream& in, int count, bool& quit, std::string& error) {
  std::string line;
  if (!std::getline(in, line)) {
    quit = true;
    return std::nullopt;
  }
  std::istringstream words(line);
  std::vector<std::string> tokens;
  for (std::string w; words >> w;) tokens.push_back(w);
  if (tokens.size() == 1 && (tokens[0] == "quit" || tokens[0] == "q")) {
    quit = true;
    return std::nullopt;
  }
  if (static_cast<int>(tokens.size()) != count) {
    error = "expected " + std::to_string(count) + " vertices";
    return std::nullopt;
  }
  std::vector<VertexId> ids;
  try {
    for (const auto& t : tokens) ids.push_back(g.parse(t));
  } catch (const FormatError& e) {
    error = e.what();
    return std::nullopt;
  }
  return CopSet(ids);
}

int cmd_play(const PlayArgs& a) {
  auto started = Clock::now();
  GPGraph g(a.n, a.k);
  if (a.cops < 1 || a.cops > kMaxCops) throw ParamError("--cops must be in [1, 4]");
  const bool strategy = a.robber == "strategy" || a.robber == "paper";
  if (!strategy && a.robber != "optimal") throw ParamError("--robber must be strategy (alias paper) or optimal");
  if (strategy) {
    require_family(g);
    if (a.cops != 3) throw ParamError("the strategy robber plays against exactly 3 cops");
  }
  std::optional<WinTable> table;
  bool hit = false;
  if (!strategy) {
    SolveOptions options;
    auto result = obtain_table(g, a.cops, options, true, resolve_cache_dir(a.cache_dir));
    table.emplace(std::move(result.table));
    hit = result.cache_hit;
  }

  RunReport report{"play"};
  report.table_cache_hit = hit;
  report.parameters = {{"n", a.n}, {"k", a.k}, {"cops", a.cops}, {"robber", a.robber}};
  json transcript = json::array();
  std::ostream& ui = a.json ? std::cerr : std::cout;

  bool quit = false;
  std::optional<CopSet> placement;
  while (!placement && !quit) {
    ui << "place " << a.cops << " cops (e.g. a0 a5 b3), or quit: " << std::flush;
    std::string error;
    placement = read_cops(g, std::cin, a.cops, quit, error);
    if (!placement && !quit) ui << "invalid input: " << error << '\n';
  }
  std::string outcome = "quit";
  int plies = 0;
  if (placement) {
    GameState s{*placement, 0, Side::Cops};
    s.robber = strategy ? initial_placement(g, s.cops) : optimal_robber_placement(*table, g, s.cops);
    transcript.push_back("place cops=" + cops_text(g, s.cops) + " robber=" + g.name(s.robber));
    ui << "robber starts on " << g.name(s.robber) << '\n';
    while (true) {
      ui << format_state(g, s) << "\ncops> " << std::flush;
      std::string error;
      auto next = read_cops(g, std::cin, a.cops, quit, error);
      if (quit) break;
      if (next) {
        auto legal = cop_moves(g, s);
        if (std::find(legal.begin(), legal.end(), *next) == legal.end()) {
          next.reset();
          error = "not a legal cop move";
        }
      }
      if (!next) {
        ui << "invalid move: " << error << '\n';
        continue;
      }
      s.cops = *next;
      s.to_move = Side::Robber;
      ++plies;
      transcript.push_back("cops " + cops_text(g, s.cops));
      if (is_capture(s)) {
        outcome = "captured";
        ui << "robber captured\n";
        break;
      }
      VertexId reply;
      if (strategy) {
        if (is_trapped(g, s)) {
          outcome = "trapped";
          ui << "robber is trapped\n";
          break;
        }
        reply = safe_move(g, s);
      } else {
        reply = optimal_robber_policy(*table, g, s);
      }
      s.robber = reply;
      s.to_move = Side::Cops;
      ++plies;
      transcript.push_back("robber " + g.name(reply));
      ui << "robber moves to " << g.name(reply) << '\n';
      if (is_capture(s)) {
        outcome = "captured";
        ui << "robber captured\n";
        break;
      }
    }
  }
  report.results = {{"outcome", outcome}, {"plies", plies}, {"transcript", transcript}};
  if (a.json)
    std::cout << report.to_json(elapsed_ms(started)).dump(2) << '\n';
  else
    std::cout << "game over: " << outcome << " after " << plies << " plies\n";
  return kExitOk;
}

// bench

struct BenchArgs {
  std::string suite = "small";
  unsigned threads = 0;
};

int cmd_bench(const BenchArgs& a) {
  struct Case {
    int n, k, c;
  };
  std::vector<Case> cases;
  if (a.suite == "small")
    cases = {{5, 2, 3}, {14, 4, 3}};
  else if (a.suite == "family")
    cases = {{28, 8, 3}, {28, 8, 4}, {35, 10, 3}, {35, 15, 3}, {42, 6, 3}};
  else
    throw ParamError("--suite must be small or family");
  const unsigned max_threads = resolve_threads(a.threads);
  std::vector<unsigned> thread_counts{1};
  if (max_threads > 1) thread_counts.push_back(max_threads);
  std::cout << "n,k,c,symmetry,threads,states,stored_states,sweeps,ms,cops_win,checksum\n";
  for (const auto& bc : cases) {
    GPGraph g(bc.n, bc.k);
    for (Symmetry sym : {Symmetry::None, Symmetry::Dihedral})
      for (unsigned t : thread_counts) {
        SolveOptions options;
        options.symmetry = sym;
        options.threads = t;
        auto table = solve(g, bc.c, options);
        const auto& st = table.stats();
        std::ostringstream sum;
        sum << std::hex << table.checksum();
        std::cout << bc.n << ',' << bc.k << ',' << bc.c << ',' << (sym == Symmetry::Dihedral ? "on" : "off") << ','
                  << t << ',' << st.states << ',' << st.stored_states << ',' << st.sweeps << ','
                  << static_cast<long long>(st.millis) << ',' << (table.cops_win() ? "true" : "false") << ','
                  << sum.str() << '\n';
      }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cops and robbers on generalised Petersen graphs"};
  app.require_subcommand(1);

  GraphArgs graph;
  auto* graph_cmd = app.add_subcommand("graph", "Export GP(n,k) as dot, json or adjlist");
  graph_cmd->add_option("--n", graph.n, "Outer cycle length")->required();
  graph_cmd->add_option("--k", graph.k, "Inner step")->required();
  graph_cmd->add_option("--format", graph.format, "dot, json or adjlist")->capture_default_str();

  ClassifyArgs classify_args;
  auto* classify_cmd = app.add_subcommand("classify", "Girth, girth-7 conditions and family membership");
  classify_cmd->add_option("--n", classify_args.n)->required();
  classify_cmd->add_option("--k", classify_args.k)->required();
  classify_cmd->add_flag("--json", classify_args.json, "Print a JSON run report");

  CopNumberArgs cn;
  auto* cn_cmd = app.add_subcommand("copnumber", "Exact cop number by retrograde analysis");
  cn_cmd->add_option("--n", cn.n)->required();
  cn_cmd->add_option("--k", cn.k)->required();
  cn_cmd->add_option("--max-cops", cn.max_cops, "Largest cop count tried")->capture_default_str();
  cn_cmd->add_option("--symmetry", cn.symmetry, "on or off")->capture_default_str();
  cn_cmd->add_option("--threads", cn.threads, "Worker threads (0: all cores)");
  cn_cmd->add_option("--cache-dir", cn.cache_dir, "Table cache directory (default $GP_PURSUIT_CACHE or ./gpwt-cache)");
  cn_cmd->add_flag("--no-cache", cn.no_cache, "Neither read nor write table caches");
  cn_cmd->add_flag("--assume-upper-4", cn.assume_upper_4, "Take c <= 4 as given instead of solving the 4-cop game");
  cn_cmd->add_flag("--distances", cn.distances, "Also compute capture distances");
  cn_cmd->add_option("--memory-gib", cn.memory_gib, "Memory budget")->capture_default_str();
  cn_cmd->add_flag("--json", cn.json, "Print a JSON run report");

  VerifyArgs vf;
  auto* vf_cmd = app.add_subcommand("verify", "Check the robber strategy's properties");
  vf_cmd->add_option("--n", vf.n)->required();
  vf_cmd->add_option("--k", vf.k)->required();
  vf_cmd->add_option("--lemma", vf.lemma, "lemma1, lemma2, counts or figures")->required();
  vf_cmd->add_option("--scope", vf.scope, "exhaustive or sample:<count>")->capture_default_str();
  vf_cmd->add_option("--seed", vf.seed, "Sampling seed");
  vf_cmd->add_option("--threads", vf.threads, "Worker threads (0: all cores)");
  vf_cmd->add_flag("--json", vf.json, "Print a JSON run report");

  PlayArgs pl;
  auto* pl_cmd = app.add_subcommand("play", "Play the cops against the engine's robber on stdin");
  pl_cmd->add_option("--n", pl.n)->required();
  pl_cmd->add_option("--k", pl.k)->required();
  pl_cmd->add_option("--cops", pl.cops)->capture_default_str();
  pl_cmd->add_option("--robber", pl.robber, "strategy (alias paper) or optimal")->capture_default_str();
  pl_cmd->add_option("--cache-dir", pl.cache_dir, "Table cache directory for the optimal robber");
  pl_cmd->add_flag("--json", pl.json, "Print the transcript as a JSON run report");

  BenchArgs bn;
  auto* bn_cmd = app.add_subcommand("bench", "Time the solver over a fixed matrix; CSV output");
  bn_cmd->add_option("--suite", bn.suite, "small or family")->capture_default_str();
  bn_cmd->add_option("--threads", bn.threads, "Largest thread count (0: all cores)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitParam;
  }

  try {
    if (*graph_cmd) return cmd_graph(graph);
    if (*classify_cmd) return cmd_classify(classify_args);
    if (*cn_cmd) return cmd_copnumber(cn);
    if (*vf_cmd) return cmd_verify(vf);
    if (*pl_cmd) return cmd_play(pl);
    if (*bn_cmd) return cmd_bench(bn);
  } catch (const BudgetError& e) {
    std::cerr << "BudgetError: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ExceedsMaxError& e) {
    std::cerr << "ExceedsMax: " << e.what() << '\n';
    return kExitBudget;
  } catch (const ParamError& e) {
    std::cerr << "ParamError: " << e.what() << '\n';
    return kExitParam;
  } catch (const FamilyError& e) {
    std::cerr << "FamilyError: " << e.what() << '\n';
    return kExitParam;
  } catch (const FormatError& e) {
    std::cerr << "FormatError: " << e.what() << '\n';
    return kExitParam;
  } catch (const StrategyError& e) {
    std::cerr << "StrategyError: " << e.what() << '\n';
    return kExitViolation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBudget;
  }
  return kExitOk;
}
