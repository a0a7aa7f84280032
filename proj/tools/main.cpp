#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "domset/bench.hpp"
#include "domset/dynamic.hpp"
#include "domset/engine.hpp"
#include "domset/graph.hpp"
#include "domset/io.hpp"
#include "domset/kdistance.hpp"
#include "domset/oracles.hpp"
#include "domset/setcover.hpp"

namespace {

using namespace domset;

GraphFormat parse_format(const std::string& s) {
  if (s == "edgelist") return GraphFormat::edge_list;
  if (s == "dimacs") return GraphFormat::dimacs_like;
  if (s == "mtx") return GraphFormat::matrix_market;
  throw CLI::ValidationError("--format", "expected edgelist|mtx|dimacs");
}

Graph load(const std::string& path, const std::string& format) {
  LoadOptions opts;
  opts.format = parse_format(format);
  Graph g = load_graph(path, opts);
  if (g.self_loops_dropped() || g.duplicates_merged())
    std::cerr << "normalized " << path << ": dropped "
              << g.self_loops_dropped() << " self-loop(s), merged "
              << g.duplicates_merged() << " duplicate edge(s)\n";
  return g;
}

int cmd_solve(const std::string& input, const std::string& format, unsigned m,
              unsigned k, std::uint64_t seed, const std::string& mode,
              const std::string& isolated, bool emit_marked,
              const std::string& out) {
  Graph g = load(input, format);
  KConfig cfg;
  cfg.k = k;
  cfg.base.seed = seed;
  cfg.base.m = m;
  cfg.base.mode = exec_mode_from_string(mode);
  cfg.base.isolated = isolated == "include" ? IsolatedPolicy::include_in_solution
                                            : IsolatedPolicy::error;
  Solution sol = solve_kdistance(g, cfg);

  std::cout << "instance=" << input << " n=" << g.node_count()
            << " m_edges=" << g.edge_count() << " size=" << sol.size()
            << " rounds=" << sol.rounds << " messages=" << sol.messages
            << " elapsed_s=" << sol.elapsed_s << "\n";
  if (!out.empty()) {
    SolutionFile sf{input, g.node_count(), g.edge_count(), sol};
    write_solution(out, sf, emit_marked);
    std::cout << "wrote " << out << "\n";
  }
  return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& format,
               const std::string& solution_path, bool total, unsigned k_flag,
               bool ignore_isolated) {
  Graph g = load(graph_path, format);
  SolutionFile sf = read_solution(solution_path);
  unsigned k = k_flag != 0 ? k_flag : sf.solution.k_used;
  if (sf.n != 0 && sf.n != g.node_count())
    std::cerr << "warning: solution was computed on n=" << sf.n
              << ", graph has n=" << g.node_count() << "\n";
  bool ok = covers(g, sf.solution.marked,
                   {.total = total, .k = k, .ignore_isolated = ignore_isolated});
  std::cout << (ok ? "VALID" : "INVALID") << " size=" << sf.solution.size()
            << " k=" << k << (total ? " total" : "") << "\n";
  return ok ? 0 : 1;
}

int cmd_exact(const std::string& input, const std::string& format,
              bool total_only) {
  Graph g = load(input, format);
  auto print_witness = [&](const std::vector<NodeId>& w) {
    for (NodeId v : w) std::cout << " " << g.label(v);
    std::cout << "\n";
  };
  if (total_only) {
    auto r = exact_min_dominating(g, true);
    std::cout << "gamma_t=" << r.size << " witness:";
    print_witness(r.witness);
  } else {
    auto r = exact_mds(g);
    std::cout << "gamma=" << r.gamma << " witness:";
    print_witness(r.witness_mds);
    std::cout << "gamma_t=" << r.gamma_t << " witness:";
    print_witness(r.witness_mtds);
  }
  return 0;
}

int cmd_dynamic(const std::string& input, const std::string& format,
                const std::string& updates_path, std::uint64_t seed,
                const std::string& out) {
  Graph g = load(input, format);
  DynamicState state(g, seed);

  std::ifstream ups(updates_path);
  if (!ups) throw std::runtime_error("cannot open " + updates_path);

  std::ostringstream csv;
  csv << "update,op,u,v,size\n";
  csv << "0,init,,," << state.marked_size() << "\n";
  std::string line;
  std::size_t line_no = 0, applied = 0;
  while (std::getline(ups, line)) {
    ++line_no;
    std::istringstream is(line);
    std::string op, u_label, v_label;
    if (!(is >> op)) continue;
    if (op == "#" || op[0] == '#' || op[0] == '%') continue;
    if (!(is >> u_label >> v_label) || (op != "+" && op != "-"))
      throw std::runtime_error(updates_path + ":" + std::to_string(line_no) +
                               ": expected '+ u v' or '- u v'");
    NodeId u = state.ensure_node(u_label);
    NodeId v = state.ensure_node(v_label);
    state.apply(op == "+" ? EdgeOp::insert : EdgeOp::remove, u, v);
    ++applied;
    csv << applied << "," << op << "," << u_label << "," << v_label << ","
        << state.marked_size() << "\n";
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream o(out);
    if (!o) throw std::runtime_error("cannot write " + out);
    o << csv.str();
    std::cout << "applied " << applied << " update(s), final size "
              << state.marked_size() << ", wrote " << out << "\n";
  }
  return 0;
}

int cmd_ratio_trials(unsigned trials, unsigned m, std::uint64_t seed,
                     const std::string& out) {
  std::ostringstream csv;
  csv << "trial,n,density,alg_size,gamma,gamma_t,ratio_mds,ratio_mtds\n";
  double max_mds = 0.0, max_mtds = 0.0;
  for (unsigned t = 0; t < trials; ++t) {
    RatioTrial r = approx_ratio_trial(seed + t, m);
    csv << t << "," << r.n << "," << r.density << "," << r.alg_size << ","
        << r.gamma << "," << r.gamma_t << "," << r.ratio_mds << ","
        << r.ratio_mtds << "\n";
    max_mds = std::max(max_mds, r.ratio_mds);
    max_mtds = std::max(max_mtds, r.ratio_mtds);
  }
  if (out.empty()) {
    std::cout << csv.str();
  } else {
    std::ofstream o(out);
    if (!o) throw std::runtime_error("cannot write " + out);
    o << csv.str();
  }
  std::cerr << "max ratio_mds=" << max_mds << " max ratio_mtds=" << max_mtds
            << " over " << trials << " trial(s)\n";
  return 0;
}

int cmd_setcover(const std::string& input, unsigned m, std::uint64_t seed) {
  SetSystem sys = load_set_system(input);
  RunConfig cfg;
  cfg.seed = seed;
  cfg.m = m;
  auto cover = solve_setcover(sys, cfg);
  std::cout << "cover_size=" << cover.size() << "\nsubsets:";
  for (auto j : cover) std::cout << " " << j;
  std::cout << "\n";
  return 0;
}

int cmd_bench(const std::string& spec_path, const std::string& out) {
  BenchSpec spec = load_bench_spec(spec_path);
  BenchReport report = run_bench(spec);
  ReportFormat format = ReportFormat::csv;
  if (out.ends_with(".json")) format = ReportFormat::json;
  if (out.ends_with(".md")) format = ReportFormat::markdown;
  write_report(report, out, format);
  std::size_t failed = 0;
  for (const auto& r : report.rows)
    if (!r.ok()) ++failed;
  std::cout << "wrote " << out << " (" << report.rows.size() << " row(s), "
            << failed << " failed)\n";
  return failed == 0 ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"dominating-set solver and benchmark harness"};
  app.require_subcommand(1);

  // shared option storage
  std::string input, format = "edgelist", out, mode = "seq";
  std::string isolated = "error", graph_path, solution_path, updates_path;
  std::string spec_path;
  unsigned m = 0, k = 1, trials = 100;
  std::uint64_t seed = 1;
  bool emit_marked = false, total = false, ignore_isolated = false;

  auto* solve_cmd = app.add_subcommand("solve", "solve one instance");
  solve_cmd->add_option("--input", input)->required();
  solve_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"edgelist", "mtx", "dimacs"}));
  solve_cmd->add_option("--m", m);
  solve_cmd->add_option("--k", k)->check(CLI::PositiveNumber);
  solve_cmd->add_option("--seed", seed);
  solve_cmd->add_option("--mode", mode)->check(CLI::IsMember({"seq", "sim"}));
  solve_cmd->add_option("--isolated", isolated)
      ->check(CLI::IsMember({"error", "include"}));
  solve_cmd->add_flag("--emit-marked", emit_marked);
  solve_cmd->add_option("--out", out);

  auto* bench_cmd = app.add_subcommand("bench", "run a benchmark spec");
  bench_cmd->add_option("--spec", spec_path)->required();
  bench_cmd->add_option("--out", out)->required();

  auto* verify_cmd = app.add_subcommand("verify", "check a solution file");
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"edgelist", "mtx", "dimacs"}));
  verify_cmd->add_option("--solution", solution_path)->required();
  verify_cmd->add_flag("--total", total);
  unsigned k_flag = 0;
  verify_cmd->add_option("--k", k_flag);
  verify_cmd->add_flag("--ignore-isolated", ignore_isolated);

  auto* exact_cmd = app.add_subcommand("exact", "exact small-instance optimum");
  exact_cmd->add_option("--input", input)->required();
  exact_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"edgelist", "mtx", "dimacs"}));
  exact_cmd->add_flag("--total", total);

  auto* dyn_cmd = app.add_subcommand("dynamic", "replay an edge-update stream");
  dyn_cmd->add_option("--input", input)->required();
  dyn_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"edgelist", "mtx", "dimacs"}));
  dyn_cmd->add_option("--updates", updates_path)->required();
  dyn_cmd->add_option("--seed", seed);
  dyn_cmd->add_option("--out", out);

  auto* ratio_cmd =
      app.add_subcommand("ratio-trials", "approximation-ratio trials");
  ratio_cmd->add_option("--trials", trials);
  ratio_cmd->add_option("--m", m);
  ratio_cmd->add_option("--seed", seed);
  ratio_cmd->add_option("--out", out);

  auto* sc_cmd = app.add_subcommand("setcover", "solve a set-cover instance");
  sc_cmd->add_option("--input", input)->required();
  sc_cmd->add_option("--m", m);
  sc_cmd->add_option("--seed", seed);

  CLI11_PARSE(app, argc, argv);

  try {
    if (solve_cmd->parsed())
      return cmd_solve(input, format, m, k, seed, mode, isolated, emit_marked,
                       out);
    if (bench_cmd->parsed()) return cmd_bench(spec_path, out);
    if (verify_cmd->parsed())
      return cmd_verify(graph_path, format, solution_path, total, k_flag,
                        ignore_isolated);
    if (exact_cmd->parsed()) return cmd_exact(input, format, total);
    if (dyn_cmd->parsed())
      return cmd_dynamic(input, format, updates_path, seed, out);
    if (ratio_cmd->parsed()) return cmd_ratio_trials(trials, m, seed, out);
    if (sc_cmd->parsed()) return cmd_setcover(input, m, seed);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
