#include "domset/kdistance.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

namespace domset {

namespace {

// On-the-fly k-neighborhood view of a graph. Degrees are precomputed (one
// BFS sweep); neighbor enumeration re-runs the bounded BFS per query.
class KhopProvider {
 public:
  KhopProvider(const Graph& g, unsigned k)
      : g_(&g), k_(k), scratch_(g), degrees_(g.node_count(), 0) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      std::uint64_t d = 0;
      scratch_.visit(v, k_, [&](NodeId) { ++d; });
      degrees_[v] = d;
    }
  }

  std::uint32_t size() const { return g_->node_count(); }
  std::uint64_t degree(NodeId v) const { return degrees_[v]; }
  std::uint64_t total_links() const {
    return std::accumulate(degrees_.begin(), degrees_.end(),
                           std::uint64_t{0});
  }

  template <class F>
  void for_neighbors(NodeId v, F&& f) const {
    scratch_.visit(v, k_, f);
  }

 private:
  const Graph* g_;
  unsigned k_;
  mutable KhopScratch scratch_;
  std::vector<std::uint64_t> degrees_;
};

std::vector<std::string> copy_labels(const Graph& g) {
  std::vector<std::string> labels(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) labels[v] = g.label(v);
  return labels;
}

Graph materialize(const Graph& g, const KhopProvider& p, unsigned k) {
  std::vector<std::vector<NodeId>> adj(g.node_count());
  KhopScratch scratch(g);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    adj[v].reserve(p.degree(v));
    scratch.visit(v, k, [&](NodeId u) { adj[v].push_back(u); });
    std::sort(adj[v].begin(), adj[v].end());
  }
  return Graph::from_adjacency(adj, copy_labels(g));
}

}  // namespace

Graph power_graph(const Graph& g, unsigned k, std::uint64_t max_links) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  if (k == 1) return g;
  KhopProvider p(g, k);
  if (p.total_links() > max_links)
    throw std::length_error("power graph exceeds the memory budget (" +
                            std::to_string(p.total_links()) +
                            " adjacency entries)");
  return materialize(g, p, k);
}

Solution solve_kdistance(const Graph& g, const KConfig& cfg) {
  if (cfg.k == 0) throw std::invalid_argument("k must be >= 1");
  if (cfg.k == 1) return solve(g, cfg.base);

  // Degree 0 in G is degree 0 in G^k and vice versa for k >= 1.
  auto isolated = isolated_vertices(g);
  detail::require_no_isolated_or_policy(g, isolated, cfg.base.isolated);

  Solution sol;
  sol.m_used = cfg.base.m;
  sol.k_used = cfg.k;
  sol.seed = cfg.base.seed;
  sol.mode = cfg.base.mode;

  const auto start = std::chrono::steady_clock::now();
  auto tags = assign_tags(g, cfg.base.seed);
  KhopProvider onthefly(g, cfg.k);

  const bool use_power = cfg.materialize_power_graph ||
                         onthefly.total_links() <= cfg.power_link_threshold;

  auto run = [&](const auto& provider) {
    if (cfg.base.mode == ExecMode::sequential) {
      sol.messages = 0;
      sol.rounds = 2 + cfg.base.m;
      return detail::run_rounds_sequential(provider, tags, cfg.base.m);
    }
    auto sim = detail::simulate_core(provider, tags, cfg.base.m);
    sol.messages = std::accumulate(sim.messages_per_round.begin(),
                                   sim.messages_per_round.end(),
                                   std::uint64_t{0});
    // Each logical exchange over a k-hop link takes k physical rounds.
    sol.rounds = cfg.k * (2 + cfg.base.m);
    return std::move(sim.choices);
  };

  std::vector<NodeId> choices;
  if (use_power) {
    Graph gp = materialize(g, onthefly, cfg.k);
    choices = run(detail::AdjacencyProvider{&gp});
  } else {
    choices = run(onthefly);
  }
  sol.marked = detail::collect_marked(choices, isolated, cfg.base.isolated);
  sol.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return sol;
}

}  // namespace domset
