#include "domset/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "domset/engine.hpp"
#include "domset/rng.hpp"

namespace domset {

namespace {

std::vector<char> membership(const Graph& g, std::span<const NodeId> s) {
  std::vector<char> in(g.node_count(), 0);
  for (NodeId v : s) {
    if (v >= g.node_count())
      throw std::out_of_range("solution node id out of range");
    in[v] = 1;
  }
  return in;
}

// Is there a set member at distance [1, k] from v? (bounded BFS)
bool set_within_k(const Graph& g, NodeId v, unsigned k,
                  const std::vector<char>& in_set, KhopScratch& scratch) {
  bool found = false;
  scratch.visit(v, k, [&](NodeId u) { found = found || in_set[u]; });
  return found;
}

}  // namespace

bool covers(const Graph& g, std::span<const NodeId> s, CoverageCheck opt) {
  if (opt.k == 0) throw std::invalid_argument("k must be >= 1");
  auto in_set = membership(g, s);
  if (opt.k == 1) {
    for (NodeId v = 0; v < g.node_count(); ++v) {
      if (opt.ignore_isolated && g.degree(v) == 0) continue;
      if (!opt.total && in_set[v]) continue;
      bool ok = false;
      for (NodeId u : g.neighbors(v))
        if (in_set[u]) {
          ok = true;
          break;
        }
      if (!ok) return false;
    }
    return true;
  }
  KhopScratch scratch(g);
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (opt.ignore_isolated && g.degree(v) == 0) continue;
    if (!opt.total && in_set[v]) continue;
    if (!set_within_k(g, v, opt.k, in_set, scratch)) return false;
  }
  return true;
}

bool is_dominating(const Graph& g, std::span<const NodeId> s) {
  return covers(g, s, {.total = false, .k = 1});
}

bool is_total_dominating(const Graph& g, std::span<const NodeId> s) {
  return covers(g, s, {.total = true, .k = 1});
}

bool is_k_dominating(const Graph& g, std::span<const NodeId> s, unsigned k,
                     bool total) {
  return covers(g, s, {.total = total, .k = k});
}

namespace {

// Search state for the exact solver: n <= 24 lets coverage live in one
// 32-bit mask per node.
struct ExactSearch {
  std::uint32_t n;
  std::uint32_t full;
  std::vector<std::uint32_t> cover;  // cover[c]: elements covered by pick c
  std::vector<std::vector<NodeId>> coverers;  // element -> candidate picks
  std::uint32_t max_cover_size = 0;
  std::vector<NodeId> stack;

  bool dfs(std::uint32_t covered, std::uint32_t depth_left) {
    if (covered == full) return true;
    if (depth_left == 0) return false;
    const std::uint32_t uncovered = std::popcount(full & ~covered);
    if (uncovered > depth_left * max_cover_size) return false;

    // Branch on the uncovered element with the fewest live candidates.
    NodeId pivot = kInvalidNode;
    std::size_t best_cands = ~std::size_t{0};
    std::uint32_t rest = full & ~covered;
    while (rest) {
      NodeId v = static_cast<NodeId>(std::countr_zero(rest));
      rest &= rest - 1;
      if (coverers[v].size() < best_cands) {
        best_cands = coverers[v].size();
        pivot = v;
      }
    }
    if (best_cands == 0) return false;  // uncoverable element
    for (NodeId c : coverers[pivot]) {
      stack.push_back(c);
      if (dfs(covered | cover[c], depth_left - 1)) return true;
      stack.pop_back();
    }
    return false;
  }
};

}  // namespace

ExactWitness exact_min_dominating(const Graph& g, bool total,
                                  ExactOptions opts) {
  const std::uint32_t n = g.node_count();
  if (n == 0) throw std::invalid_argument("empty graph");
  if (n > opts.node_budget || n > 24)
    throw std::length_error("graph exceeds the exact-solver budget (n = " +
                            std::to_string(n) + ")");
  if (total)
    for (NodeId v = 0; v < n; ++v)
      if (g.degree(v) == 0)
        throw std::invalid_argument(
            "total domination is undefined with isolated vertices");

  ExactSearch s;
  s.n = n;
  s.full = (n == 32) ? 0xffffffffu : ((1u << n) - 1);
  s.cover.assign(n, 0);
  s.coverers.assign(n, {});
  for (NodeId c = 0; c < n; ++c) {
    std::uint32_t mask = total ? 0 : (1u << c);
    for (NodeId u : g.neighbors(c)) mask |= 1u << u;
    s.cover[c] = mask;
    s.max_cover_size = std::max(s.max_cover_size,
                                static_cast<std::uint32_t>(std::popcount(mask)));
  }
  for (NodeId v = 0; v < n; ++v)
    for (NodeId c = 0; c < n; ++c)
      if (s.cover[c] & (1u << v)) s.coverers[v].push_back(c);

  const std::uint32_t lb = std::max<std::uint32_t>(
      1, (n + s.max_cover_size - 1) / s.max_cover_size);
  for (std::uint32_t target = lb; target <= n; ++target) {
    s.stack.clear();
    if (s.dfs(0, target)) {
      ExactWitness w;
      w.size = target;
      w.witness = s.stack;
      std::sort(w.witness.begin(), w.witness.end());
      return w;
    }
  }
  throw std::logic_error("exact search failed to find any dominating set");
}

ExactResult exact_mds(const Graph& g, ExactOptions opts) {
  ExactResult r;
  auto mds = exact_min_dominating(g, false, opts);
  auto mtds = exact_min_dominating(g, true, opts);
  r.gamma = mds.size;
  r.gamma_t = mtds.size;
  r.witness_mds = std::move(mds.witness);
  r.witness_mtds = std::move(mtds.witness);
  return r;
}

std::vector<NodeId> greedy_mds(const Graph& g) {
  const std::uint32_t n = g.node_count();
  std::vector<char> covered(n, 0);
  std::uint32_t covered_count = 0;
  std::vector<NodeId> picked;
  while (covered_count < n) {
    NodeId best = kInvalidNode;
    std::uint32_t best_gain = 0;
    for (NodeId v = 0; v < n; ++v) {
      std::uint32_t gain = covered[v] ? 0 : 1;
      for (NodeId u : g.neighbors(v)) gain += covered[u] ? 0 : 1;
      if (gain > best_gain) {
        best_gain = gain;
        best = v;
      }
    }
    covered_count += best_gain;
    if (!covered[best]) covered[best] = 1;
    for (NodeId u : g.neighbors(best)) covered[u] = 1;
    picked.push_back(best);
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

namespace {

bool connected(const Graph& g) {
  if (g.node_count() == 0) return false;
  std::vector<char> seen(g.node_count(), 0);
  std::vector<NodeId> stack{0};
  seen[0] = 1;
  std::uint32_t count = 1;
  while (!stack.empty()) {
    NodeId v = stack.back();
    stack.pop_back();
    for (NodeId u : g.neighbors(v))
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == g.node_count();
}

bool has_triangle(const Graph& g) {
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto nv = g.neighbors(v);
    for (NodeId u : nv) {
      if (u <= v) continue;
      auto nu = g.neighbors(u);
      // sorted lists: intersect
      auto a = nv.begin();
      auto b = nu.begin();
      while (a != nv.end() && b != nu.end()) {
        if (*a == *b) return true;
        if (*a < *b)
          ++a;
        else
          ++b;
      }
    }
  }
  return false;
}

}  // namespace

Graph gen_planar_trianglefree(std::uint64_t seed, std::uint32_t n,
                              double density) {
  if (n < 2) throw std::invalid_argument("need n >= 2");
  const std::uint32_t rows = std::max<std::uint32_t>(
      1, static_cast<std::uint32_t>(std::lround(std::sqrt(double(n)))));
  const std::uint32_t cols = (n + rows - 1) / rows;

  // Serpentine enumeration of the first n cells: consecutive cells are
  // grid-adjacent, so consecutive-pair edges form a connected backbone.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> cell(n);
  std::vector<std::string> labels(n);
  std::vector<std::vector<NodeId>> at(rows,
                                      std::vector<NodeId>(cols, kInvalidNode));
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint32_t r = i / cols;
    std::uint32_t c = (r % 2 == 0) ? (i % cols) : (cols - 1 - i % cols);
    cell[i] = {r, c};
    at[r][c] = i;
    labels[i] = std::to_string(r) + "_" + std::to_string(c);
  }

  std::vector<std::pair<NodeId, NodeId>> candidates;
  for (std::uint32_t i = 0; i < n; ++i) {
    auto [r, c] = cell[i];
    if (c + 1 < cols && at[r][c + 1] != kInvalidNode)
      candidates.emplace_back(i, at[r][c + 1]);
    if (r + 1 < rows && at[r + 1][c] != kInvalidNode)
      candidates.emplace_back(i, at[r + 1][c]);
  }

  Rng rng(splitmix64(seed) ^ 0x706c616e61724766ull);
  Graph g;
  std::vector<std::pair<NodeId, NodeId>> edges;
  bool ok = false;
  for (int attempt = 0; attempt < 64 && !ok; ++attempt) {
    edges.clear();
    for (auto e : candidates)
      if (rng.next_double() < density) edges.push_back(e);
    if (edges.empty()) continue;
    g = Graph::from_edges(edges, labels);
    ok = connected(g);
  }
  if (!ok) {
    // Bounded resampling failed; fall back to the sampled edges plus the
    // serpentine backbone, which is connected by construction.
    for (std::uint32_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    g = Graph::from_edges(edges, labels);
  }

  if (has_triangle(g))
    throw std::logic_error("grid subgraph generator produced a triangle");
  if (!isolated_vertices(g).empty())
    throw std::logic_error("generator produced an isolated vertex");
  return g;
}

RatioTrial approx_ratio_trial(std::uint64_t seed, unsigned m) {
  Rng rng(splitmix64(seed) ^ 0x726174696f743031ull);
  RatioTrial t;
  t.n = 6 + static_cast<std::uint32_t>(rng.below(15));  // [6, 20]
  t.density = 0.3 + 0.6 * rng.next_double();

  Graph g = gen_planar_trianglefree(rng.next_u64(), t.n, t.density);
  RunConfig cfg;
  cfg.seed = rng.next_u64();
  cfg.m = m;
  Solution sol = solve(g, cfg);
  ExactResult exact = exact_mds(g);

  t.alg_size = static_cast<std::uint32_t>(sol.size());
  t.gamma = exact.gamma;
  t.gamma_t = exact.gamma_t;
  t.ratio_mds = double(t.alg_size) / double(t.gamma);
  t.ratio_mtds = double(t.alg_size) / double(t.gamma_t);
  if (m == 0 && (t.ratio_mtds > 16.0 || t.ratio_mds > 32.0))
    throw std::logic_error(
        "approximation bound violated on a triangle-free planar instance");
  return t;
}

}  // namespace domset
