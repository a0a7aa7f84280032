#include "domset/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace domset {

namespace {

[[noreturn]] void parse_fail(std::string_view origin, std::size_t line,
                             const std::string& what) {
  std::ostringstream os;
  os << origin << ":" << line << ": " << what;
  throw std::runtime_error(os.str());
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    std::size_t start = i;
    while (i < line.size() &&
           !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::uint64_t parse_u64(std::string_view tok, std::string_view origin,
                        std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    parse_fail(origin, line, "expected a non-negative integer, got '" +
                                 std::string(tok) + "'");
  return value;
}

// Walks lines of `text`, invoking fn(line_number, content) for every
// non-blank, non-comment line.
template <class Fn>
void for_data_lines(std::string_view text, std::string_view comment_prefixes,
                    Fn&& fn) {
  std::size_t pos = 0, line_no = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    pos = eol + 1;
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos) continue;
    if (comment_prefixes.find(line[first]) != std::string_view::npos) continue;
    fn(line_no, line);
    if (eol == text.size()) break;
  }
}

struct RawGraph {
  std::vector<std::string> labels;
  std::vector<std::pair<NodeId, NodeId>> edges;
  std::unordered_map<std::string, NodeId> index;

  NodeId intern(std::string_view label) {
    auto it = index.find(std::string(label));
    if (it != index.end()) return it->second;
    NodeId id = static_cast<NodeId>(labels.size());
    labels.emplace_back(label);
    index.emplace(labels.back(), id);
    return id;
  }

  // Pre-declares nodes 1..n with their decimal labels (DIMACS / MTX).
  void declare_numeric(std::uint64_t n, std::string_view origin,
                       std::size_t line) {
    if (n > 0xfffffffeull)
      parse_fail(origin, line, "node count too large");
    labels.reserve(n);
    for (std::uint64_t i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
  }
};

RawGraph parse_edge_list(std::string_view text, const LoadOptions& opts,
                         std::string_view origin) {
  RawGraph raw;
  for_data_lines(text, opts.comment_prefixes,
                 [&](std::size_t line_no, std::string_view line) {
                   auto toks = split_ws(line);
                   if (toks.size() < 2)
                     parse_fail(origin, line_no,
                                "expected 'u v', got '" + std::string(line) +
                                    "'");
                   NodeId u = raw.intern(toks[0]);
                   NodeId v = raw.intern(toks[1]);
                   raw.edges.emplace_back(u, v);
                 });
  return raw;
}

RawGraph parse_dimacs(std::string_view text, const LoadOptions& opts,
                      std::string_view origin) {
  RawGraph raw;
  std::uint64_t declared_n = 0;
  bool have_p = false;
  std::string prefixes = opts.comment_prefixes + "c";
  for_data_lines(text, prefixes, [&](std::size_t line_no,
                                     std::string_view line) {
    auto toks = split_ws(line);
    if (toks[0] == "p") {
      if (have_p) parse_fail(origin, line_no, "duplicate 'p' line");
      // "p <format> n [m]" or "p n [m]"
      std::size_t idx = 1;
      if (idx < toks.size() && !std::isdigit(static_cast<unsigned char>(
                                   toks[idx].front())))
        ++idx;
      if (idx >= toks.size())
        parse_fail(origin, line_no, "'p' line missing node count");
      declared_n = parse_u64(toks[idx], origin, line_no);
      raw.declare_numeric(declared_n, origin, line_no);
      have_p = true;
    } else if (toks[0] == "e") {
      if (!have_p)
        parse_fail(origin, line_no, "'e' line before 'p' line");
      if (toks.size() < 3)
        parse_fail(origin, line_no, "expected 'e u v'");
      std::uint64_t u = parse_u64(toks[1], origin, line_no);
      std::uint64_t v = parse_u64(toks[2], origin, line_no);
      if (u < 1 || u > declared_n || v < 1 || v > declared_n)
        parse_fail(origin, line_no, "vertex id out of range 1..n");
      raw.edges.emplace_back(static_cast<NodeId>(u - 1),
                             static_cast<NodeId>(v - 1));
    } else {
      parse_fail(origin, line_no,
                 "unexpected line type '" + std::string(toks[0]) + "'");
    }
  });
  if (!have_p) parse_fail(origin, 1, "missing 'p' line");
  return raw;
}

RawGraph parse_matrix_market(std::string_view text, const LoadOptions& opts,
                             std::string_view origin) {
  RawGraph raw;
  std::uint64_t declared_n = 0;
  bool have_dims = false;
  // The %%MatrixMarket banner is covered by the '%' comment prefix.
  std::string prefixes = opts.comment_prefixes;
  if (prefixes.find('%') == std::string::npos) prefixes += '%';
  for_data_lines(text, prefixes,
                 [&](std::size_t line_no, std::string_view line) {
                   auto toks = split_ws(line);
                   if (!have_dims) {
                     if (toks.size() < 2)
                       parse_fail(origin, line_no,
                                  "expected 'rows cols [nnz]' size line");
                     std::uint64_t rows = parse_u64(toks[0], origin, line_no);
                     std::uint64_t cols = parse_u64(toks[1], origin, line_no);
                     if (rows != cols)
                       parse_fail(origin, line_no,
                                  "matrix must be square to be a graph");
                     declared_n = rows;
                     raw.declare_numeric(declared_n, origin, line_no);
                     have_dims = true;
                     return;
                   }
                   if (toks.size() < 2)
                     parse_fail(origin, line_no, "expected 'u v' entry");
                   std::uint64_t u = parse_u64(toks[0], origin, line_no);
                   std::uint64_t v = parse_u64(toks[1], origin, line_no);
                   if (u < 1 || u > declared_n || v < 1 || v > declared_n)
                     parse_fail(origin, line_no,
                                "entry index out of range 1..n");
                   raw.edges.emplace_back(static_cast<NodeId>(u - 1),
                                          static_cast<NodeId>(v - 1));
                 });
  if (!have_dims) parse_fail(origin, 1, "missing size line");
  return raw;
}

}  // namespace

void Graph::check_node(NodeId v) const {
  if (v >= n_) throw std::out_of_range("node id out of range");
}

void Graph::build_label_index() {
  label_index_.reserve(labels_.size());
  for (NodeId v = 0; v < n_; ++v) label_index_.emplace(labels_[v], v);
}

Graph Graph::from_edges(std::vector<std::pair<NodeId, NodeId>> edges,
                        std::vector<std::string> labels) {
  Graph g;
  g.n_ = static_cast<std::uint32_t>(labels.size());
  g.labels_ = std::move(labels);

  for (auto& [u, v] : edges) {
    if (u >= g.n_ || v >= g.n_)
      throw std::out_of_range("edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  std::size_t kept = 0, loops = 0, dups = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (edges[i].first == edges[i].second) {
      ++loops;
    } else if (kept > 0 && edges[kept - 1] == edges[i]) {
      ++dups;
    } else {
      edges[kept++] = edges[i];
    }
  }
  edges.resize(kept);
  g.self_loops_dropped_ = loops;
  g.duplicates_merged_ = dups;
  g.m_edges_ = kept;

  g.offsets_.assign(g.n_ + 1, 0);
  for (auto [u, v] : edges) {
    ++g.offsets_[u + 1];
    ++g.offsets_[v + 1];
  }
  for (std::uint32_t v = 0; v < g.n_; ++v) g.offsets_[v + 1] += g.offsets_[v];
  g.neighbors_.resize(2 * kept);
  std::vector<std::uint64_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (auto [u, v] : edges) {
    g.neighbors_[cursor[u]++] = v;
    g.neighbors_[cursor[v]++] = u;
  }
  for (std::uint32_t v = 0; v < g.n_; ++v)
    std::sort(g.neighbors_.begin() + g.offsets_[v],
              g.neighbors_.begin() + g.offsets_[v + 1]);

  g.build_label_index();
  return g;
}

Graph Graph::from_adjacency(const std::vector<std::vector<NodeId>>& adj,
                            std::vector<std::string> labels) {
  std::vector<std::pair<NodeId, NodeId>> edges;
  for (NodeId v = 0; v < adj.size(); ++v)
    for (NodeId u : adj[v])
      if (v < u) edges.emplace_back(v, u);
  Graph g = from_edges(std::move(edges), std::move(labels));
  // Symmetry of the input is assumed; a one-sided edge list would show up
  // here as a degree mismatch.
  for (NodeId v = 0; v < adj.size(); ++v)
    if (g.degree(v) != adj[v].size())
      throw std::invalid_argument("adjacency lists are not symmetric");
  return g;
}

bool Graph::has_edge(NodeId u, NodeId v) const {
  check_node(u);
  check_node(v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::optional<NodeId> Graph::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

Graph parse_graph(std::string_view text, const LoadOptions& opts,
                  std::string_view origin) {
  RawGraph raw;
  switch (opts.format) {
    case GraphFormat::edge_list:
      raw = parse_edge_list(text, opts, origin);
      break;
    case GraphFormat::dimacs_like:
      raw = parse_dimacs(text, opts, origin);
      break;
    case GraphFormat::matrix_market:
      raw = parse_matrix_market(text, opts, origin);
      break;
  }
  if (raw.labels.empty()) {
    std::ostringstream os;
    os << origin << ": empty graph (no nodes)";
    throw std::runtime_error(os.str());
  }
  Graph g = Graph::from_edges(std::move(raw.edges), std::move(raw.labels));
  if (!opts.treat_directed_as_undirected && g.duplicates_merged() > 0) {
    std::ostringstream os;
    os << origin << ": " << g.duplicates_merged()
       << " duplicate/reversed edge(s) in strict undirected mode";
    throw std::runtime_error(os.str());
  }
  return g;
}

Graph load_graph(const std::filesystem::path& path, const LoadOptions& opts) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str(), opts, path.string());
}

std::vector<NodeId> isolated_vertices(const Graph& g) {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < g.node_count(); ++v)
    if (g.degree(v) == 0) out.push_back(v);
  return out;
}

std::vector<NodeId> khop_neighbors(const Graph& g, NodeId v, unsigned k) {
  if (v >= g.node_count()) throw std::out_of_range("node id out of range");
  if (k == 0) throw std::invalid_argument("k must be >= 1");
  KhopScratch scratch(g);
  std::vector<NodeId> out;
  scratch.visit(v, k, [&](NodeId u) { out.push_back(u); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace domset
