#include "domset/dynamic.hpp"

#include <algorithm>
#include <stdexcept>

#include "domset/rng.hpp"

namespace domset {

namespace {

bool sorted_contains(const std::vector<NodeId>& v, NodeId x) {
  return std::binary_search(v.begin(), v.end(), x);
}

void sorted_insert(std::vector<NodeId>& v, NodeId x) {
  v.insert(std::lower_bound(v.begin(), v.end(), x), x);
}

void sorted_erase(std::vector<NodeId>& v, NodeId x) {
  v.erase(std::lower_bound(v.begin(), v.end(), x));
}

}  // namespace

DynamicState::DynamicState(const Graph& g, std::uint64_t seed,
                           IsolatedPolicy policy)
    : seed_(seed), policy_(policy) {
  const std::uint32_t n = g.node_count();
  adj_.resize(n);
  labels_.resize(n);
  for (NodeId v = 0; v < n; ++v) {
    auto nb = g.neighbors(v);
    adj_[v].assign(nb.begin(), nb.end());
    labels_[v] = g.label(v);
    label_index_.emplace(labels_[v], v);
  }
  if (policy_ == IsolatedPolicy::error)
    for (NodeId v = 0; v < n; ++v)
      if (adj_[v].empty())
        throw std::invalid_argument(
            "initial graph has an isolated vertex under policy = error");
  tags_.resize(n);
  for (NodeId v = 0; v < n; ++v) tags_[v] = node_tag(seed_, v);
  choice_.assign(n, kInvalidNode);
  chosen_count_.assign(n, 0);
  for (NodeId v = 0; v < n; ++v) reevaluate(v);
  last_affected_.clear();
  last_changed_.clear();
}

std::uint32_t DynamicState::degree(NodeId v) const {
  if (v >= adj_.size()) throw std::out_of_range("node id out of range");
  return static_cast<std::uint32_t>(adj_[v].size());
}

NodeId DynamicState::ensure_node(const std::string& label) {
  auto it = label_index_.find(label);
  if (it != label_index_.end()) return it->second;
  NodeId id = static_cast<NodeId>(adj_.size());
  adj_.emplace_back();
  labels_.push_back(label);
  label_index_.emplace(label, id);
  tags_.push_back(node_tag(seed_, id));
  choice_.push_back(kInvalidNode);
  chosen_count_.push_back(0);
  return id;
}

std::optional<NodeId> DynamicState::find_label(std::string_view label) const {
  auto it = label_index_.find(std::string(label));
  if (it == label_index_.end()) return std::nullopt;
  return it->second;
}

void DynamicState::reevaluate(NodeId v) {
  NodeId best = kInvalidNode;
  double best_w = 0.0;
  for (NodeId u : adj_[v]) {
    double w = static_cast<double>(adj_[u].size()) + tags_[u];
    if (best == kInvalidNode || detail::weight_less(best_w, best, w, u)) {
      best = u;
      best_w = w;
    }
  }
  NodeId old = choice_[v];
  if (old == best) return;
  if (old != kInvalidNode) --chosen_count_[old];
  if (best != kInvalidNode) ++chosen_count_[best];
  choice_[v] = best;
  last_changed_.push_back(v);
}

void DynamicState::apply(EdgeOp op, NodeId u, NodeId v) {
  if (u >= adj_.size() || v >= adj_.size())
    throw std::out_of_range("node id out of range");
  if (u == v) throw std::invalid_argument("self-loops are not allowed");
  const bool present = sorted_contains(adj_[u], v);
  if (op == EdgeOp::insert) {
    if (present) throw std::invalid_argument("edge already present");
    sorted_insert(adj_[u], v);
    sorted_insert(adj_[v], u);
  } else {
    if (!present) throw std::invalid_argument("edge not present");
    if (policy_ == IsolatedPolicy::error &&
        (adj_[u].size() == 1 || adj_[v].size() == 1))
      throw std::invalid_argument(
          "deletion would isolate a vertex under policy = error");
    sorted_erase(adj_[u], v);
    sorted_erase(adj_[v], u);
  }

  // Affected set over post-update adjacency; u and v are always included,
  // which covers choices that pointed across a removed edge.
  last_affected_.clear();
  last_affected_.push_back(u);
  last_affected_.push_back(v);
  last_affected_.insert(last_affected_.end(), adj_[u].begin(), adj_[u].end());
  last_affected_.insert(last_affected_.end(), adj_[v].begin(), adj_[v].end());
  std::sort(last_affected_.begin(), last_affected_.end());
  last_affected_.erase(
      std::unique(last_affected_.begin(), last_affected_.end()),
      last_affected_.end());

  last_changed_.clear();
  for (NodeId a : last_affected_) reevaluate(a);
}

std::vector<NodeId> DynamicState::marked() const {
  std::vector<NodeId> out;
  for (NodeId v = 0; v < adj_.size(); ++v) {
    if (chosen_count_[v] > 0)
      out.push_back(v);
    else if (adj_[v].empty() && policy_ == IsolatedPolicy::include_in_solution)
      out.push_back(v);
  }
  return out;
}

std::size_t DynamicState::marked_size() const {
  std::size_t c = 0;
  for (NodeId v = 0; v < adj_.size(); ++v)
    if (chosen_count_[v] > 0 ||
        (adj_[v].empty() && policy_ == IsolatedPolicy::include_in_solution))
      ++c;
  return c;
}

Graph DynamicState::snapshot() const {
  return Graph::from_adjacency(adj_, labels_);
}

}  // namespace domset
