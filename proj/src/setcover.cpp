#include "domset/setcover.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "domset/rng.hpp"

namespace domset {

SetSystem SetSystem::from_subsets(
    std::uint32_t n_elements,
    std::vector<std::vector<std::uint32_t>> subsets) {
  SetSystem sys;
  sys.n_elements = n_elements;
  sys.subsets = std::move(subsets);
  sys.element_membership.assign(n_elements, {});
  for (std::uint32_t j = 0; j < sys.subsets.size(); ++j) {
    auto& sub = sys.subsets[j];
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    for (std::uint32_t e : sub) {
      if (e >= n_elements)
        throw std::out_of_range("subset " + std::to_string(j) +
                                " references element " + std::to_string(e) +
                                " >= n_elements");
      sys.element_membership[e].push_back(j);
    }
  }
  return sys;
}

SetSystem parse_set_system(std::string_view text, std::string_view origin) {
  std::uint32_t n_elements = 0, n_subsets = 0;
  std::vector<std::vector<std::uint32_t>> subsets;
  bool have_header = false;

  std::size_t pos = 0, line_no = 0;
  auto fail = [&](const std::string& what) -> void {
    std::ostringstream os;
    os << origin << ":" << line_no << ": " << what;
    throw std::runtime_error(os.str());
  };
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    bool last = (eol == text.size());
    pos = eol + 1;

    std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#' &&
        line[first] != '%') {
      std::vector<std::uint32_t> nums;
      std::size_t i = first;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        if (i >= line.size()) break;
        std::uint32_t value = 0;
        auto [ptr, ec] =
            std::from_chars(line.data() + i, line.data() + line.size(), value);
        if (ec != std::errc{}) fail("expected a non-negative integer");
        i = static_cast<std::size_t>(ptr - line.data());
        nums.push_back(value);
      }
      if (!have_header) {
        if (nums.size() != 2) fail("expected header 'n_elements n_subsets'");
        n_elements = nums[0];
        n_subsets = nums[1];
        have_header = true;
      } else {
        if (subsets.size() == n_subsets) fail("more subset lines than declared");
        subsets.push_back(std::move(nums));
      }
    }
    if (last) break;
  }
  if (!have_header) {
    std::ostringstream os;
    os << origin << ": missing header line";
    throw std::runtime_error(os.str());
  }
  if (subsets.size() != n_subsets) {
    std::ostringstream os;
    os << origin << ": declared " << n_subsets << " subsets, found "
       << subsets.size();
    throw std::runtime_error(os.str());
  }
  return SetSystem::from_subsets(n_elements, std::move(subsets));
}

SetSystem load_set_system(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_set_system(buf.str(), path.string());
}

std::vector<std::uint32_t> solve_setcover(const SetSystem& sys,
                                          const RunConfig& cfg) {
  const std::uint32_t ns = static_cast<std::uint32_t>(sys.subsets.size());
  for (std::uint32_t e = 0; e < sys.n_elements; ++e)
    if (sys.element_membership[e].empty())
      throw std::invalid_argument("infeasible system: element " +
                                  std::to_string(e) + " is in no subset");

  std::vector<double> tags(ns);
  for (std::uint32_t j = 0; j < ns; ++j) tags[j] = node_tag(cfg.seed, j);

  std::vector<double> w(ns);
  for (std::uint32_t j = 0; j < ns; ++j)
    w[j] = static_cast<double>(sys.subsets[j].size()) + tags[j];

  std::vector<std::uint32_t> pick(sys.n_elements);
  auto repick = [&]() {
    for (std::uint32_t e = 0; e < sys.n_elements; ++e) {
      std::uint32_t best = sys.element_membership[e][0];
      for (std::uint32_t j : sys.element_membership[e])
        if (detail::weight_less(w[best], best, w[j], j)) best = j;
      pick[e] = best;
    }
  };
  repick();
  for (unsigned round = 0; round < cfg.m; ++round) {
    std::vector<std::uint32_t> x(ns, 0);
    for (std::uint32_t j : pick) ++x[j];
    for (std::uint32_t j = 0; j < ns; ++j)
      w[j] = static_cast<double>(x[j]) + tags[j];
    repick();
  }

  std::vector<std::uint32_t> chosen(pick.begin(), pick.end());
  std::sort(chosen.begin(), chosen.end());
  chosen.erase(std::unique(chosen.begin(), chosen.end()), chosen.end());
  return chosen;
}

SetSystem closed_neighborhood_system(const Graph& g) {
  std::vector<std::vector<std::uint32_t>> subsets(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    auto nb = g.neighbors(v);
    subsets[v].assign(nb.begin(), nb.end());
    subsets[v].push_back(v);
  }
  return SetSystem::from_subsets(g.node_count(), std::move(subsets));
}

}  // namespace domset
