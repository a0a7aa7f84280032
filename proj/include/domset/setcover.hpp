#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "domset/engine.hpp"
#include "domset/graph.hpp"

namespace domset {

/// A set-cover instance: n_elements ground elements and a list of subsets.
struct SetSystem {
  std::uint32_t n_elements = 0;
  std::vector<std::vector<std::uint32_t>> subsets;  // sorted element ids
  std::vector<std::vector<std::uint32_t>> element_membership;  // inverted

  static SetSystem from_subsets(
      std::uint32_t n_elements,
      std::vector<std::vector<std::uint32_t>> subsets);
};

/// Text format: first line "n_elements n_subsets", then one line per
/// subset listing its element ids (0-based). '#'/'%' comments allowed.
SetSystem parse_set_system(std::string_view text,
                           std::string_view origin = "<memory>");
SetSystem load_set_system(const std::filesystem::path& path);

/// Marking adaptation for set cover: each element picks its largest
/// containing subset (weight |A_j| + tag), then m refinement rounds with
/// pick-count weights. Returns the picked subset ids, sorted; always a
/// cover. Throws if some element is in no subset.
std::vector<std::uint32_t> solve_setcover(const SetSystem& sys,
                                          const RunConfig& cfg);

/// Set-cover encoding of minimum dominating set: subset j is the closed
/// neighborhood of node j. A cover of this system is a dominating set.
SetSystem closed_neighborhood_system(const Graph& g);

}  // namespace domset
