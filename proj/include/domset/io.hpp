#pragma once

#include <filesystem>
#include <string>

#include "domset/engine.hpp"

namespace domset {

/// Solution file payload: the solved instance's identity plus the run
/// result. `marked` is omitted from the JSON when include_marked is off
/// (large graphs); `size` is always present.
struct SolutionFile {
  std::string instance;
  std::uint32_t n = 0;
  std::uint64_t m_edges = 0;
  Solution solution;
};

std::string solution_to_json(const SolutionFile& sf, bool include_marked);
SolutionFile solution_from_json(const std::string& text);

void write_solution(const std::filesystem::path& path, const SolutionFile& sf,
                    bool include_marked);
SolutionFile read_solution(const std::filesystem::path& path);

}  // namespace domset
