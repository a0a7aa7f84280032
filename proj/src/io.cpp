#include "domset/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace domset {

std::string solution_to_json(const SolutionFile& sf, bool include_marked) {
  nlohmann::json j;
  j["instance"] = sf.instance;
  j["n"] = sf.n;
  j["m_edges"] = sf.m_edges;
  j["seed"] = sf.solution.seed;
  j["m"] = sf.solution.m_used;
  j["k"] = sf.solution.k_used;
  j["mode"] = to_string(sf.solution.mode);
  j["size"] = sf.solution.marked.size();
  j["rounds"] = sf.solution.rounds;
  j["messages"] = sf.solution.messages;
  j["elapsed_s"] = sf.solution.elapsed_s;
  if (include_marked) j["marked"] = sf.solution.marked;
  return j.dump(2);
}

SolutionFile solution_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SolutionFile sf;
  sf.instance = j.value("instance", std::string{});
  sf.n = j.value("n", 0u);
  sf.m_edges = j.value("m_edges", std::uint64_t{0});
  sf.solution.seed = j.value("seed", std::uint64_t{0});
  sf.solution.m_used = j.value("m", 0u);
  sf.solution.k_used = j.value("k", 1u);
  sf.solution.mode = exec_mode_from_string(j.value("mode", "seq"));
  sf.solution.rounds = j.value("rounds", 0u);
  sf.solution.messages = j.value("messages", std::uint64_t{0});
  sf.solution.elapsed_s = j.value("elapsed_s", 0.0);
  if (j.contains("marked"))
    sf.solution.marked = j["marked"].get<std::vector<NodeId>>();
  else if (j.contains("size") && j["size"].get<std::size_t>() > 0)
    throw std::runtime_error(
        "solution file has no 'marked' list (written without --emit-marked); "
        "cannot verify");
  return sf;
}

void write_solution(const std::filesystem::path& path, const SolutionFile& sf,
                    bool include_marked) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << solution_to_json(sf, include_marked) << "\n";
}

SolutionFile read_solution(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return solution_from_json(buf.str());
}

}  // namespace domset
