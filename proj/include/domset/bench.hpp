#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "domset/engine.hpp"
#include "domset/graph.hpp"

namespace domset {

struct BenchInstance {
  std::string name;
  std::filesystem::path path;
  GraphFormat format = GraphFormat::edge_list;
  std::optional<ExecMode> mode;  // per-instance override
};

struct BenchSpec {
  std::vector<BenchInstance> instances;
  std::vector<unsigned> m_values{0, 2, 5};
  std::vector<std::uint64_t> seeds{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  unsigned k = 1;
  double time_limit_s = 1000.0;  // per run
  ExecMode mode = ExecMode::sequential;

  /// Throws on empty instances / m_values / seeds.
  void validate() const;
};

/// Minimal TOML subset: `key = value` with integers, floats, strings and
/// integer arrays at top level, plus repeated [[instance]] tables with
/// name/path/format/mode keys.
BenchSpec load_bench_spec(const std::filesystem::path& path);
BenchSpec parse_bench_spec(std::string_view text,
                           std::string_view origin = "<memory>");

struct BenchRow {
  std::string instance;
  std::uint32_t n = 0;
  std::uint64_t m_edges = 0;
  unsigned m = 0;
  unsigned k = 1;
  std::uint32_t d_min = 0;
  double d_avg = 0.0;
  double time_avg_s = 0.0;
  std::string mode = "seq";
  std::string error;  // empty on success

  bool ok() const { return error.empty(); }
};

struct BenchReport {
  std::vector<BenchRow> rows;
  bool operator==(const BenchReport&) const = default;
};
inline bool operator==(const BenchRow& a, const BenchRow& b) {
  return a.instance == b.instance && a.n == b.n && a.m_edges == b.m_edges &&
         a.m == b.m && a.k == b.k && a.d_min == b.d_min && a.d_avg == b.d_avg &&
         a.time_avg_s == b.time_avg_s && a.mode == b.mode && a.error == b.error;
}

/// Runs the full (instance x m) cross-product, every seed in sequential
/// order. Sizes are deterministic given the seed list; every recorded
/// size passed the domination checker first. Per-cell failures land in
/// the row's error field and the run continues.
BenchReport run_bench(const BenchSpec& spec);

enum class ReportFormat { csv, json, markdown };

std::string format_report(const BenchReport& report, ReportFormat format);
void write_report(const BenchReport& report, const std::filesystem::path& path,
                  ReportFormat format);
BenchReport report_from_json(const std::string& text);

}  // namespace domset
