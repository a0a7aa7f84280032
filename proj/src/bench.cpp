#include "domset/bench.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "domset/kdistance.hpp"
#include "domset/oracles.hpp"

namespace domset {

void BenchSpec::validate() const {
  if (instances.empty())
    throw std::invalid_argument("bench spec has no instances");
  if (m_values.empty())
    throw std::invalid_argument("bench spec has no m values");
  if (seeds.empty()) throw std::invalid_argument("bench spec has no seeds");
  if (k == 0) throw std::invalid_argument("bench spec has k = 0");
}

namespace {

GraphFormat format_from_string(std::string_view s) {
  if (s == "edgelist" || s == "edge-list") return GraphFormat::edge_list;
  if (s == "dimacs") return GraphFormat::dimacs_like;
  if (s == "mtx" || s == "matrix-market") return GraphFormat::matrix_market;
  throw std::invalid_argument("unknown graph format '" + std::string(s) + "'");
}

// --- tiny TOML-subset reader -------------------------------------------

struct TomlValue {
  enum class Kind { integer, floating, string, int_array } kind;
  std::int64_t i = 0;
  double f = 0.0;
  std::string s;
  std::vector<std::int64_t> arr;
};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
    s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
    s.remove_suffix(1);
  return s;
}

class TomlSubsetParser {
 public:
  TomlSubsetParser(std::string_view text, std::string_view origin)
      : text_(text), origin_(origin) {}

  // Emits (table_index, key, value): table_index -1 for top level,
  // otherwise the ordinal of the [[instance]] table the key belongs to.
  template <class OnTable, class OnKey>
  void run(OnTable&& on_table, OnKey&& on_key) {
    std::size_t pos = 0;
    while (pos <= text_.size()) {
      std::size_t eol = text_.find('\n', pos);
      if (eol == std::string_view::npos) eol = text_.size();
      std::string_view raw = text_.substr(pos, eol - pos);
      bool last = eol == text_.size();
      pos = eol + 1;
      ++line_;
      if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
      std::string_view line = strip_comment(raw);
      line = trim(line);
      if (!line.empty()) {
        if (line.front() == '[') {
          if (!line.starts_with("[[") || !line.ends_with("]]"))
            fail("only [[...]] tables are supported");
          std::string_view name = trim(line.substr(2, line.size() - 4));
          if (name != "instance" && name != "instances")
            fail("unknown table '" + std::string(name) + "'");
          ++table_;
          on_table(table_);
        } else {
          std::size_t eq = line.find('=');
          if (eq == std::string_view::npos) fail("expected 'key = value'");
          std::string key{trim(line.substr(0, eq))};
          TomlValue value = parse_value(trim(line.substr(eq + 1)));
          on_key(table_, key, value);
        }
      }
      if (last) break;
    }
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << origin_ << ":" << line_ << ": " << what;
    throw std::runtime_error(os.str());
  }

 private:
  std::string_view strip_comment(std::string_view line) const {
    bool in_string = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
      if (line[i] == '"') in_string = !in_string;
      if (line[i] == '#' && !in_string) return line.substr(0, i);
    }
    return line;
  }

  TomlValue parse_value(std::string_view v) const {
    if (v.empty()) fail("missing value");
    TomlValue out;
    if (v.front() == '"') {
      if (v.size() < 2 || v.back() != '"') fail("unterminated string");
      out.kind = TomlValue::Kind::string;
      out.s = std::string(v.substr(1, v.size() - 2));
      return out;
    }
    if (v.front() == '[') {
      if (v.back() != ']') fail("unterminated array");
      out.kind = TomlValue::Kind::int_array;
      std::string_view body = v.substr(1, v.size() - 2);
      std::size_t i = 0;
      while (i < body.size()) {
        std::size_t comma = body.find(',', i);
        if (comma == std::string_view::npos) comma = body.size();
        std::string_view item = trim(body.substr(i, comma - i));
        if (!item.empty()) out.arr.push_back(parse_int(item));
        i = comma + 1;
      }
      return out;
    }
    if (v.find('.') != std::string_view::npos ||
        v.find('e') != std::string_view::npos) {
      out.kind = TomlValue::Kind::floating;
      try {
        out.f = std::stod(std::string(v));
      } catch (const std::exception&) {
        fail("bad number '" + std::string(v) + "'");
      }
      return out;
    }
    out.kind = TomlValue::Kind::integer;
    out.i = parse_int(v);
    return out;
  }

  std::int64_t parse_int(std::string_view v) const {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), value);
    if (ec != std::errc{} || ptr != v.data() + v.size())
      fail("bad integer '" + std::string(v) + "'");
    return value;
  }

  std::string_view text_;
  std::string origin_;
  std::size_t line_ = 0;
  int table_ = -1;
};

}  // namespace

BenchSpec parse_bench_spec(std::string_view text, std::string_view origin) {
  BenchSpec spec;
  bool m_set = false, seeds_set = false;
  TomlSubsetParser parser(text, origin);
  parser.run(
      [&](int) { spec.instances.emplace_back(); },
      [&](int table, const std::string& key, const TomlValue& v) {
        auto want_string = [&]() -> const std::string& {
          if (v.kind != TomlValue::Kind::string)
            parser.fail("'" + key + "' must be a string");
          return v.s;
        };
        if (table < 0) {
          if (key == "m_values") {
            if (v.kind != TomlValue::Kind::int_array)
              parser.fail("'m_values' must be an integer array");
            spec.m_values.clear();
            for (auto i : v.arr) {
              if (i < 0) parser.fail("m must be >= 0");
              spec.m_values.push_back(static_cast<unsigned>(i));
            }
            m_set = true;
          } else if (key == "seeds") {
            if (v.kind != TomlValue::Kind::int_array)
              parser.fail("'seeds' must be an integer array");
            spec.seeds.assign(v.arr.begin(), v.arr.end());
            seeds_set = true;
          } else if (key == "k") {
            if (v.kind != TomlValue::Kind::integer || v.i < 1)
              parser.fail("'k' must be a positive integer");
            spec.k = static_cast<unsigned>(v.i);
          } else if (key == "time_limit_s") {
            spec.time_limit_s =
                v.kind == TomlValue::Kind::floating ? v.f : double(v.i);
          } else if (key == "mode") {
            spec.mode = exec_mode_from_string(want_string());
          } else {
            parser.fail("unknown key '" + key + "'");
          }
        } else {
          BenchInstance& inst = spec.instances.back();
          if (key == "name")
            inst.name = want_string();
          else if (key == "path")
            inst.path = want_string();
          else if (key == "format")
            inst.format = format_from_string(want_string());
          else if (key == "mode")
            inst.mode = exec_mode_from_string(want_string());
          else
            parser.fail("unknown instance key '" + key + "'");
        }
      });
  (void)m_set;
  (void)seeds_set;
  for (auto& inst : spec.instances) {
    if (inst.path.empty())
      throw std::runtime_error(std::string(origin) +
                               ": instance without a path");
    if (inst.name.empty()) inst.name = inst.path.stem().string();
  }
  spec.validate();
  return spec;
}

BenchSpec load_bench_spec(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_bench_spec(buf.str(), path.string());
}

namespace {

BenchRow make_row(const BenchInstance& inst, unsigned m, unsigned k,
                  ExecMode mode) {
  BenchRow row;
  row.instance = inst.name;
  row.m = m;
  row.k = k;
  row.mode = to_string(mode);
  return row;
}

}  // namespace

BenchReport run_bench(const BenchSpec& spec) {
  spec.validate();
  BenchReport report;
  for (const auto& inst : spec.instances) {
    const ExecMode mode = inst.mode.value_or(spec.mode);
    Graph g;
    std::string load_error;
    try {
      LoadOptions opts;
      opts.format = inst.format;
      g = load_graph(inst.path, opts);
    } catch (const std::exception& e) {
      load_error = e.what();
    }
    for (unsigned m : spec.m_values) {
      BenchRow row = make_row(inst, m, spec.k, mode);
      if (!load_error.empty()) {
        row.error = load_error;
        report.rows.push_back(std::move(row));
        continue;
      }
      row.n = g.node_count();
      row.m_edges = g.edge_count();
      std::uint32_t d_min = std::numeric_limits<std::uint32_t>::max();
      double size_sum = 0.0, time_sum = 0.0;
      try {
        for (std::uint64_t seed : spec.seeds) {
          KConfig kcfg;
          kcfg.k = spec.k;
          kcfg.base.seed = seed;
          kcfg.base.m = m;
          kcfg.base.mode = mode;
          kcfg.base.isolated = IsolatedPolicy::include_in_solution;
          Solution sol = solve_kdistance(g, kcfg);
          if (!covers(g, sol.marked,
                      {.total = true, .k = spec.k, .ignore_isolated = true}))
            throw std::logic_error("solution failed validation (seed " +
                                   std::to_string(seed) + ")");
          if (sol.elapsed_s > spec.time_limit_s)
            throw std::runtime_error("time limit exceeded (seed " +
                                     std::to_string(seed) + ": " +
                                     std::to_string(sol.elapsed_s) + " s)");
          d_min = std::min(d_min, static_cast<std::uint32_t>(sol.size()));
          size_sum += double(sol.size());
          time_sum += sol.elapsed_s;
        }
        row.d_min = d_min;
        row.d_avg = size_sum / double(spec.seeds.size());
        row.time_avg_s = time_sum / double(spec.seeds.size());
      } catch (const std::exception& e) {
        row.error = e.what();
      }
      report.rows.push_back(std::move(row));
    }
  }
  return report;
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string fmt_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::vector<std::string> row_cells(const BenchRow& r) {
  return {r.instance,
          std::to_string(r.n),
          std::to_string(r.m_edges),
          std::to_string(r.m),
          std::to_string(r.k),
          r.ok() ? std::to_string(r.d_min) : "",
          r.ok() ? fmt_double(r.d_avg) : "",
          r.ok() ? fmt_double(r.time_avg_s) : "",
          r.mode,
          r.error};
}

constexpr const char* kColumns[] = {"instance", "n",     "m_edges",
                                    "m",        "k",     "Dmin",
                                    "Davg",     "time_avg_s", "mode",
                                    "error"};

}  // namespace

std::string format_report(const BenchReport& report, ReportFormat format) {
  std::ostringstream os;
  switch (format) {
    case ReportFormat::csv: {
      for (std::size_t i = 0; i < std::size(kColumns); ++i)
        os << (i ? "," : "") << kColumns[i];
      os << "\n";
      for (const auto& r : report.rows) {
        auto cells = row_cells(r);
        for (std::size_t i = 0; i < cells.size(); ++i)
          os << (i ? "," : "") << csv_escape(cells[i]);
        os << "\n";
      }
      break;
    }
    case ReportFormat::markdown: {
      os << "|";
      for (const char* c : kColumns) os << " " << c << " |";
      os << "\n|";
      for (std::size_t i = 0; i < std::size(kColumns); ++i) os << " --- |";
      os << "\n";
      for (const auto& r : report.rows) {
        os << "|";
        for (const auto& cell : row_cells(r)) os << " " << cell << " |";
        os << "\n";
      }
      break;
    }
    case ReportFormat::json: {
      nlohmann::json rows = nlohmann::json::array();
      for (const auto& r : report.rows) {
        nlohmann::json j;
        j["instance"] = r.instance;
        j["n"] = r.n;
        j["m_edges"] = r.m_edges;
        j["m"] = r.m;
        j["k"] = r.k;
        if (r.ok()) {
          j["Dmin"] = r.d_min;
          j["Davg"] = r.d_avg;
          j["time_avg_s"] = r.time_avg_s;
        }
        j["mode"] = r.mode;
        if (!r.error.empty()) j["error"] = r.error;
        rows.push_back(std::move(j));
      }
      os << nlohmann::json{{"rows", rows}}.dump(2) << "\n";
      break;
    }
  }
  return os.str();
}

BenchReport report_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  BenchReport report;
  for (const auto& item : j.at("rows")) {
    BenchRow r;
    r.instance = item.value("instance", std::string{});
    r.n = item.value("n", 0u);
    r.m_edges = item.value("m_edges", std::uint64_t{0});
    r.m = item.value("m", 0u);
    r.k = item.value("k", 1u);
    r.d_min = item.value("Dmin", 0u);
    r.d_avg = item.value("Davg", 0.0);
    r.time_avg_s = item.value("time_avg_s", 0.0);
    r.mode = item.value("mode", "seq");
    r.error = item.value("error", std::string{});
    report.rows.push_back(std::move(r));
  }
  return report;
}

void write_report(const BenchReport& report, const std::filesystem::path& path,
                  ReportFormat format) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << format_report(report, format);
}

}  // namespace domset
