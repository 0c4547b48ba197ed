#include "schelling/io/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "schelling/errors.hpp"

namespace schelling::io {

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

double parse_number(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) throw ConfigError("not a number: '" + std::string(text) + "'");
  return v;
}

namespace {

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<std::string_view> lines_of(std::string_view text) {
  std::vector<std::string_view> out;
  for (auto line : split(text, '\n')) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

int parse_int(std::string_view text) {
  int v = 0;
  const auto* end = text.data() + text.size();
  const auto res = std::from_chars(text.data(), end, v);
  if (res.ec != std::errc{} || res.ptr != end) throw ConfigError("not an integer: '" + std::string(text) + "'");
  return v;
}

}  // namespace

std::string sweep_csv_header() {
  std::string h = "sweep_value";
  for (auto f : kOutcomeFields) {
    h += ",";
    h += f;
    h += "_mean,";
    h += f;
    h += "_sd";
  }
  return h;
}

std::vector<SweepCsvRow> sweep_rows(const SweepResult& result) {
  std::vector<SweepCsvRow> rows;
  rows.reserve(result.points.size());
  for (const auto& p : result.points) rows.push_back(SweepCsvRow{p.value, p.summary.mean, p.summary.sd});
  return rows;
}

std::string emit_sweep_csv(std::span<const SweepCsvRow> rows) {
  std::string out = sweep_csv_header() + "\n";
  for (const auto& r : rows) {
    out += format_number(r.sweep_value);
    for (std::size_t f = 0; f < kOutcomeFieldCount; ++f) {
      out += ",";
      out += format_number(r.mean[f]);
      out += ",";
      out += format_number(r.sd[f]);
    }
    out += "\n";
  }
  return out;
}

std::string emit_sweep_csv(const SweepResult& result) { return emit_sweep_csv(sweep_rows(result)); }

std::vector<SweepCsvRow> parse_sweep_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines.front() != sweep_csv_header()) {
    throw ConfigError("sweep CSV header missing or does not match the expected columns");
  }
  std::vector<SweepCsvRow> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    if (cols.size() != 1 + 2 * kOutcomeFieldCount) {
      throw ConfigError("sweep CSV line " + std::to_string(i + 1) + " has " + std::to_string(cols.size()) +
                        " columns, expected " + std::to_string(1 + 2 * kOutcomeFieldCount));
    }
    SweepCsvRow r;
    r.sweep_value = parse_number(cols[0]);
    for (std::size_t f = 0; f < kOutcomeFieldCount; ++f) {
      r.mean[f] = parse_number(cols[1 + 2 * f]);
      r.sd[f] = parse_number(cols[2 + 2 * f]);
    }
    rows.push_back(r);
  }
  return rows;
}

std::string emit_runs_csv(const SweepResult& result) {
  std::string out = "sweep_value,replicate";
  for (auto f : kOutcomeFields) {
    out += ",";
    out += f;
  }
  out += ",stop_reason\n";
  for (const auto& p : result.points) {
    for (const auto& row : p.rows) {
      out += format_number(p.value) + "," + std::to_string(row.replicate);
      for (double v : outcome_values(row.record)) out += "," + format_number(v);
      out += ",";
      out += to_string(row.record.stop_reason);
      out += "\n";
    }
  }
  return out;
}

std::string emit_cells_csv(const Configuration& config, const TorusGrid& grid) {
  std::string out = "agent,color,row,col\n";
  for (AgentId a = 1; a <= config.agent_count(); ++a) {
    const CellRef c = grid.cell(config.cell_of(a));
    out += std::to_string(a) + "," + (config.color(a) == Color::Red ? "red" : "blue") + "," + std::to_string(c.row) +
           "," + std::to_string(c.col) + "\n";
  }
  return out;
}

Configuration parse_cells_csv(std::string_view text, const TorusGrid& grid) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines.front() != "agent,color,row,col") throw ConfigError("cells CSV header mismatch");
  std::vector<Color> colors;
  std::vector<int> cells;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    if (cols.size() != 4) throw ConfigError("cells CSV line " + std::to_string(i + 1) + " needs 4 columns");
    if (parse_int(cols[0]) != static_cast<int>(i)) {
      throw ConfigError("cells CSV must list agents 1..N in order (line " + std::to_string(i + 1) + ")");
    }
    if (cols[1] == "red") {
      colors.push_back(Color::Red);
    } else if (cols[1] == "blue") {
      colors.push_back(Color::Blue);
    } else {
      throw ConfigError("unknown color '" + std::string(cols[1]) + "'");
    }
    try {
      cells.push_back(grid.cell(parse_int(cols[2]), parse_int(cols[3])).id);
    } catch (const DomainError& e) {
      throw ConfigError(e.what());
    }
  }
  try {
    return Configuration(grid, std::move(colors), cells);
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
}

std::string emit_edges_csv(const FriendshipGraph& graph) {
  std::string out = "a,b\n";
  for (auto [a, b] : graph.edges()) out += std::to_string(a) + "," + std::to_string(b) + "\n";
  return out;
}

std::vector<Edge> parse_edges_csv(std::string_view text) {
  const auto lines = lines_of(text);
  if (lines.empty() || lines.front() != "a,b") throw ConfigError("edges CSV header mismatch");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto cols = split(lines[i], ',');
    if (cols.size() != 2) throw ConfigError("edges CSV line " + std::to_string(i + 1) + " needs 2 columns");
    edges.emplace_back(parse_int(cols[0]), parse_int(cols[1]));
  }
  return edges;
}

std::string trace_csv_header() {
  return "t,mover,origin_row,origin_col,destination_row,destination_col,utility_before,utility_after";
}

std::string trace_csv_line(const StepRecord& rec, const TorusGrid& grid) {
  const CellRef from = grid.cell(rec.origin);
  const CellRef to = grid.cell(rec.destination);
  return std::to_string(rec.t) + "," + std::to_string(rec.mover) + "," + std::to_string(from.row) + "," +
         std::to_string(from.col) + "," + std::to_string(to.row) + "," + std::to_string(to.col) + "," +
         format_number(rec.utility_before) + "," + format_number(rec.utility_after);
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  namespace fs = std::filesystem;
  const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + dir.string() + ": " + ec.message());
  fs::path tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw ConfigError("cannot write " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      fs::remove(tmp, ec);
      throw ConfigError("write failed for " + tmp.string());
    }
  }
  fs::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    fs::remove(tmp, ignored);
    throw ConfigError("cannot move " + tmp.string() + " into place: " + ec.message());
  }
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace schelling::io
