#include "schelling/io/svg.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "schelling/errors.hpp"
#include "schelling/metrics.hpp"

namespace schelling::io {

namespace {

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

std::string coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  return buf;
}

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

struct PanelSpec {
  std::size_t field;
  const char* title;
  enum class Stack { None, Average, Total } stack;
};

// iterations, Moran's I, FSI / movers, average welfare, total welfare.
constexpr std::array<PanelSpec, 6> kPanels = {{
    {0, "Iterations", PanelSpec::Stack::None},
    {3, "Moran's I", PanelSpec::Stack::None},
    {2, "Freeman segregation index", PanelSpec::Stack::None},
    {1, "Agents who moved", PanelSpec::Stack::None},
    {5, "Average welfare", PanelSpec::Stack::Average},
    {6, "Total welfare", PanelSpec::Stack::Total},
}};

constexpr std::size_t kTotalWelfare = 6;
constexpr std::size_t kAvgWelfare = 5;
constexpr std::size_t kColorPart = 7;
constexpr std::size_t kFriendPart = 8;

struct Frame {
  double left, top, xlo, xhi, ylo, yhi;
  [[nodiscard]] double px(double x) const { return left + (x - xlo) / (xhi - xlo) * kPanelWidth; }
  [[nodiscard]] double py(double y) const { return top + (yhi - y) / (yhi - ylo) * kPanelHeight; }
};

struct StackLevels {
  std::vector<double> color;
  std::vector<double> friendship;
};

StackLevels stack_levels(std::span<const SweepCsvRow> rows, PanelSpec::Stack kind) {
  StackLevels s;
  for (const auto& r : rows) {
    double scale = 1.0;
    if (kind == PanelSpec::Stack::Average) {
      // Parts are sums over agents; the population is total / average.
      const double total = r.mean[kTotalWelfare];
      const double avg = r.mean[kAvgWelfare];
      scale = total > 0.0 ? avg / total : 0.0;
    }
    s.color.push_back(r.mean[kColorPart] * scale);
    s.friendship.push_back(r.mean[kFriendPart] * scale);
  }
  return s;
}

std::string points_attr(const std::vector<std::pair<double, double>>& pts) {
  std::string out;
  for (const auto& [x, y] : pts) {
    if (!out.empty()) out += ' ';
    out += coord(x) + "," + coord(y);
  }
  return out;
}

void render_panel(std::string& svg, std::span<const SweepCsvRow> rows, const PanelSpec& panel, std::size_t slot,
                  const ChartOptions& options) {
  const double left = kPanelMarginLeft + static_cast<double>(slot % 3) * (kPanelWidth + kPanelGapX);
  const double top = kPanelMarginTop + static_cast<double>(slot / 3) * (kPanelHeight + kPanelGapY);

  double xlo = std::numeric_limits<double>::infinity();
  double xhi = -xlo;
  double ylo = xlo;
  double yhi = -xlo;
  for (const auto& r : rows) {
    xlo = std::min(xlo, r.sweep_value);
    xhi = std::max(xhi, r.sweep_value);
    const double m = r.mean[panel.field];
    const double sd = r.sd[panel.field];
    if (std::isnan(m)) continue;
    ylo = std::min(ylo, m - (std::isnan(sd) ? 0.0 : sd));
    yhi = std::max(yhi, m + (std::isnan(sd) ? 0.0 : sd));
  }
  const bool stacked = options.stack_welfare && panel.stack != PanelSpec::Stack::None;
  StackLevels levels;
  if (stacked) {
    levels = stack_levels(rows, panel.stack);
    ylo = std::min(ylo, 0.0);
    for (std::size_t i = 0; i < rows.size(); ++i) yhi = std::max(yhi, levels.color[i] + levels.friendship[i]);
  }
  if (!std::isfinite(ylo) || !std::isfinite(yhi)) {
    ylo = 0.0;
    yhi = 1.0;
  }
  if (xhi - xlo < 1e-12) {
    xlo -= 0.5;
    xhi += 0.5;
  }
  if (yhi - ylo < 1e-12) {
    ylo -= 0.5;
    yhi += 0.5;
  }
  const Frame f{left, top, xlo, xhi, ylo, yhi};
  const auto field = kOutcomeFields[panel.field];

  svg += "<g class=\"panel\" data-field=\"" + std::string(field) + "\" data-left=\"" + format_number(left) +
         "\" data-top=\"" + format_number(top) + "\" data-width=\"" + format_number(kPanelWidth) +
         "\" data-height=\"" + format_number(kPanelHeight) + "\" data-xlo=\"" + format_number(xlo) +
         "\" data-xhi=\"" + format_number(xhi) + "\" data-ylo=\"" + format_number(ylo) + "\" data-yhi=\"" +
         format_number(yhi) + "\">\n";
  svg += "<rect class=\"frame\" x=\"" + coord(left) + "\" y=\"" + coord(top) + "\" width=\"" + coord(kPanelWidth) +
         "\" height=\"" + coord(kPanelHeight) + "\" fill=\"none\" stroke=\"#444\"/>\n";
  svg += "<text class=\"panel-title\" x=\"" + coord(left + kPanelWidth / 2) + "\" y=\"" + coord(top - 10) +
         "\" text-anchor=\"middle\" font-size=\"14\">" + escape(panel.title) + "</text>\n";
  svg += "<text class=\"axis-label\" x=\"" + coord(left + kPanelWidth / 2) + "\" y=\"" +
         coord(top + kPanelHeight + 35) + "\" text-anchor=\"middle\" font-size=\"12\">" +
         escape(options.axis_label) + "</text>\n";
  for (double v : {ylo, yhi}) {
    svg += "<text class=\"tick\" x=\"" + coord(left - 5) + "\" y=\"" + coord(f.py(v) + 4) +
           "\" text-anchor=\"end\" font-size=\"10\">" + label(v) + "</text>\n";
  }
  for (double v : {xlo, xhi}) {
    svg += "<text class=\"tick\" x=\"" + coord(f.px(v)) + "\" y=\"" + coord(top + kPanelHeight + 15) +
           "\" text-anchor=\"middle\" font-size=\"10\">" + label(v) + "</text>\n";
  }

  if (stacked) {
    std::vector<std::pair<double, double>> color_area;
    std::vector<std::pair<double, double>> friend_area;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      color_area.emplace_back(f.px(rows[i].sweep_value), f.py(levels.color[i]));
      friend_area.emplace_back(f.px(rows[i].sweep_value), f.py(levels.color[i] + levels.friendship[i]));
    }
    for (std::size_t i = rows.size(); i-- > 0;) {
      color_area.emplace_back(f.px(rows[i].sweep_value), f.py(0.0));
      friend_area.emplace_back(f.px(rows[i].sweep_value), f.py(levels.color[i]));
    }
    svg += "<polygon class=\"stack-color\" fill=\"#f4c7a1\" stroke=\"none\" points=\"" + points_attr(color_area) +
           "\"/>\n";
    svg += "<polygon class=\"stack-friend\" fill=\"#b5651d\" fill-opacity=\"0.6\" stroke=\"none\" points=\"" +
           points_attr(friend_area) + "\"/>\n";
  }

  std::vector<std::pair<double, double>> mean_line;
  std::vector<std::pair<double, double>> upper;
  std::vector<std::pair<double, double>> lower;
  for (const auto& r : rows) {
    const double m = r.mean[panel.field];
    if (std::isnan(m)) continue;
    const double sd = std::isnan(r.sd[panel.field]) ? 0.0 : r.sd[panel.field];
    mean_line.emplace_back(f.px(r.sweep_value), f.py(m));
    upper.emplace_back(f.px(r.sweep_value), f.py(m + sd));
    lower.emplace_back(f.px(r.sweep_value), f.py(m - sd));
  }
  std::vector<std::pair<double, double>> band = upper;
  band.insert(band.end(), lower.rbegin(), lower.rend());
  svg += "<polygon class=\"sd-band\" fill=\"#1f4e9c\" fill-opacity=\"0.15\" stroke=\"none\" points=\"" +
         points_attr(band) + "\"/>\n";
  svg += "<polyline class=\"sd-upper\" fill=\"none\" stroke=\"#1f4e9c\" stroke-dasharray=\"4,3\" points=\"" +
         points_attr(upper) + "\"/>\n";
  svg += "<polyline class=\"sd-lower\" fill=\"none\" stroke=\"#1f4e9c\" stroke-dasharray=\"4,3\" points=\"" +
         points_attr(lower) + "\"/>\n";
  svg += "<polyline class=\"mean\" fill=\"none\" stroke=\"#1f4e9c\" stroke-width=\"2.5\" points=\"" +
         points_attr(mean_line) + "\"/>\n";
  for (const auto& r : rows) {
    const double m = r.mean[panel.field];
    if (std::isnan(m)) continue;
    svg += "<circle class=\"point\" cx=\"" + coord(f.px(r.sweep_value)) + "\" cy=\"" + coord(f.py(m)) +
           "\" r=\"2.5\" fill=\"#1f4e9c\" data-x=\"" + format_number(r.sweep_value) + "\" data-y=\"" +
           format_number(m) + "\"/>\n";
  }
  svg += "</g>\n";
}

}  // namespace

std::string render_sweep_chart(std::span<const SweepCsvRow> rows, const ChartOptions& options) {
  if (rows.empty()) throw ConfigError("cannot render a chart from an empty sweep CSV");
  const double width = 2 * kPanelMarginLeft + 3 * kPanelWidth + 2 * kPanelGapX;
  const double height = 2 * kPanelMarginTop + 2 * kPanelHeight + kPanelGapY + 20;
  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + coord(width) + "\" height=\"" + coord(height) +
         "\" viewBox=\"0 0 " + coord(width) + " " + coord(height) + "\" font-family=\"sans-serif\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!options.title.empty()) {
    svg += "<text class=\"chart-title\" x=\"" + coord(width / 2) +
           "\" y=\"20\" text-anchor=\"middle\" font-size=\"16\" font-weight=\"bold\">" + escape(options.title) +
           "</text>\n";
  }
  for (std::size_t slot = 0; slot < kPanels.size(); ++slot) render_panel(svg, rows, kPanels[slot], slot, options);
  svg += "</svg>\n";
  return svg;
}

std::string render_grid_snapshot(const Configuration& config, const TorusGrid& grid, const FriendshipGraph& graph,
                                 const SnapshotAnnotation& note) {
  constexpr double cell = 40.0;
  constexpr double margin = 20.0;
  const int n = grid.side();
  const double side = n * cell;
  const double width = side + 2 * margin;
  const double height = side + 2 * margin + 30;
  auto center = [&](int id) {
    const CellRef c = grid.cell(id);
    return std::pair{margin + (c.col - 0.5) * cell, margin + (c.row - 0.5) * cell};
  };

  std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + coord(width) + "\" height=\"" + coord(height) +
         "\" viewBox=\"0 0 " + coord(width) + " " + coord(height) + "\" font-family=\"sans-serif\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  for (int id = 1; id <= grid.cell_count(); ++id) {
    const CellRef c = grid.cell(id);
    const AgentId a = config.occupant(id);
    const char* cls = a == kNoAgent ? "empty" : (config.color(a) == Color::Red ? "red" : "blue");
    const char* fill = a == kNoAgent ? "white" : (config.color(a) == Color::Red ? "#d7301f" : "#2b5fb4");
    svg += "<rect class=\"cell " + std::string(cls) + "\" data-cell=\"" + std::to_string(id) + "\" x=\"" +
           coord(margin + (c.col - 1) * cell) + "\" y=\"" + coord(margin + (c.row - 1) * cell) + "\" width=\"" +
           coord(cell) + "\" height=\"" + coord(cell) + "\" fill=\"" + fill + "\" stroke=\"#999\"/>\n";
  }
  for (auto [a, b] : graph.edges()) {
    const auto [x1, y1] = center(config.cell_of(a));
    const auto [x2, y2] = center(config.cell_of(b));
    svg += "<line class=\"friendship\" x1=\"" + coord(x1) + "\" y1=\"" + coord(y1) + "\" x2=\"" + coord(x2) +
           "\" y2=\"" + coord(y2) + "\" stroke=\"#222\" stroke-opacity=\"0.5\" stroke-width=\"1\"/>\n";
  }
  for (AgentId a = 1; a <= config.agent_count(); ++a) {
    const auto [x, y] = center(config.cell_of(a));
    svg += "<text class=\"agent-label\" x=\"" + coord(x) + "\" y=\"" + coord(y + 4) +
           "\" text-anchor=\"middle\" font-size=\"12\" fill=\"white\">" + std::to_string(a) + "</text>\n";
  }
  std::string caption;
  if (note.total_welfare) caption += "Total welfare: " + label(*note.total_welfare);
  if (note.fsi) caption += std::string(caption.empty() ? "" : "   ") + "FSI: " + label(*note.fsi);
  if (!caption.empty()) {
    svg += "<text class=\"annotation\" x=\"" + coord(margin) + "\" y=\"" + coord(side + 2 * margin + 12) +
           "\" font-size=\"13\">" + escape(caption) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace schelling::io
