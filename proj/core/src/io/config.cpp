#include "schelling/io/config.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "schelling/errors.hpp"
#include "schelling/io/csv.hpp"

namespace schelling::io {

namespace pt = boost::property_tree;

namespace {

const std::map<std::string, std::set<std::string>>& allowed_keys() {
  static const std::map<std::string, std::set<std::string>> keys = {
      {"grid", {"n"}},
      {"population", {"reds", "blues"}},
      {"network", {"k", "repermute"}},
      {"utility", {"x", "alpha", "beta", "gamma", "c_bar", "color_variant"}},
      {"process", {"max_iter", "H", "base_seed"}},
      {"sweep", {"axis", "values"}},
      {"output", {"directory", "formats"}},
  };
  return keys;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t");
  return std::string(s.substr(b, e - b + 1));
}

class Reader {
 public:
  Reader(const pt::ptree& tree, std::vector<std::string>& notices) : tree_(tree), notices_(notices) {}

  [[nodiscard]] const std::string* raw(const std::string& section, const std::string& key) const {
    const auto sec = tree_.get_child_optional(section);
    if (!sec) return nullptr;
    const auto node = sec->get_child_optional(key);
    if (!node) return nullptr;
    return &node->data();
  }

  double number(const std::string& section, const std::string& key, double fallback) {
    const auto* text = raw(section, key);
    if (!text) return defaulted(section, key, format_number(fallback)), fallback;
    try {
      return parse_number(trim(*text));
    } catch (const ConfigError&) {
      throw ConfigError("[" + section + "] " + key + ": expected a number, got '" + *text + "'");
    }
  }

  long long integer(const std::string& section, const std::string& key, long long fallback) {
    const auto* text = raw(section, key);
    if (!text) return defaulted(section, key, std::to_string(fallback)), fallback;
    const std::string t = trim(*text);
    long long v = 0;
    const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
    if (res.ec != std::errc{} || res.ptr != t.data() + t.size()) {
      throw ConfigError("[" + section + "] " + key + ": expected an integer, got '" + *text + "'");
    }
    return v;
  }

  std::string text(const std::string& section, const std::string& key, const std::string& fallback) {
    const auto* t = raw(section, key);
    if (!t) return defaulted(section, key, fallback), fallback;
    return trim(*t);
  }

  bool flag(const std::string& section, const std::string& key, bool fallback) {
    const auto* t = raw(section, key);
    if (!t) return defaulted(section, key, fallback ? "true" : "false"), fallback;
    const std::string v = trim(*t);
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("[" + section + "] " + key + ": expected true or false, got '" + v + "'");
  }

 private:
  void defaulted(const std::string& section, const std::string& key, const std::string& value) {
    notices_.push_back("[" + section + "] " + key + " not set, using " + value);
  }

  const pt::ptree& tree_;
  std::vector<std::string>& notices_;
};

void reject_unknown(const pt::ptree& tree) {
  const auto& allowed = allowed_keys();
  for (const auto& [section, body] : tree) {
    const auto it = allowed.find(section);
    if (it == allowed.end()) {
      if (body.empty()) throw ConfigError("key '" + section + "' must appear inside a [section]");
      throw ConfigError("unknown section [" + section + "]");
    }
    for (const auto& [key, value] : body) {
      if (!it->second.contains(key)) throw ConfigError("unknown key '" + key + "' in [" + section + "]");
    }
  }
}

}  // namespace

std::vector<double> parse_sweep_values(std::string_view text) {
  const std::string t = trim(text);
  if (t == "default") return unit_grid();
  std::vector<double> values;
  if (t.find(':') != std::string::npos) {
    std::vector<double> parts;
    std::stringstream ss(t);
    std::string piece;
    while (std::getline(ss, piece, ':')) parts.push_back(parse_number(trim(piece)));
    if (parts.size() != 3 || !(parts[2] > 0) || parts[1] < parts[0]) {
      throw ConfigError("sweep range must be start:stop:step with step > 0 and stop >= start, got '" + t + "'");
    }
    const double span = parts[1] - parts[0];
    const double ratio = span / parts[2];
    const double nearest = std::round(ratio);
    if (std::abs(ratio - nearest) <= 1e-9 * std::max(1.0, nearest)) {
      // Evenly divisible: interpolate so that 0:1:0.05 gives exactly i / 20.
      const auto intervals = static_cast<long>(nearest);
      for (long i = 0; i <= intervals; ++i) {
        values.push_back(intervals == 0 ? parts[0] : parts[0] + span * static_cast<double>(i) / nearest);
      }
    } else {
      const auto intervals = static_cast<long>(std::floor(ratio));
      for (long i = 0; i <= intervals; ++i) values.push_back(parts[0] + static_cast<double>(i) * parts[2]);
    }
    return values;
  }
  std::stringstream ss(t);
  std::string piece;
  while (std::getline(ss, piece, ',')) {
    const std::string p = trim(piece);
    if (p.empty()) throw ConfigError("empty entry in sweep values '" + t + "'");
    values.push_back(parse_number(p));
  }
  if (values.empty()) throw ConfigError("sweep values are empty");
  return values;
}

RunConfig parse_run_config(std::string_view text, std::string name) {
  pt::ptree tree;
  std::istringstream in{std::string(text)};
  try {
    pt::read_ini(in, tree);
  } catch (const pt::ini_parser_error& e) {
    throw ConfigError(std::string("malformed config: ") + e.message() + " (line " + std::to_string(e.line()) + ")");
  }
  reject_unknown(tree);

  RunConfig cfg;
  Reader r(tree, cfg.notices);
  ExperimentSpec& s = cfg.spec;
  s.name = std::move(name);
  s.n = static_cast<int>(r.integer("grid", "n", 10));
  s.reds = static_cast<int>(r.integer("population", "reds", 37));
  s.blues = static_cast<int>(r.integer("population", "blues", 37));
  s.k = static_cast<int>(r.integer("network", "k", 0));
  s.repermute_network = r.flag("network", "repermute", false);

  UtilityParams& p = s.params;
  p.x = r.number("utility", "x", p.x);
  p.alpha = r.number("utility", "alpha", p.alpha);
  p.beta = r.number("utility", "beta", p.beta);
  const long long gamma = r.integer("utility", "gamma", 1);
  if (gamma != 0 && gamma != 1) throw ConfigError("[utility] gamma must be 0 (variable) or 1 (fixed)");
  p.cost_mode = gamma == 1 ? CostMode::Fixed : CostMode::Variable;
  p.c_bar = r.number("utility", "c_bar", p.c_bar);
  p.color_variant = parse_color_variant(r.text("utility", "color_variant", "threshold_saturating"));

  s.max_iter = static_cast<int>(r.integer("process", "max_iter", 0));
  s.replicates = static_cast<int>(r.integer("process", "H", 1));
  const long long seed = r.integer("process", "base_seed", 1);
  if (seed < 0) throw ConfigError("[process] base_seed must be non-negative");
  s.base_seed = static_cast<std::uint64_t>(seed);

  cfg.has_sweep = tree.get_child_optional("sweep").has_value();
  if (cfg.has_sweep) {
    s.axis = parse_sweep_axis(r.text("sweep", "axis", "x"));
    const auto* values = r.raw("sweep", "values");
    s.values = values ? parse_sweep_values(*values) : unit_grid();
    if (!values) cfg.notices.push_back("[sweep] values not set, using the 21-point grid 0:1:0.05");
  } else {
    // A single point: "sweep" over x at its configured value.
    s.axis = SweepAxis::X;
    s.values = {p.x};
  }

  const std::string dir = r.text("output", "directory", "");
  cfg.output.directory = dir;
  const std::string formats = r.text("output", "formats", "csv,svg");
  cfg.output.csv = cfg.output.svg = false;
  std::stringstream fs(formats);
  std::string f;
  while (std::getline(fs, f, ',')) {
    const std::string v = trim(f);
    if (v == "csv") {
      cfg.output.csv = true;
    } else if (v == "svg") {
      cfg.output.svg = true;
    } else {
      throw ConfigError("[output] formats: unknown format '" + v + "' (expected csv, svg)");
    }
  }

  s.validate();
  return cfg;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  return parse_run_config(read_file(path), path.stem().string());
}

namespace {

/// "start:stop:step" when that spelling reproduces `values` exactly.
std::string sweep_values_text(const std::vector<double>& values) {
  if (values.size() >= 3) {
    const double step = (values.back() - values.front()) / static_cast<double>(values.size() - 1);
    const std::string range =
        format_number(values.front()) + ":" + format_number(values.back()) + ":" + format_number(step);
    if (step > 0 && parse_sweep_values(range) == values) return range;
  }
  std::string list;
  for (std::size_t i = 0; i < values.size(); ++i) list += (i ? ", " : "") + format_number(values[i]);
  return list;
}

}  // namespace

std::string render_run_config(const ExperimentSpec& spec) {
  const UtilityParams& p = spec.params;
  std::ostringstream out;
  out << "; Experiment: " << spec.name << "\n"
      << "; Comments start with ';' or '#'. Every key is optional; the loader reports each\n"
      << "; built-in default it falls back to.\n\n"
      << "[grid]\n"
      << "; Side of the square torus (n x n cells, n >= 3).\n"
      << "n = " << spec.n << "\n\n"
      << "[population]\n"
      << "; Red agents take ids 1..reds, blues the ids after. At least one cell must stay empty.\n"
      << "reds = " << spec.reds << "\nblues = " << spec.blues << "\n\n"
      << "[network]\n"
      << "; Friendship degree: every agent has exactly k friends (0 <= k < reds + blues).\n"
      << "k = " << spec.k << "\n"
      << "; Draw a fresh friendship graph at every sweep point instead of once per seed.\n"
      << "repermute = " << (spec.repermute_network ? "true" : "false") << "\n\n"
      << "[utility]\n"
      << "; Same-color share of the 8 neighbor cells needed to be satisfied, in [0, 1].\n"
      << "x = " << format_number(p.x) << "\n"
      << "; Weight of color vs friendship utility, in [0, 1].\n"
      << "alpha = " << format_number(p.alpha) << "\n"
      << "; Weight of location utility vs moving cost, in [0, 1].\n"
      << "beta = " << format_number(p.beta) << "\n"
      << "; 1: fixed moving cost c_bar; 0: cost c_bar times the distance moved.\n"
      << "gamma = " << (p.cost_mode == CostMode::Fixed ? 1 : 0) << "\n"
      << "; Moving cost scale, strictly between 0 and 1.\n"
      << "c_bar = " << format_number(p.c_bar) << "\n"
      << "; threshold_saturating, literal_strict or literal_non_strict.\n"
      << "color_variant = " << to_string(p.color_variant) << "\n\n"
      << "[process]\n"
      << "; Relocation cap per run; 0 means 10 * n^2.\n"
      << "max_iter = " << spec.max_iter << "\n"
      << "; Seeded replicates per sweep point.\n"
      << "H = " << spec.replicates << "\n"
      << "base_seed = " << spec.base_seed << "\n\n"
      << "[sweep]\n"
      << "; Swept parameter: x, beta or k. Without this section a single run at x is made.\n"
      << "axis = " << to_string(spec.axis) << "\n"
      << "; Comma list, start:stop:step, or default (0:1:0.05).\n"
      << "values = " << sweep_values_text(spec.values) << "\n\n"
      << "[output]\n"
      << "; Any of csv, svg. The directory may also come from -o or SCHELLING_OUTPUT_DIR.\n"
      << "formats = csv, svg\n";
  return out.str();
}

}  // namespace schelling::io
