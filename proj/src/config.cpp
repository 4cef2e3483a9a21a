#include "dqd/config.hpp"

#include <cctype>
#include <climits>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>

namespace dqd {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& key, const std::string& value) {
  const char* s = value.c_str();
  char* end = nullptr;
  const double d = std::strtod(s, &end);
  if (end == s || *end != '\0') {
    throw ConfigError("bad numeric value for '" + key + "': '" + value + "'");
  }
  return d;
}

int parse_int(const std::string& key, const std::string& value) {
  const char* s = value.c_str();
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  if (end == s || *end != '\0' || v < INT_MIN || v > INT_MAX) {
    throw ConfigError("bad integer value for '" + key + "': '" + value + "'");
  }
  return static_cast<int>(v);
}

std::vector<std::string> split_list(const std::string& key, const std::string& value) {
  std::vector<std::string> parts;
  if (trim(value).empty()) return parts; // canonical() writes empty lists as ""
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t comma = value.find(',', start);
    const std::string piece =
        trim(value.substr(start, comma == std::string::npos ? std::string::npos
                                                            : comma - start));
    if (piece.empty()) {
      throw ConfigError("empty element in list value for '" + key + "'");
    }
    parts.push_back(piece);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return parts;
}

std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  for (const auto& piece : split_list(key, value)) {
    out.push_back(parse_double(key, piece));
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  for (const auto& piece : split_list(key, value)) {
    out.push_back(parse_int(key, piece));
  }
  return out;
}

void apply_key(ExperimentConfig& c, const std::string& key, const std::string& value) {
  if (key == "grid.x_min") c.grid.x_min = parse_double(key, value);
  else if (key == "grid.x_max") c.grid.x_max = parse_double(key, value);
  else if (key == "grid.n_points") c.grid.n_points = parse_int(key, value);
  else if (key == "system.omega0") c.system.omega0 = parse_double(key, value);
  else if (key == "system.d") c.system.d = parse_double(key, value);
  else if (key == "propagation.dt") c.propagation.dt = parse_double(key, value);
  else if (key == "propagation.T") c.propagation.t_final = parse_double(key, value);
  else if (key == "oct.E0") c.oct.e0 = parse_double(key, value);
  else if (key == "oct.omega_th") c.oct.omega_th = parse_double(key, value);
  else if (key == "oct.max_iterations") c.oct.max_iterations = parse_int(key, value);
  else if (key == "oct.yield_tolerance") c.oct.yield_tolerance = parse_double(key, value);
  else if (key == "oct.envelope_a") c.oct.envelope_a = parse_double(key, value);
  else if (key == "oct.envelope_b") c.oct.envelope_b = parse_double(key, value);
  else if (key == "oct.initial_frequency") c.oct.initial_frequency = parse_double(key, value);
  else if (key == "sweep.parameter") c.sweep.parameter = value;
  else if (key == "sweep.values") c.sweep.values = parse_double_list(key, value);
  else if (key == "sequence.n") c.sequence.n = parse_int_list(key, value);
  else if (key == "sequence.base_field_csv") c.sequence.base_field_csv = value;
  else if (key == "output_dir") c.output_dir = value;
  else throw ConfigError("unknown config key '" + key + "'");
}

void apply_line(ExperimentConfig& c, const std::string& raw, const std::string& where) {
  std::string line = raw;
  const std::size_t hash = line.find('#');
  if (hash != std::string::npos) {
    line = line.substr(0, hash);
  }
  line = trim(line);
  if (line.empty()) return;
  const std::size_t eq = line.find('=');
  if (eq == std::string::npos) {
    throw ConfigError(where + ": expected key = value, got '" + line + "'");
  }
  const std::string key = trim(line.substr(0, eq));
  const std::string value = trim(line.substr(eq + 1));
  if (key.empty()) {
    throw ConfigError(where + ": missing key before '='");
  }
  apply_key(c, key, value);
}

} // namespace

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot read config file '" + path + "'");
  }
  ExperimentConfig config;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    apply_line(config, line, path + ":" + std::to_string(lineno));
  }
  return config;
}

void apply_override(ExperimentConfig& config, const std::string& assignment) {
  apply_line(config, assignment, "--set '" + assignment + "'");
}

void validate(const ExperimentConfig& c) {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
  };
  require(c.grid.x_min < c.grid.x_max, "grid.x_min must be below grid.x_max");
  require(c.grid.n_points >= 16, "grid.n_points must be at least 16");
  require(c.system.omega0 > 0.0, "system.omega0 must be positive");
  require(c.system.d >= 0.0, "system.d must be nonnegative");
  require(c.propagation.dt > 0.0, "propagation.dt must be positive");
  require(c.propagation.t_final > 0.0, "propagation.T must be positive");
  require(c.oct.e0 > 0.0, "oct.E0 must be positive");
  require(c.oct.omega_th > 0.0, "oct.omega_th must be positive (inf disables the filter)");
  require(c.oct.max_iterations >= 1, "oct.max_iterations must be at least 1");
  require(c.oct.yield_tolerance >= 0.0, "oct.yield_tolerance must be nonnegative");
  require(c.oct.envelope_a > 0.0, "oct.envelope_a must be positive");
  require(c.oct.envelope_b > 2.0, "oct.envelope_b must exceed 2");
  require(c.oct.initial_frequency > 0.0, "oct.initial_frequency must be positive");
  if (!c.sweep.parameter.empty()) {
    require(c.sweep.parameter == "omega_th" || c.sweep.parameter == "T" ||
                c.sweep.parameter == "E0",
            "sweep.parameter must be one of omega_th, T, E0");
    require(!c.sweep.values.empty(), "sweep.values must not be empty");
    for (double v : c.sweep.values) {
      require(std::isfinite(v) && v > 0.0, "sweep.values must all be positive");
    }
  }
  require(!c.sequence.n.empty(), "sequence.n must not be empty");
  for (int n : c.sequence.n) {
    require(n >= 1, "sequence.n entries must be at least 1");
  }
  require(!c.output_dir.empty(), "output_dir must not be empty");
}

std::string canonical(const ExperimentConfig& c) {
  char buf[64];
  std::string out;
  auto add = [&out](const std::string& key, const std::string& value) {
    out += key;
    out += '=';
    out += value;
    out += '\n';
  };
  auto num = [&buf](double v) {
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  add("grid.x_min", num(c.grid.x_min));
  add("grid.x_max", num(c.grid.x_max));
  add("grid.n_points", std::to_string(c.grid.n_points));
  add("system.omega0", num(c.system.omega0));
  add("system.d", num(c.system.d));
  add("propagation.dt", num(c.propagation.dt));
  add("propagation.T", num(c.propagation.t_final));
  add("oct.E0", num(c.oct.e0));
  add("oct.omega_th", num(c.oct.omega_th));
  add("oct.max_iterations", std::to_string(c.oct.max_iterations));
  add("oct.yield_tolerance", num(c.oct.yield_tolerance));
  add("oct.envelope_a", num(c.oct.envelope_a));
  add("oct.envelope_b", num(c.oct.envelope_b));
  add("oct.initial_frequency", num(c.oct.initial_frequency));
  add("sweep.parameter", c.sweep.parameter);
  std::string vals;
  for (std::size_t i = 0; i < c.sweep.values.size(); ++i) {
    if (i) vals += ',';
    vals += num(c.sweep.values[i]);
  }
  add("sweep.values", vals);
  std::string ns;
  for (std::size_t i = 0; i < c.sequence.n.size(); ++i) {
    if (i) ns += ',';
    ns += std::to_string(c.sequence.n[i]);
  }
  add("sequence.n", ns);
  add("sequence.base_field_csv", c.sequence.base_field_csv);
  add("output_dir", c.output_dir);
  return out;
}

std::string config_hash(const ExperimentConfig& c) {
  const std::string text = canonical(c);
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

} // namespace dqd
