#include "dsradar/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>

namespace dsradar {

std::string experiment_kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Detect: return "detect";
    case ExperimentKind::Rmse: return "rmse";
    case ExperimentKind::Separate: return "separate";
    case ExperimentKind::PulsesSweep: return "pulses-sweep";
    case ExperimentKind::TargetsSweep: return "targets-sweep";
    case ExperimentKind::Coherence: return "coherence";
    case ExperimentKind::Spectrum: return "spectrum";
  }
  return "?";
}

ExperimentKind parse_experiment_kind(const std::string& name) {
  for (ExperimentKind kind :
       {ExperimentKind::Detect, ExperimentKind::Rmse, ExperimentKind::Separate,
        ExperimentKind::PulsesSweep, ExperimentKind::TargetsSweep, ExperimentKind::Coherence,
        ExperimentKind::Spectrum}) {
    if (experiment_kind_name(kind) == name) return kind;
  }
  throw ConfigError("unknown experiment kind '" + name + "'");
}

std::string model_name(Model model) {
  switch (model) {
    case Model::Standard: return "standard";
    case Model::Structured: return "structured";
    case Model::Df: return "df";
    case Model::ModifiedDf: return "modified-df";
    case Model::NyquistReference: return "nyquist-reference";
  }
  return "?";
}

Model parse_model(const std::string& name) {
  for (Model model : {Model::Standard, Model::Structured, Model::Df, Model::ModifiedDf,
                      Model::NyquistReference}) {
    if (model_name(model) == name) return model;
  }
  throw ConfigError("unknown model '" + name + "'");
}

std::string Variant::label() const {
  if (model == Model::NyquistReference) return model_name(model);
  return model_name(model) + ":" + scheme_name(scheme) + ":" + waveform_kind_name(waveform);
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::stringstream stream(s);
  std::string part;
  while (std::getline(stream, part, sep)) parts.push_back(trim(part));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

double parse_double(const std::string& key, const std::string& value) {
  if (value == "inf" || value == "+inf") return std::numeric_limits<double>::infinity();
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument(value);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "': cannot parse number '" + value + "'");
  }
}

// Values are either a comma list or a lo:step:hi range.
std::vector<double> parse_double_list(const std::string& key, const std::string& value) {
  std::vector<double> out;
  const auto range = split(value, ':');
  if (range.size() == 3) {
    const double lo = parse_double(key, range[0]);
    const double step = parse_double(key, range[1]);
    const double hi = parse_double(key, range[2]);
    if (!(step > 0.0)) throw ConfigError("key '" + key + "': range step must be positive");
    for (double v = lo; v <= hi + 1e-9 * std::abs(step); v += step) out.push_back(v);
    return out;
  }
  for (const std::string& part : split(value, ',')) {
    if (!part.empty()) out.push_back(parse_double(key, part));
  }
  if (out.empty()) throw ConfigError("key '" + key + "': empty list");
  return out;
}

class KeyValueFile {
 public:
  explicit KeyValueFile(const std::string& text) {
    std::stringstream stream(text);
    std::string line;
    int line_number = 0;
    while (std::getline(stream, line)) {
      ++line_number;
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const auto eq = line.find('=');
      if (eq == std::string::npos)
        throw ConfigError("line " + std::to_string(line_number) + ": expected 'key = value'");
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty() || value.empty())
        throw ConfigError("line " + std::to_string(line_number) + ": empty key or value");
      if (values_.count(key))
        throw ConfigError("duplicate key '" + key + "'");
      values_[key] = value;
    }
  }

  bool has(const std::string& key) {
    if (values_.count(key)) {
      consumed_.insert(key);
      return true;
    }
    return false;
  }

  std::string get_string(const std::string& key, const std::string& fallback) {
    return has(key) ? values_[key] : fallback;
  }

  std::string require_string(const std::string& key) {
    if (!has(key)) throw ConfigError("missing required key '" + key + "'");
    return values_[key];
  }

  double get_double(const std::string& key, double fallback) {
    return has(key) ? parse_double(key, values_[key]) : fallback;
  }

  double require_double(const std::string& key) {
    return parse_double(key, require_string(key));
  }

  long long get_int(const std::string& key, long long fallback) {
    if (!has(key)) return fallback;
    const double v = parse_double(key, values_[key]);
    if (v != std::floor(v)) throw ConfigError("key '" + key + "': expected an integer");
    return static_cast<long long>(v);
  }

  bool get_bool(const std::string& key, bool fallback) {
    if (!has(key)) return fallback;
    const std::string& v = values_[key];
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ConfigError("key '" + key + "': expected a boolean");
  }

  std::vector<double> get_double_list(const std::string& key, std::vector<double> fallback) {
    return has(key) ? parse_double_list(key, values_[key]) : fallback;
  }

  std::vector<std::string> get_string_list(const std::string& key,
                                           std::vector<std::string> fallback) {
    if (!has(key)) return fallback;
    auto parts = split(values_[key], ',');
    parts.erase(std::remove_if(parts.begin(), parts.end(),
                               [](const std::string& p) { return p.empty(); }),
                parts.end());
    if (parts.empty()) throw ConfigError("key '" + key + "': empty list");
    return parts;
  }

  void finish() const {
    std::vector<std::string> unknown;
    for (const auto& [key, value] : values_) {
      if (!consumed_.count(key)) unknown.push_back(key);
    }
    if (!unknown.empty()) {
      std::string message = "unknown config keys:";
      for (const std::string& key : unknown) message += " '" + key + "'";
      throw ConfigError(message);
    }
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> consumed_;
};

std::vector<int> to_int_list(const std::string& key, const std::vector<double>& values) {
  std::vector<int> out;
  for (double v : values) {
    if (v != std::floor(v)) throw ConfigError("key '" + key + "': expected integers");
    out.push_back(static_cast<int>(v));
  }
  return out;
}

Variant parse_variant(const std::string& text, Scheme default_scheme,
                      WaveformKind default_waveform) {
  const auto parts = split(text, ':');
  if (parts.empty() || parts.size() > 3)
    throw ConfigError("variant '" + text + "': expected model[:sampling[:waveform]]");
  Variant v;
  v.model = parse_model(parts[0]);
  v.scheme = parts.size() > 1 ? parse_scheme(parts[1]) : default_scheme;
  v.waveform = parts.size() > 2 ? parse_waveform_kind(parts[2]) : default_waveform;
  return v;
}

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  KeyValueFile file(text);
  ExperimentConfig config;
  config.kind = parse_experiment_kind(file.require_string("experiment"));

  config.params.pri_s = file.require_double("pri_s");
  config.params.bandwidth_hz = file.require_double("bandwidth_hz");
  config.pulses_list = to_int_list("pulses", file.get_double_list("pulses", {20}));
  config.params.pulses = config.pulses_list.front();
  config.ds_name = file.get_string("ds_name", config.ds_name);

  const bool wants_mc = config.kind != ExperimentKind::Coherence &&
                        config.kind != ExperimentKind::Spectrum;

  const Scheme default_scheme = parse_scheme(file.get_string("sampling", "ds"));
  const WaveformKind default_waveform =
      parse_waveform_kind(file.get_string("waveform", "dsfcm"));

  int default_grids = 0;
  try {
    const DifferenceSet ds = catalog(config.ds_name);
    default_grids = ds.modulus;
    if (config.num_samples == 0) config.num_samples = ds.size;
  } catch (const UnknownName&) {
    // non-catalog runs must spell out delay_grids / num_samples
  }
  config.params.delay_grids =
      static_cast<int>(file.get_int("delay_grids", default_grids));
  config.params.doppler_grids = static_cast<int>(file.get_int("doppler_grids", 128));
  config.num_samples = static_cast<int>(file.get_int("num_samples", config.num_samples));

  if (file.has("variants") && file.has("models"))
    throw ConfigError("give either 'models' or 'variants', not both");
  std::vector<std::string> variant_texts =
      file.get_string_list("variants", file.get_string_list("models", {"structured"}));
  for (const std::string& text : variant_texts)
    config.variants.push_back(parse_variant(text, default_scheme, default_waveform));

  config.pulse_width_s = file.get_double("pulse_width_s", 0.0);
  config.snr_db = file.get_double_list("snr_db", {std::numeric_limits<double>::infinity()});
  config.targets_list = to_int_list("num_targets", file.get_double_list("num_targets", {3}));
  config.delay_spacing_bins = file.get_double_list("delay_spacing_bins", {2.0});
  config.doppler_spacing_bins = file.get_double("doppler_spacing_bins", 1.0);
  config.trials = static_cast<int>(file.get_int("trials", 100));
  config.seed = static_cast<std::uint64_t>(file.get_int("seed", 1));
  config.on_grid = file.get_bool("on_grid", false);
  const std::string synthesis = file.get_string("synthesis", "fast");
  if (synthesis != "fast" && synthesis != "oracle")
    throw ConfigError("key 'synthesis': expected 'fast' or 'oracle'");
  config.oracle_synthesis = synthesis == "oracle";
  config.kron_budget_bytes =
      static_cast<std::size_t>(file.get_int("kron_budget_bytes", 1LL << 28));
  config.coherence_trials = static_cast<int>(file.get_int("coherence_trials", 0));
  config.spectrum_points = static_cast<int>(file.get_int("spectrum_points", 2048));
  config.spectrum_span_hz = file.get_double("spectrum_span_hz", 0.0);
  file.finish();

  // Structural validation; numeric feasibility is checked by the runner.
  if (config.params.pri_s <= 0.0 || config.params.bandwidth_hz <= 0.0)
    throw ConfigError("pri_s and bandwidth_hz must be positive");
  if (config.trials < 1) throw ConfigError("trials must be >= 1");
  for (int p : config.pulses_list)
    if (p < 1) throw ConfigError("pulses must be >= 1");
  for (int s : config.targets_list)
    if (s < 0) throw ConfigError("num_targets must be >= 0");
  if (wants_mc && config.variants.empty()) throw ConfigError("no models selected");
  if (config.kind == ExperimentKind::PulsesSweep && config.pulses_list.size() < 2)
    throw ConfigError("pulses-sweep needs a list of pulse counts");
  if (config.kind == ExperimentKind::TargetsSweep && config.targets_list.size() < 2)
    throw ConfigError("targets-sweep needs a list of target counts");
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

}  // namespace dsradar
