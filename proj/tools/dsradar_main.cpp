#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "dsradar/dictionary.hpp"
#include "dsradar/experiment.hpp"

namespace {

using namespace dsradar;

std::ostream& open_or_stdout(std::ofstream& file, const std::string& path) {
  if (path.empty() || path == "-") return std::cout;
  file.open(path);
  if (!file) throw Error("cannot write '" + path + "'");
  return file;
}

std::vector<int> parse_elements(const std::string& text) {
  std::vector<int> elements;
  std::stringstream stream(text);
  std::string part;
  while (std::getline(stream, part, ',')) {
    if (part.empty()) continue;
    elements.push_back(std::stoi(part));
  }
  return elements;
}

int cmd_ds_verify(int modulus, const std::string& elements_text) {
  try {
    const DifferenceSet ds = verify_difference_set(parse_elements(elements_text), modulus);
    std::cout << "valid (" << ds.modulus << "," << ds.size << "," << ds.multiplicity
              << ") difference set\n";
    return 0;
  } catch (const Error& e) {
    std::cout << "invalid: " << e.what() << "\n";
    return 1;
  }
}

int cmd_ds_catalog(const std::string& name) {
  const DifferenceSet ds = catalog(name);
  std::cout << "(" << ds.modulus << "," << ds.size << "," << ds.multiplicity << ")\nelements:";
  for (int e : ds.elements) std::cout << " " << e;
  std::cout << "\nshifted:";
  for (int e : equivalent_shift(ds)) std::cout << " " << e;
  std::cout << "\n";
  return 0;
}

int cmd_dict_coherence(const std::string& scheme_text, const std::string& ds_name, int n, int k,
                       std::uint64_t seed, int trials, const std::string& out_path) {
  const Scheme scheme = parse_scheme(scheme_text);
  DifferenceSet ds;
  if (scheme == Scheme::DS || !ds_name.empty()) ds = catalog(ds_name.empty() ? "91-10-1" : ds_name);
  if (scheme == Scheme::DS) {
    n = ds.modulus;
    k = ds.size;
  }
  if (n < 2) throw ConfigError("dict coherence: give -N (delay grid count)");
  if (k < 1) throw ConfigError("dict coherence: give -K (sample count)");
  // Index range straddling zero with N bins, enough for any shifted set mod N.
  FourierRange range{-(n + 1) / 2, n / 2};

  std::ofstream file;
  std::ostream& out = open_or_stdout(file, out_path);
  if (scheme == Scheme::Random && trials > 0) {
    // coherence histogram over repeated draws
    std::vector<double> draws;
    draws.reserve(static_cast<std::size_t>(trials));
    double hi = 0.0;
    for (int t = 0; t < trials; ++t) {
      const auto sampling = random_sampling(k, range, n, derive_seed(seed, 8, t));
      draws.push_back(coherence(sampling).mu);
      hi = std::max(hi, draws.back());
    }
    const double lo = welch_bound(n, k);
    const int bins = 40;
    const double width = (hi - lo) > 0.0 ? (hi - lo) / bins : 1.0;
    std::vector<long long> counts(bins, 0);
    for (double mu : draws) {
      int b = static_cast<int>((mu - lo) / width);
      if (b < 0) b = 0;
      if (b >= bins) b = bins - 1;
      ++counts[static_cast<std::size_t>(b)];
    }
    out << "bin_lo,bin_hi,count\n";
    for (int b = 0; b < bins; ++b)
      out << format_number(lo + b * width) << "," << format_number(lo + (b + 1) * width) << ","
          << counts[static_cast<std::size_t>(b)] << "\n";
    return 0;
  }

  SamplingIndexSet sampling;
  switch (scheme) {
    case Scheme::DS: sampling = ds_sampling(ds, range); break;
    case Scheme::Consecutive: sampling = consecutive_sampling(k, range, n); break;
    case Scheme::Random: sampling = random_sampling(k, range, n, seed); break;
  }
  const CoherenceReport report = coherence(sampling);
  out << "u,mu_of_u\n";
  for (Eigen::Index u = 0; u < report.mu_profile.size(); ++u)
    out << (u + 1) << "," << format_number(report.mu_profile[u]) << "\n";
  out << "mu,welch\n";
  out << format_number(report.mu) << "," << format_number(report.welch) << "\n";
  return 0;
}

int cmd_waveform_spectrum(const std::string& kind_text, const std::string& ds_name, double pri,
                          double pulse_width, double bandwidth, int points, double span,
                          const std::string& out_path) {
  const WaveformKind kind = parse_waveform_kind(kind_text);
  Waveform wave = Waveform::rect(1.0, 1.0);
  switch (kind) {
    case WaveformKind::Rect:
      wave = Waveform::rect(pri, pulse_width > 0.0 ? pulse_width : 2.0 / bandwidth);
      break;
    case WaveformKind::Lfm:
      wave = Waveform::lfm(pri, pulse_width > 0.0 ? pulse_width : pri / 10.0, bandwidth);
      break;
    case WaveformKind::Dsfcm:
      wave = Waveform::dsfcm(pri, catalog(ds_name), pulse_width);
      break;
  }
  if (span <= 0.0) {
    span = 1.5 * bandwidth;
    if (kind == WaveformKind::Dsfcm) span = 1.5 * wave.bandwidth_estimate();
  }
  std::ofstream file;
  std::ostream& out = open_or_stdout(file, out_path);
  out << "freq_hz,power_db\n";
  for (int i = 0; i < points; ++i) {
    const double f = -span / 2.0 + span * i / (points - 1);
    const double psd = std::norm(wave.ctft(f));
    out << format_number(f) << "," << format_number(10.0 * std::log10(std::max(psd, 1e-30)))
        << "\n";
  }
  return 0;
}

// First sweep point, first variant of the config; shared by sim and recover.
struct SingleTrial {
  RadarParams params;
  Scene scene;
  SamplingIndexSet sampling;
  Eigen::MatrixXcd phi;
  Eigen::MatrixXcd psi;
  MeasurementMatrix measurement;
};

SingleTrial synthesize_single(const ExperimentConfig& config) {
  if (config.variants.empty() || config.variants.front().model == Model::NyquistReference)
    throw ConfigError("this command needs a sub-Nyquist variant (model + sampling + waveform)");
  SingleTrial trial;
  trial.params = config.params;
  const Variant variant = config.variants.front();
  const DifferenceSet ds = catalog(config.ds_name);
  const FourierRange range = fourier_range(config.params.pri_s, config.params.bandwidth_hz);
  const int k = config.num_samples > 0 ? config.num_samples : ds.size;
  trial.sampling = build_sampling(variant.scheme, k, range, &ds, derive_seed(config.seed, 2000),
                                  config.params.delay_grids);
  trial.params.delay_grids = trial.sampling.grid_order;
  trial.phi = delay_dictionary(trial.sampling);
  trial.psi =
      doppler_dictionary(trial.params.pulses, trial.params.doppler_grids, trial.params.pri_s);

  Rng scene_rng(derive_seed(config.seed, 0, 0, 0));
  SceneOptions options;
  options.on_grid = config.on_grid;
  trial.scene = random_scene(config.targets_list.front(), trial.params, scene_rng, options);

  Waveform waveform = Waveform::dsfcm_tones(trial.params.pri_s, trial.sampling.indices,
                                            config.pulse_width_s);
  if (variant.waveform == WaveformKind::Rect)
    waveform = Waveform::rect(trial.params.pri_s, config.pulse_width_s > 0.0
                                                      ? config.pulse_width_s
                                                      : 2.0 / config.params.bandwidth_hz);
  const NoiseSpec noise{config.snr_db.front(), derive_seed(config.seed, 0, 0, 1000)};
  if (config.oracle_synthesis) {
    Eigen::MatrixXcd blocks =
        synthesize_time_oracle(trial.scene, waveform, trial.params, SpilloverPolicy::Wrap);
    add_noise(blocks, noise, waveform, trial.params);
    trial.measurement = fourier_extract(blocks, trial.sampling, waveform, trial.params);
  } else {
    trial.measurement = synthesize_model(trial.scene, trial.sampling, trial.params);
    add_noise(trial.measurement, noise, waveform, trial.params);
  }
  return trial;
}

int cmd_sim_run(const std::string& config_path, const std::string& out_path,
                const std::string& scene_out) {
  const ExperimentConfig config = load_config(config_path);
  const SingleTrial trial = synthesize_single(config);

  std::ofstream file;
  std::ostream& out = open_or_stdout(file, out_path);
  out << "k,p,re,im\n";
  for (int i = 0; i < trial.sampling.size(); ++i)
    for (int p = 0; p < trial.params.pulses; ++p)
      out << trial.sampling.indices[static_cast<std::size_t>(i)] << "," << p << ","
          << format_number(trial.measurement.values(i, p).real()) << ","
          << format_number(trial.measurement.values(i, p).imag()) << "\n";

  if (!scene_out.empty()) {
    std::ofstream scene_file(scene_out);
    if (!scene_file) throw Error("cannot write '" + scene_out + "'");
    scene_file << "target_id,re_a,im_a,delay_s,doppler_hz\n";
    for (int s = 0; s < trial.scene.size(); ++s) {
      const Target& t = trial.scene.targets[static_cast<std::size_t>(s)];
      scene_file << s << "," << format_number(t.attenuation.real()) << ","
                 << format_number(t.attenuation.imag()) << "," << format_number(t.delay_s) << ","
                 << format_number(t.doppler_hz) << "\n";
    }
  }
  return 0;
}

int cmd_recover(const std::string& model_text, const std::string& config_path,
                const std::string& map_path, const std::string& diag_path) {
  const Model model = parse_model(model_text);
  if (model == Model::NyquistReference)
    throw ConfigError("recover: pick one of standard/structured/df/modified-df");
  const ExperimentConfig config = load_config(config_path);
  const SingleTrial trial = synthesize_single(config);

  RecoveryConfig recovery;
  recovery.sparsity = trial.scene.size();
  std::vector<double> history;
  DelayDopplerMap map;
  switch (model) {
    case Model::Structured: {
      const JointSparseEstimate estimate = somp(trial.phi, trial.measurement.values, recovery);
      history = estimate.residual_history;
      map = doppler_match(estimate, trial.psi);
      break;
    }
    case Model::Standard:
      map = standard_recover(trial.measurement.values, trial.phi, trial.psi, recovery,
                             config.kron_budget_bytes, &history);
      break;
    case Model::Df:
    case Model::ModifiedDf: {
      const Eigen::MatrixXcd focused = doppler_focus(
          trial.measurement.values, trial.params.pri_s, trial.params.doppler_grids);
      map = df_recover(focused, trial.phi, trial.params.pulses, recovery, &history);
      break;
    }
    default:
      break;
  }

  std::ofstream map_file;
  std::ostream& map_out = open_or_stdout(map_file, map_path);
  map_out << "m,n,re_amp,im_amp\n";
  for (const MapEntry& entry : map.entries)
    map_out << entry.doppler_index << "," << entry.delay_index << ","
            << format_number(entry.amplitude.real()) << ","
            << format_number(entry.amplitude.imag()) << "\n";

  if (!diag_path.empty()) {
    std::ofstream diag(diag_path);
    if (!diag) throw Error("cannot write '" + diag_path + "'");
    diag << "iter,residual_norm\n";
    for (std::size_t i = 0; i < history.size(); ++i)
      diag << (i + 1) << "," << format_number(history[i]) << "\n";
  }
  return 0;
}

int cmd_exper_run(const std::string& config_path, const std::string& out_dir, long long seed,
                  int jobs, bool dry_run) {
  ExperimentConfig config = load_config(config_path);
  if (seed >= 0) config.seed = static_cast<std::uint64_t>(seed);
  if (dry_run) {
    std::cout << dry_run_report(config);
    return 0;
  }
  const ResultTable table = run_experiment(config, jobs);
  for (const std::string& path : emit_plot_data(table, config.kind, out_dir))
    std::cout << "wrote " << path << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Sub-Nyquist pulse-Doppler radar toolkit"};
  app.require_subcommand(1);

  // ds
  auto* ds = app.add_subcommand("ds", "Difference set tools");
  ds->require_subcommand(1);
  auto* ds_verify = ds->add_subcommand("verify", "Verify a residue set");
  int modulus = 0;
  std::string elements;
  ds_verify->add_option("--modulus", modulus, "Modulus N")->required();
  ds_verify->add_option("--elements", elements, "Comma-separated residues")->required();
  auto* ds_catalog = ds->add_subcommand("catalog", "Print a built-in set");
  std::string catalog_name;
  ds_catalog->add_option("name", catalog_name, "Set name, e.g. 91-10-1")->required();

  // dict
  auto* dict = app.add_subcommand("dict", "Dictionary analysis");
  dict->require_subcommand(1);
  auto* dict_coherence = dict->add_subcommand("coherence", "Cross-correlation profile");
  std::string scheme = "ds";
  std::string dict_ds;
  int grid_n = 0, samples_k = 0, trials = 0;
  std::uint64_t seed = 1;
  std::string out_path;
  dict_coherence->add_option("--scheme", scheme, "consecutive|random|ds")->required();
  dict_coherence->add_option("--ds", dict_ds, "Catalog set name");
  dict_coherence->add_option("-N", grid_n, "Delay grid count");
  dict_coherence->add_option("-K", samples_k, "Sample count");
  dict_coherence->add_option("--seed", seed, "RNG seed");
  dict_coherence->add_option("--trials", trials, "Random-scheme histogram draws");
  dict_coherence->add_option("--out", out_path, "Output CSV ('-' for stdout)");

  // waveform
  auto* waveform = app.add_subcommand("waveform", "Waveform analysis");
  waveform->require_subcommand(1);
  auto* spectrum = waveform->add_subcommand("spectrum", "Power spectrum CSV");
  std::string wave_kind = "dsfcm";
  std::string wave_ds = "2863-54-1";
  double pri = 10e-6, pulse_width = 0.0, bandwidth = 300e6, span = 0.0;
  int points = 2048;
  spectrum->add_option("--kind", wave_kind, "rect|lfm|dsfcm")->required();
  spectrum->add_option("--ds", wave_ds, "Catalog set for dsfcm");
  spectrum->add_option("--pri", pri, "PRI in seconds")->required();
  spectrum->add_option("--pw", pulse_width, "Pulse width in seconds (0 = default)");
  spectrum->add_option("--bandwidth", bandwidth, "Bandwidth in Hz");
  spectrum->add_option("--points", points, "Frequency grid points");
  spectrum->add_option("--span-hz", span, "Frequency span (0 = auto)");
  spectrum->add_option("--out", out_path, "Output CSV ('-' for stdout)");

  // sim
  auto* sim = app.add_subcommand("sim", "Scene and measurement synthesis");
  sim->require_subcommand(1);
  auto* sim_run = sim->add_subcommand("run", "Synthesize one seeded measurement");
  std::string config_path, scene_out;
  sim_run->add_option("--config", config_path, "Experiment config file")->required();
  sim_run->add_option("--out", out_path, "Measurement CSV ('-' for stdout)");
  sim_run->add_option("--scene-out", scene_out, "Scene CSV");

  // recover
  auto* recover = app.add_subcommand("recover", "Run one recovery pipeline");
  std::string model = "structured", map_out, diag_out;
  recover->add_option("--model", model, "standard|structured|df|modified-df")->required();
  recover->add_option("--config", config_path, "Experiment config file")->required();
  recover->add_option("--out", map_out, "Recovered map CSV ('-' for stdout)");
  recover->add_option("--diagnostics", diag_out, "Residual trace CSV");

  // exper
  auto* exper = app.add_subcommand("exper", "Monte-Carlo experiments");
  exper->require_subcommand(1);
  auto* exper_run = exper->add_subcommand("run", "Run a configured experiment");
  std::string exper_out = "out";
  long long seed_override = -1;
  int jobs = 1;
  bool dry_run = false;
  exper_run->add_option("--config", config_path, "Experiment config file")->required();
  exper_run->add_option("--out", exper_out, "Output directory");
  exper_run->add_option("--seed", seed_override, "Master seed override");
  exper_run->add_option("--jobs", jobs, "Worker threads");
  exper_run->add_flag("--dry-run", dry_run, "Validate and print derived sizes only");

  try {
    app.parse(argc, argv);
    if (ds_verify->parsed()) return cmd_ds_verify(modulus, elements);
    if (ds_catalog->parsed()) return cmd_ds_catalog(catalog_name);
    if (dict_coherence->parsed())
      return cmd_dict_coherence(scheme, dict_ds, grid_n, samples_k, seed, trials, out_path);
    if (spectrum->parsed())
      return cmd_waveform_spectrum(wave_kind, wave_ds, pri, pulse_width, bandwidth, points, span,
                                   out_path);
    if (sim_run->parsed()) return cmd_sim_run(config_path, out_path, scene_out);
    if (recover->parsed()) return cmd_recover(model, config_path, map_out, diag_out);
    if (exper_run->parsed())
      return cmd_exper_run(config_path, exper_out, seed_override, jobs, dry_run);
    return 1;
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const dsradar::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
