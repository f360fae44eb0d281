#include "dsradar/experiment.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <mutex>
#include <numbers>
#include <sstream>
#include <thread>

#include "dsradar/dictionary.hpp"

namespace dsradar {

namespace {

constexpr double kPi = std::numbers::pi;

struct SweepPoint {
  double snr_db = 0.0;
  int pulses = 0;
  int num_targets = 0;
  double spacing_bins = 0.0;
};

std::vector<SweepPoint> sweep_points(const ExperimentConfig& config) {
  std::vector<double> spacings = {0.0};
  if (config.kind == ExperimentKind::Separate) spacings = config.delay_spacing_bins;
  std::vector<SweepPoint> points;
  for (int pulses : config.pulses_list)
    for (int targets : config.targets_list)
      for (double spacing : spacings)
        for (double snr : config.snr_db)
          points.push_back({snr, pulses,
                            config.kind == ExperimentKind::Separate ? 2 : targets, spacing});
  return points;
}

// DS set resolved once; consecutive/random sampling share its K and N unless
// the config overrides them.
struct ProblemSetup {
  DifferenceSet ds;
  FourierRange range;
  int num_samples = 0;
  int delay_grids = 0;
};

ProblemSetup resolve_setup(const ExperimentConfig& config) {
  ProblemSetup setup;
  setup.ds = catalog(config.ds_name);
  setup.range = fourier_range(config.params.pri_s, config.params.bandwidth_hz);
  setup.num_samples = config.num_samples > 0 ? config.num_samples : setup.ds.size;
  setup.delay_grids =
      config.params.delay_grids > 0 ? config.params.delay_grids : setup.ds.modulus;
  if (setup.delay_grids > setup.range.size())
    throw ConfigError("delay_grids exceeds the Fourier index count");
  return setup;
}

SamplingIndexSet variant_sampling(const Variant& variant, const ProblemSetup& setup,
                                  std::uint64_t seed) {
  switch (variant.scheme) {
    case Scheme::DS:
      return ds_sampling(setup.ds, setup.range);
    case Scheme::Consecutive:
      return consecutive_sampling(setup.num_samples, setup.range, setup.delay_grids);
    case Scheme::Random:
      return random_sampling(setup.num_samples, setup.range, setup.delay_grids, seed);
  }
  throw ConfigError("bad sampling scheme");
}

Waveform variant_waveform(const Variant& variant, const SamplingIndexSet& sampling,
                          const ExperimentConfig& config) {
  const double tau = config.params.pri_s;
  switch (variant.waveform) {
    case WaveformKind::Rect: {
      const double width =
          config.pulse_width_s > 0.0 ? config.pulse_width_s : 2.0 / config.params.bandwidth_hz;
      return Waveform::rect(tau, width);
    }
    case WaveformKind::Lfm: {
      const double width = config.pulse_width_s > 0.0 ? config.pulse_width_s : tau / 10.0;
      return Waveform::lfm(tau, width, config.params.bandwidth_hz);
    }
    case WaveformKind::Dsfcm:
      // comb on the sampled bins; for DS sampling this is the catalog DS-FCM
      return Waveform::dsfcm_tones(tau, sampling.indices, config.pulse_width_s);
  }
  throw ConfigError("bad waveform kind");
}

Scene make_scene(const ExperimentConfig& config, const RadarParams& params,
                 const SweepPoint& point, Rng& rng) {
  if (config.kind != ExperimentKind::Separate) {
    SceneOptions options;
    options.on_grid = config.on_grid;
    return random_scene(point.num_targets, params, rng, options);
  }
  // Two equal-power targets with prescribed delay/Doppler spacing.
  const NyquistBins bins = nyquist_bins(params);
  const double delay_gap = point.spacing_bins * bins.delay_s;
  const double doppler_gap = config.doppler_spacing_bins * bins.doppler_hz;
  const double tau = params.pri_s;
  if (delay_gap >= tau) throw ConfigError("delay spacing exceeds the unambiguous region");
  Scene scene;
  Target first;
  first.attenuation = rng.unit_phasor();
  first.delay_s = rng.uniform(0.0, tau - delay_gap);
  first.doppler_hz = rng.uniform(-0.5 / tau, 0.5 / tau - doppler_gap);
  Target second;
  second.attenuation = rng.unit_phasor();
  second.delay_s = first.delay_s + delay_gap;
  second.doppler_hz = first.doppler_hz + doppler_gap;
  scene.targets = {first, second};
  return scene;
}

struct VariantOutcome {
  TrialScore score;
  bool separate = false;
  double wall_ms = 0.0;
};

DelayDopplerMap recover_map(Model model, const MeasurementMatrix& measurement,
                            const Eigen::MatrixXcd& phi, const Eigen::MatrixXcd& psi,
                            const RadarParams& params, const RecoveryConfig& recovery,
                            std::size_t budget) {
  switch (model) {
    case Model::Structured:
      return structured_recover(measurement.values, phi, psi, recovery);
    case Model::Standard:
      return standard_recover(measurement.values, phi, psi, recovery, budget);
    case Model::Df:
    case Model::ModifiedDf: {
      const Eigen::MatrixXcd focused =
          doppler_focus(measurement.values, params.pri_s, params.doppler_grids);
      return df_recover(focused, phi, params.pulses, recovery);
    }
    case Model::NyquistReference:
      break;
  }
  throw ConfigError("recover_map: bad model");
}

class ExperimentRunner {
 public:
  ExperimentRunner(const ExperimentConfig& config, int jobs)
      : config_(config), setup_(resolve_setup(config)), jobs_(jobs < 1 ? 1 : jobs) {}

  ResultTable run() {
    ResultTable table;
    table.kind = config_.kind;
    const std::vector<SweepPoint> points = sweep_points(config_);
    for (std::size_t point_idx = 0; point_idx < points.size(); ++point_idx)
      run_point(points[point_idx], point_idx, table);
    return table;
  }

 private:
  struct VariantRuntime {
    Variant variant;
    bool per_trial_sampling = false;
    SamplingIndexSet sampling;  // unused for nyquist-reference / random
    Eigen::MatrixXcd phi;
    Waveform waveform = Waveform::rect(1.0, 1.0);
  };

  void run_point(const SweepPoint& point, std::size_t point_idx, ResultTable& table) {
    RadarParams params = config_.params;
    params.pulses = point.pulses;
    params.delay_grids = setup_.delay_grids;

    std::vector<VariantRuntime> runtimes;
    for (const Variant& variant : config_.variants) {
      VariantRuntime rt;
      rt.variant = variant;
      if (variant.model != Model::NyquistReference) {
        rt.per_trial_sampling = variant.scheme == Scheme::Random;
        if (!rt.per_trial_sampling) {
          rt.sampling = variant_sampling(variant, setup_, 0);
          rt.phi = delay_dictionary(rt.sampling, setup_.delay_grids);
          rt.waveform = variant_waveform(variant, rt.sampling, config_);
        }
      }
      runtimes.push_back(std::move(rt));
    }
    const Eigen::MatrixXcd psi =
        doppler_dictionary(params.pulses, params.doppler_grids, params.pri_s);

    const int trials = config_.trials;
    std::vector<std::vector<VariantOutcome>> outcomes(
        static_cast<std::size_t>(trials),
        std::vector<VariantOutcome>(config_.variants.size()));

    const auto body = [&](int trial) {
      Rng scene_rng(derive_seed(config_.seed, point_idx, static_cast<std::uint64_t>(trial), 0));
      const Scene scene = make_scene(config_, params, point, scene_rng);
      for (std::size_t v = 0; v < runtimes.size(); ++v) {
        const auto start = std::chrono::steady_clock::now();
        VariantOutcome outcome =
            run_variant(runtimes[v], scene, params, point, point_idx, trial, v, psi);
        outcome.wall_ms = std::chrono::duration<double, std::milli>(
                              std::chrono::steady_clock::now() - start)
                              .count();
        outcomes[static_cast<std::size_t>(trial)][v] = std::move(outcome);
      }
    };
    parallel_trials(trials, body, point_idx);

    for (std::size_t v = 0; v < runtimes.size(); ++v) {
      MetricRow row;
      row.snr_db = point.snr_db;
      row.pulses = point.pulses;
      row.num_targets = point.num_targets;
      row.delay_spacing_bins = point.spacing_bins;
      row.model = model_name(runtimes[v].variant.model);
      if (runtimes[v].variant.model == Model::NyquistReference) {
        row.sampling = "nyquist";
        row.waveform = "rect";
      } else {
        row.sampling = scheme_name(runtimes[v].variant.scheme);
        row.waveform = waveform_kind_name(runtimes[v].variant.waveform);
      }
      row.trials = trials;
      std::vector<TrialScore> scores;
      scores.reserve(static_cast<std::size_t>(trials));
      long long separate_hits = 0;
      double wall_ms = 0.0;
      for (int trial = 0; trial < trials; ++trial) {
        const VariantOutcome& outcome = outcomes[static_cast<std::size_t>(trial)][v];
        scores.push_back(outcome.score);
        separate_hits += outcome.separate ? 1 : 0;
        wall_ms += outcome.wall_ms;
      }
      row.p_detect = prob_detection(scores);
      try {
        std::tie(row.e_t, row.e_f) = normalized_rmse(scores);
        row.has_rmse = true;
      } catch (const NoDetections&) {
        row.has_rmse = false;
      }
      if (config_.kind == ExperimentKind::Separate) {
        row.has_separate = true;
        row.p_separate = static_cast<double>(separate_hits) / trials;
      }
      std::cerr << "point " << point_idx << " variant " << runtimes[v].variant.label()
                << " wall_ms=" << wall_ms << "\n";
      table.metrics.push_back(std::move(row));
    }
  }

  VariantOutcome run_variant(const VariantRuntime& runtime, const Scene& scene,
                             const RadarParams& params, const SweepPoint& point,
                             std::size_t point_idx, int trial, std::size_t variant_idx,
                             const Eigen::MatrixXcd& psi) {
    const NoiseSpec noise{point.snr_db,
                          derive_seed(config_.seed, point_idx, static_cast<std::uint64_t>(trial),
                                      1000 + variant_idx)};
    DelayDopplerMap map;
    if (runtime.variant.model == Model::NyquistReference) {
      map = nyquist_reference(scene, params, noise, scene.size());
    } else if (scene.size() == 0) {
      map.delay_grids = params.delay_grids;
      map.doppler_grids = params.doppler_grids;
    } else {
      SamplingIndexSet sampling = runtime.sampling;
      Eigen::MatrixXcd phi_local;
      Waveform waveform = runtime.waveform;
      if (runtime.per_trial_sampling) {
        sampling = variant_sampling(
            runtime.variant, setup_,
            derive_seed(config_.seed, point_idx, static_cast<std::uint64_t>(trial),
                        2000 + variant_idx));
        phi_local = delay_dictionary(sampling, setup_.delay_grids);
        waveform = variant_waveform(runtime.variant, sampling, config_);
      }
      const Eigen::MatrixXcd& phi = runtime.per_trial_sampling ? phi_local : runtime.phi;

      MeasurementMatrix measurement;
      if (config_.oracle_synthesis) {
        Eigen::MatrixXcd blocks =
            synthesize_time_oracle(scene, waveform, params, SpilloverPolicy::Wrap);
        add_noise(blocks, noise, waveform, params);
        measurement = fourier_extract(blocks, sampling, waveform, params);
      } else {
        measurement = synthesize_model(scene, sampling, params);
        add_noise(measurement, noise, waveform, params);
      }
      RecoveryConfig recovery;
      recovery.sparsity = scene.size();  // known-S mode
      map = recover_map(runtime.variant.model, measurement, phi, psi, params, recovery,
                        config_.kron_budget_bytes);
    }

    VariantOutcome outcome;
    const std::vector<Estimate> estimates = to_estimates(map, params.pri_s);
    outcome.score =
        match_detections(scene, estimates, nyquist_bins(params), params.doppler_span_hz());
    if (config_.kind == ExperimentKind::Separate && scene.size() == 2)
      outcome.separate = separate_detection(scene.targets[0], scene.targets[1], estimates,
                                            params.doppler_span_hz());
    return outcome;
  }

  template <typename Body>
  void parallel_trials(int trials, const Body& body, std::size_t point_idx) {
    const int workers = std::min(jobs_, trials);
    if (workers <= 1) {
      for (int trial = 0; trial < trials; ++trial) run_trial_checked(body, trial, point_idx);
      return;
    }
    std::atomic<int> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        while (!failed.load()) {
          const int trial = next.fetch_add(1);
          if (trial >= trials) break;
          try {
            run_trial_checked(body, trial, point_idx);
          } catch (...) {
            std::scoped_lock lock(error_mutex);
            if (!error) error = std::current_exception();
            failed.store(true);
          }
        }
      });
    }
    for (std::thread& t : pool) t.join();
    if (error) std::rethrow_exception(error);
  }

  template <typename Body>
  void run_trial_checked(const Body& body, int trial, std::size_t point_idx) {
    try {
      body(trial);
    } catch (const Error& e) {
      throw Error("point " + std::to_string(point_idx) + ", trial " + std::to_string(trial) +
                  ": " + e.what());
    }
  }

  const ExperimentConfig& config_;
  ProblemSetup setup_;
  int jobs_;
};

ResultTable run_coherence(const ExperimentConfig& config) {
  const ProblemSetup setup = resolve_setup(config);
  ResultTable table;
  table.kind = ExperimentKind::Coherence;
  const SamplingIndexSet schemes[3] = {
      ds_sampling(setup.ds, setup.range),
      consecutive_sampling(setup.num_samples, setup.range, setup.delay_grids),
      random_sampling(setup.num_samples, setup.range, setup.delay_grids,
                      derive_seed(config.seed, 7))};
  for (const SamplingIndexSet& sampling : schemes) {
    const CoherenceReport report = coherence(sampling);
    table.coherence.push_back(
        {scheme_name(sampling.scheme), report.mu, report.welch, report.mu_profile});
  }
  if (config.coherence_trials > 0) {
    std::vector<double> draws;
    draws.reserve(static_cast<std::size_t>(config.coherence_trials));
    for (int t = 0; t < config.coherence_trials; ++t) {
      const SamplingIndexSet s = random_sampling(setup.num_samples, setup.range,
                                                 setup.delay_grids, derive_seed(config.seed, 8, t));
      draws.push_back(coherence(s).mu);
    }
    const double lo = table.coherence.front().welch;  // bound is the natural left edge
    const double hi = *std::max_element(draws.begin(), draws.end());
    const int bins = 40;
    const double width = (hi - lo) / bins > 0.0 ? (hi - lo) / bins : 1.0;
    table.histogram.assign(static_cast<std::size_t>(bins), {});
    for (int b = 0; b < bins; ++b) {
      table.histogram[static_cast<std::size_t>(b)].lo = lo + b * width;
      table.histogram[static_cast<std::size_t>(b)].hi = lo + (b + 1) * width;
    }
    for (double mu : draws) {
      int bin = static_cast<int>((mu - lo) / width);
      if (bin < 0) bin = 0;
      if (bin >= bins) bin = bins - 1;
      ++table.histogram[static_cast<std::size_t>(bin)].count;
    }
  }
  return table;
}

ResultTable run_spectrum(const ExperimentConfig& config) {
  const ProblemSetup setup = resolve_setup(config);
  ResultTable table;
  table.kind = ExperimentKind::Spectrum;
  const SamplingIndexSet ds = ds_sampling(setup.ds, setup.range);
  const double span = config.spectrum_span_hz > 0.0 ? config.spectrum_span_hz
                                                    : 1.5 * config.params.bandwidth_hz;
  Eigen::VectorXd freqs(config.spectrum_points);
  for (int i = 0; i < config.spectrum_points; ++i)
    freqs[i] = -span / 2.0 + span * i / (config.spectrum_points - 1);

  std::vector<WaveformKind> kinds;
  for (const Variant& v : config.variants) {
    if (std::find(kinds.begin(), kinds.end(), v.waveform) == kinds.end())
      kinds.push_back(v.waveform);
  }
  if (kinds.empty()) kinds = {WaveformKind::Rect, WaveformKind::Lfm, WaveformKind::Dsfcm};
  for (WaveformKind kind : kinds) {
    Variant v;
    v.waveform = kind;
    const Waveform wave = variant_waveform(v, ds, config);
    const Eigen::VectorXd psd = wave.power_spectrum(freqs);
    SpectrumRow row;
    row.waveform = waveform_kind_name(kind);
    row.freq_hz = freqs;
    row.power_db.resize(freqs.size());
    for (Eigen::Index i = 0; i < freqs.size(); ++i)
      row.power_db[i] = 10.0 * std::log10(std::max(psd[i], 1e-30));
    table.spectra.push_back(std::move(row));
  }
  return table;
}

}  // namespace

std::string format_number(double value) {
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[40];
  std::snprintf(buffer, sizeof(buffer), "%.12g", value);
  return buffer;
}

std::string dry_run_report(const ExperimentConfig& config) {
  const ProblemSetup setup = resolve_setup(config);
  const RadarParams& params = config.params;
  std::ostringstream out;
  const int k = setup.num_samples;
  const int n = setup.delay_grids;
  const int m = params.doppler_grids;
  out << "experiment: " << experiment_kind_name(config.kind) << "\n";
  out << "K=" << k << " N=" << n << " M=" << m << " P=";
  for (std::size_t i = 0; i < config.pulses_list.size(); ++i)
    out << (i ? "," : "") << config.pulses_list[i];
  out << "\n";
  out << "fourier range: [" << setup.range.lo << ", " << setup.range.hi << "] ("
      << setup.range.size() << " indices), nyquist samples per pri: " << params.pri_samples()
      << "\n";
  const auto bytes = [](double count) { return count * sizeof(std::complex<double>); };
  out << "delay dictionary bytes: " << format_number(bytes(static_cast<double>(k) * n)) << "\n";
  const int pulses = config.pulses_list.front();
  out << "doppler dictionary bytes: " << format_number(bytes(static_cast<double>(pulses) * m))
      << "\n";
  out << "kronecker dictionary bytes: "
      << format_number(bytes(static_cast<double>(k) * pulses * n * m)) << " (budget "
      << config.kron_budget_bytes << ")\n";
  out << "sweep points: " << sweep_points(config).size() << ", variants: "
      << config.variants.size() << ", trials per point: " << config.trials << "\n";
  return out.str();
}

ResultTable run_experiment(const ExperimentConfig& config, int jobs) {
  switch (config.kind) {
    case ExperimentKind::Coherence:
      return run_coherence(config);
    case ExperimentKind::Spectrum:
      return run_spectrum(config);
    default:
      return ExperimentRunner(config, jobs).run();
  }
}

DelayDopplerMap nyquist_reference(const Scene& scene, const RadarParams& params,
                                  const NoiseSpec& noise, int num_peaks) {
  const double tau = params.pri_s;
  const Waveform wave = Waveform::rect(tau, 2.0 / params.bandwidth_hz);
  Eigen::MatrixXcd blocks = synthesize_time_oracle(scene, wave, params, SpilloverPolicy::Wrap);
  add_noise(blocks, noise, wave, params);

  const int samples = params.pri_samples();
  const int pulse_samples =
      static_cast<int>(std::lround(wave.pulse_width() * params.bandwidth_hz));
  Eigen::VectorXcd pulse(pulse_samples);
  for (int i = 0; i < pulse_samples; ++i)
    pulse[i] = wave.sample_time(i / params.bandwidth_hz);
  const double pulse_energy = pulse.squaredNorm();

  // circular matched filter per PRI
  Eigen::MatrixXcd filtered(samples, params.pulses);
  for (int p = 0; p < params.pulses; ++p) {
    for (int l = 0; l < samples; ++l) {
      std::complex<double> acc = 0.0;
      for (int i = 0; i < pulse_samples; ++i)
        acc += std::conj(pulse[i]) * blocks((l + i) % samples, p);
      filtered(l, p) = acc;
    }
  }
  const Eigen::MatrixXcd focused = doppler_focus(filtered, tau, params.doppler_grids);
  const Eigen::MatrixXd magnitude = focused.cwiseAbs();

  // local maxima on the (delay, Doppler) torus
  struct Peak {
    double mag;
    int delay;
    int doppler;
  };
  std::vector<Peak> peaks;
  const int m_grids = params.doppler_grids;
  for (int l = 0; l < samples; ++l) {
    for (int m = 0; m < m_grids; ++m) {
      const double center = magnitude(l, m);
      bool is_peak = true;
      for (int dl = -1; dl <= 1 && is_peak; ++dl) {
        for (int dm = -1; dm <= 1; ++dm) {
          if (dl == 0 && dm == 0) continue;
          const int ll = (l + dl + samples) % samples;
          const int mm = (m + dm + m_grids) % m_grids;
          if (magnitude(ll, mm) > center) {
            is_peak = false;
            break;
          }
        }
      }
      if (is_peak) peaks.push_back({center, l, m});
    }
  }
  std::sort(peaks.begin(), peaks.end(), [](const Peak& a, const Peak& b) {
    if (a.mag != b.mag) return a.mag > b.mag;
    if (a.delay != b.delay) return a.delay < b.delay;
    return a.doppler < b.doppler;
  });

  DelayDopplerMap map;
  map.delay_grids = samples;
  map.doppler_grids = m_grids;
  const double gain = pulse_energy * params.pulses;
  for (int i = 0; i < num_peaks && i < static_cast<int>(peaks.size()); ++i)
    map.entries.push_back(
        {peaks[static_cast<std::size_t>(i)].doppler, peaks[static_cast<std::size_t>(i)].delay,
         focused(peaks[static_cast<std::size_t>(i)].delay,
                 peaks[static_cast<std::size_t>(i)].doppler) /
             gain});
  return map;
}

namespace {

void write_metric_header(std::ofstream& out, ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Detect:
    case ExperimentKind::Rmse:
      out << "snr_db,model,sampling,waveform,trials,p_detect,e_t,e_f\n";
      break;
    case ExperimentKind::PulsesSweep:
      out << "snr_db,pulses,model,sampling,waveform,trials,p_detect,e_t,e_f\n";
      break;
    case ExperimentKind::TargetsSweep:
      out << "num_targets,model,sampling,waveform,trials,p_detect,e_t,e_f\n";
      break;
    case ExperimentKind::Separate:
      out << "snr_db,delay_spacing_bins,model,sampling,waveform,trials,p_detect,e_t,e_f,"
             "p_separate\n";
      break;
    default:
      break;
  }
}

void write_metric_row(std::ofstream& out, ExperimentKind kind, const MetricRow& row) {
  const std::string rmse =
      row.has_rmse ? format_number(row.e_t) + "," + format_number(row.e_f) : ",";
  const std::string tail = row.model + "," + row.sampling + "," + row.waveform + "," +
                           std::to_string(row.trials) + "," + format_number(row.p_detect) + "," +
                           rmse;
  switch (kind) {
    case ExperimentKind::Detect:
    case ExperimentKind::Rmse:
      out << format_number(row.snr_db) << "," << tail << "\n";
      break;
    case ExperimentKind::PulsesSweep:
      out << format_number(row.snr_db) << "," << row.pulses << "," << tail << "\n";
      break;
    case ExperimentKind::TargetsSweep:
      out << row.num_targets << "," << tail << "\n";
      break;
    case ExperimentKind::Separate:
      out << format_number(row.snr_db) << "," << format_number(row.delay_spacing_bins) << ","
          << tail << "," << format_number(row.p_separate) << "\n";
      break;
    default:
      break;
  }
}

}  // namespace

std::vector<std::string> emit_plot_data(const ResultTable& table, ExperimentKind kind,
                                        const std::string& out_dir) {
  if (table.kind != kind)
    throw KindMismatch("emit_plot_data: table holds '" + experiment_kind_name(table.kind) +
                       "', asked for '" + experiment_kind_name(kind) + "'");
  std::filesystem::create_directories(out_dir);
  std::vector<std::string> written;
  const auto open = [&](const std::string& name) {
    const std::string path = out_dir + "/" + name;
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    written.push_back(path);
    return out;
  };

  switch (kind) {
    case ExperimentKind::Coherence: {
      auto profile = open("coherence.csv");
      profile << "scheme,u,mu_of_u\n";
      for (const CoherenceRow& row : table.coherence)
        for (Eigen::Index u = 0; u < row.profile.size(); ++u)
          profile << row.scheme << "," << (u + 1) << "," << format_number(row.profile[u]) << "\n";
      auto summary = open("coherence_summary.csv");
      summary << "scheme,mu,welch\n";
      for (const CoherenceRow& row : table.coherence)
        summary << row.scheme << "," << format_number(row.mu) << "," << format_number(row.welch)
                << "\n";
      if (!table.histogram.empty()) {
        auto hist = open("coherence_histogram.csv");
        hist << "bin_lo,bin_hi,count\n";
        for (const HistogramBin& bin : table.histogram)
          hist << format_number(bin.lo) << "," << format_number(bin.hi) << "," << bin.count
               << "\n";
      }
      break;
    }
    case ExperimentKind::Spectrum: {
      auto out = open("spectrum.csv");
      out << "waveform,freq_hz,power_db\n";
      for (const SpectrumRow& row : table.spectra)
        for (Eigen::Index i = 0; i < row.freq_hz.size(); ++i)
          out << row.waveform << "," << format_number(row.freq_hz[i]) << ","
              << format_number(row.power_db[i]) << "\n";
      break;
    }
    default: {
      auto out = open(experiment_kind_name(kind) + ".csv");
      write_metric_header(out, kind);
      for (const MetricRow& row : table.metrics) write_metric_row(out, kind, row);
      break;
    }
  }
  return written;
}

}  // namespace dsradar
