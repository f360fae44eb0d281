#pragma once

#include <Eigen/Dense>
#include <iosfwd>
#include <string>
#include <vector>

#include "dsradar/config.hpp"
#include "dsradar/measurement.hpp"
#include "dsradar/metrics.hpp"
#include "dsradar/recovery.hpp"

namespace dsradar {

struct MetricRow {
  double snr_db = 0.0;
  int pulses = 0;
  int num_targets = 0;
  double delay_spacing_bins = 0.0;
  std::string model;
  std::string sampling;
  std::string waveform;
  long long trials = 0;
  double p_detect = 0.0;
  double e_t = 0.0;
  double e_f = 0.0;
  bool has_rmse = false;
  double p_separate = 0.0;
  bool has_separate = false;
};

struct CoherenceRow {
  std::string scheme;
  double mu = 0.0;
  double welch = 0.0;
  Eigen::VectorXd profile;
};

struct HistogramBin {
  double lo = 0.0;
  double hi = 0.0;
  long long count = 0;
};

struct SpectrumRow {
  std::string waveform;
  Eigen::VectorXd freq_hz;
  Eigen::VectorXd power_db;
};

struct ResultTable {
  ExperimentKind kind = ExperimentKind::Detect;
  std::vector<MetricRow> metrics;
  std::vector<CoherenceRow> coherence;
  std::vector<HistogramBin> histogram;
  std::vector<SpectrumRow> spectra;
};

// Derived problem sizes for --dry-run: validates the config and reports
// K, N, M, P, |I|, L and dictionary footprints without computing.
std::string dry_run_report(const ExperimentConfig& config);

// Seeded Monte-Carlo sweep over (snr x pulses x targets x spacing) points and
// the configured variants. Trials are the unit of parallelism; results are
// reduced in trial order, so the output is independent of the job count.
ResultTable run_experiment(const ExperimentConfig& config, int jobs = 1);

// Conventional processing baseline: rect waveform at the full Nyquist rate,
// circular matched filter per PRI, pulse axis zero-padded onto the M-point
// Doppler grid, peaks taken as the largest local maxima.
DelayDopplerMap nyquist_reference(const Scene& scene, const RadarParams& params,
                                  const NoiseSpec& noise, int num_peaks);

// Tidy CSV files per figure family; returns the paths written.
std::vector<std::string> emit_plot_data(const ResultTable& table, ExperimentKind kind,
                                        const std::string& out_dir);

std::string format_number(double value);

}  // namespace dsradar
