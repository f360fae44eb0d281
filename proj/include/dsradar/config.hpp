#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsradar/errors.hpp"
#include "dsradar/sampling.hpp"
#include "dsradar/scene.hpp"
#include "dsradar/waveform.hpp"

namespace dsradar {

enum class ExperimentKind { Detect, Rmse, Separate, PulsesSweep, TargetsSweep, Coherence, Spectrum };

std::string experiment_kind_name(ExperimentKind kind);
ExperimentKind parse_experiment_kind(const std::string& name);

enum class Model { Standard, Structured, Df, ModifiedDf, NyquistReference };

std::string model_name(Model model);
Model parse_model(const std::string& name);

// One (model, sampling, waveform) combination evaluated per sweep point.
struct Variant {
  Model model = Model::Structured;
  Scheme scheme = Scheme::DS;
  WaveformKind waveform = WaveformKind::Dsfcm;

  std::string label() const;
};

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::Detect;
  RadarParams params;

  std::string ds_name = "91-10-1";
  int num_samples = 0;  // K for consecutive/random sampling; 0 = the DS size

  std::vector<Variant> variants;
  double pulse_width_s = 0.0;  // 0 = per-kind default

  std::vector<double> snr_db;      // may contain +inf (noiseless)
  std::vector<int> pulses_list;    // sweep for pulses-sweep; single value otherwise
  std::vector<int> targets_list;   // sweep for targets-sweep; single value otherwise
  std::vector<double> delay_spacing_bins;  // separate kind sweep
  double doppler_spacing_bins = 1.0;

  int trials = 100;
  std::uint64_t seed = 1;
  bool on_grid = false;
  bool oracle_synthesis = false;
  std::size_t kron_budget_bytes = std::size_t{1} << 28;

  // coherence kind
  int coherence_trials = 0;  // random-scheme histogram draws

  // spectrum kind
  int spectrum_points = 2048;
  double spectrum_span_hz = 0.0;  // 0 = derive from the waveform set
};

// Flat "key = value" text, '#' comments; unknown keys are errors.
ExperimentConfig parse_config(const std::string& text);
ExperimentConfig load_config(const std::string& path);

}  // namespace dsradar
