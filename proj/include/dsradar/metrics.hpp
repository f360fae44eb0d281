#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "dsradar/recovery.hpp"
#include "dsradar/scene.hpp"

namespace dsradar {

// Conventional resolution cells: delta_t = 1/B_h, delta_f = 1/(P tau).
struct NyquistBins {
  double delay_s = 0.0;
  double doppler_hz = 0.0;
};

NyquistBins nyquist_bins(const RadarParams& params);

struct Estimate {
  double delay_s = 0.0;
  double doppler_hz = 0.0;
  std::complex<double> amplitude;
};

// Grid indices to physical units via the grid formulas; works for any map
// dimensions (the Nyquist reference uses an L-point delay grid).
std::vector<Estimate> to_estimates(const DelayDopplerMap& map, double pri_s);

struct TrialScore {
  int detections = 0;  // true detections T
  int targets = 0;     // S
  // per detection: (|dt| / delta_t, |df| / delta_f)
  std::vector<std::pair<double, double>> errors;
};

// Greedy one-to-one matching by ascending combined normalized error; a
// matched pair is a true detection iff |dt| < delta_t and |df| < delta_f
// (strict). Doppler distances are taken on the circle of span 1/tau.
TrialScore match_detections(const Scene& truth, const std::vector<Estimate>& estimates,
                            const NyquistBins& bins, double doppler_span_hz);

// sum of detections / sum of targets over the trials
double prob_detection(const std::vector<TrialScore>& scores);

// pooled normalized RMS errors (e_t, e_f) over all true detections
std::pair<double, double> normalized_rmse(const std::vector<TrialScore>& scores);

// True iff both designated targets have one-to-one matched estimates with
// delay error < t_ij/2 and Doppler error < f_ij/2 (strict).
bool separate_detection(const Target& first, const Target& second,
                        const std::vector<Estimate>& estimates, double doppler_span_hz);

}  // namespace dsradar
