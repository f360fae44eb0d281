#pragma once

#include <Eigen/Dense>
#include <limits>

#include "dsradar/sampling.hpp"
#include "dsradar/scene.hpp"
#include "dsradar/waveform.hpp"

namespace dsradar {

// K x P matrix of normalized per-PRI Fourier coefficients: row k of column p
// is Ybar_p[kappa_k] = tau Y_p[kappa_k] / H(omega_k).
struct MeasurementMatrix {
  Eigen::MatrixXcd values;
  SamplingIndexSet sampling;
  bool noisy = false;
};

// Fast model path: Ybar_p[kappa] = sum_s a_s e^{j 2 pi f_s p tau}
// e^{-j 2 pi kappa t_s / tau}.
MeasurementMatrix synthesize_model(const Scene& scene, const SamplingIndexSet& sampling,
                                   const RadarParams& params);

// Reject throws DelayOverrun when an echo would cross the PRI boundary;
// Wrap folds the previous pulse's tail into the window (steady-state
// periodic train), which DSFCM with T_p = tau requires for nonzero delays.
enum class SpilloverPolicy { Reject, Wrap };

// Nyquist-rate time oracle: L x P, column p holds the samples of PRI p at
// t = p tau + l tau / L.
Eigen::MatrixXcd synthesize_time_oracle(const Scene& scene, const Waveform& waveform,
                                        const RadarParams& params,
                                        SpilloverPolicy policy = SpilloverPolicy::Reject);

// Per-PRI DFT bins at the sampled indices, scaled to Fourier-series
// coefficients and divided by the waveform coefficient. The convention is
// c_k = (1/L) DFT_k for Nyquist-sampled, band-limited PRIs.
MeasurementMatrix fourier_extract(const Eigen::Ref<const Eigen::MatrixXcd>& time_blocks,
                                  const SamplingIndexSet& sampling, const Waveform& waveform,
                                  const RadarParams& params);

struct NoiseSpec {
  double snr_db = std::numeric_limits<double>::infinity();
  std::uint64_t seed = 0;

  bool noiseless() const { return std::isinf(snr_db); }
};

// Per-sample complex noise power sigma_w^2 solving
// SNR = |a|^2 ||h||^2 / (L_h sigma_w^2) with h the Nyquist-sampled pulse.
double noise_sigma_sq(const Waveform& waveform, const RadarParams& params, double snr_db,
                      double ref_amplitude = 1.0);

// Time-domain path: i.i.d. CN(0, sigma_w^2) per Nyquist sample.
void add_noise(Eigen::MatrixXcd& time_blocks, const NoiseSpec& noise, const Waveform& waveform,
               const RadarParams& params);

// Fourier-domain fast path: the analytically equivalent per-coefficient
// noise, variance sigma_w^2 / (L |c_k|^2).
void add_noise(MeasurementMatrix& measurement, const NoiseSpec& noise, const Waveform& waveform,
               const RadarParams& params);

}  // namespace dsradar
