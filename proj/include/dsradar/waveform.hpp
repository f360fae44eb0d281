#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "dsradar/difference_set.hpp"
#include "dsradar/sampling.hpp"

namespace dsradar {

enum class WaveformKind { Rect, Lfm, Dsfcm };

std::string waveform_kind_name(WaveformKind kind);
WaveformKind parse_waveform_kind(const std::string& name);

// Baseband pulse on [0, T_p), normalized to unit average power over T_p.
// Rect: constant. LFM: linear sweep over +-B/2. DSFCM: sum of complex
// harmonics exp(j 2 pi k t / tau) at the (shifted) difference-set tones,
// which stacks the pulse energy onto the sampled Fourier bins.
class Waveform {
 public:
  static Waveform rect(double pri_s, double pulse_width_s);
  static Waveform lfm(double pri_s, double pulse_width_s, double bandwidth_hz);
  // pulse_width_s == 0 selects T_p = tau (flat K-tone spectrum).
  static Waveform dsfcm(double pri_s, const DifferenceSet& ds, double pulse_width_s = 0.0);
  // Unchecked tone list; for degenerate/test cases that are not difference sets.
  static Waveform dsfcm_tones(double pri_s, std::vector<int> tones, double pulse_width_s = 0.0);

  WaveformKind kind() const { return kind_; }
  double pri() const { return pri_s_; }
  double pulse_width() const { return pulse_width_s_; }
  double amplitude_scale() const { return amplitude_; }
  const std::vector<int>& tones() const { return tones_; }

  // h(t); zero outside [0, T_p).
  std::complex<double> sample_time(double t) const;

  // Fourier series coefficient c_k = (1/tau) int_0^tau h(t) e^{-j 2 pi k t / tau} dt.
  // Closed form for Rect and DSFCM, adaptive quadrature for LFM.
  std::complex<double> fourier_coefficient(int k) const;
  Eigen::VectorXcd fourier_coefficients(const FourierRange& range) const;

  // H(f) = int h(t) e^{-j 2 pi f t} dt.
  std::complex<double> ctft(double freq_hz) const;
  Eigen::VectorXd power_spectrum(const Eigen::Ref<const Eigen::VectorXd>& freq_hz) const;

  // (k_max - k_min) / tau from the shifted tones; DSFCM only.
  double bandwidth_estimate() const;

 private:
  Waveform() = default;

  std::complex<double> lfm_transform(double omega) const;

  WaveformKind kind_ = WaveformKind::Rect;
  double pri_s_ = 0.0;
  double pulse_width_s_ = 0.0;
  double sweep_hz_ = 0.0;     // LFM
  std::vector<int> tones_;    // DSFCM
  double amplitude_ = 1.0;    // unit-power normalization factor
};

}  // namespace dsradar
