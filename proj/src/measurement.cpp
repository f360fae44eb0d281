#include "dsradar/measurement.hpp"

#include <cmath>
#include <numbers>

namespace dsradar {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

Complex phasor(double angle) { return {std::cos(angle), std::sin(angle)}; }

void check_target(const Target& t, const RadarParams& params) {
  const double tau = params.pri_s;
  if (t.delay_s < 0.0 || t.delay_s >= tau)
    throw OutOfRange("target delay outside [0, tau)");
  if (t.doppler_hz < -0.5 / tau || t.doppler_hz >= 0.5 / tau)
    throw OutOfRange("target Doppler outside [-1/2tau, 1/2tau)");
}

// Waveform coefficients on the sampled bins, with the division guard.
Eigen::VectorXcd sampled_coefficients(const SamplingIndexSet& sampling, const Waveform& waveform) {
  Eigen::VectorXcd c(sampling.size());
  for (int i = 0; i < sampling.size(); ++i)
    c[i] = waveform.fourier_coefficient(sampling.indices[static_cast<std::size_t>(i)]);
  const double max_mag = c.cwiseAbs().maxCoeff();
  for (int i = 0; i < sampling.size(); ++i) {
    if (std::abs(c[i]) < 1e-6 * max_mag)
      throw NumericallyUnsampledBin(
          "bin " + std::to_string(sampling.indices[static_cast<std::size_t>(i)]) +
          " carries no waveform energy");
  }
  return c;
}

}  // namespace

MeasurementMatrix synthesize_model(const Scene& scene, const SamplingIndexSet& sampling,
                                   const RadarParams& params) {
  const int k = sampling.size();
  const int p = params.pulses;
  MeasurementMatrix m;
  m.sampling = sampling;
  m.values = Eigen::MatrixXcd::Zero(k, p);
  const double tau = params.pri_s;
  Eigen::VectorXcd delay_col(k);
  Eigen::RowVectorXcd doppler_row(p);
  for (const Target& t : scene.targets) {
    check_target(t, params);
    for (int i = 0; i < k; ++i)
      delay_col[i] =
          phasor(-2.0 * kPi * sampling.indices[static_cast<std::size_t>(i)] * t.delay_s / tau);
    for (int j = 0; j < p; ++j) doppler_row[j] = phasor(2.0 * kPi * t.doppler_hz * j * tau);
    m.values.noalias() += t.attenuation * delay_col * doppler_row;
  }
  return m;
}

Eigen::MatrixXcd synthesize_time_oracle(const Scene& scene, const Waveform& waveform,
                                        const RadarParams& params, SpilloverPolicy policy) {
  const int samples = params.pri_samples();
  const int pulses = params.pulses;
  const double tau = params.pri_s;
  const double step = tau / samples;
  Eigen::MatrixXcd blocks = Eigen::MatrixXcd::Zero(samples, pulses);

  for (const Target& t : scene.targets) {
    check_target(t, params);
    if (policy == SpilloverPolicy::Reject && t.delay_s + waveform.pulse_width() > tau)
      throw DelayOverrun("echo at delay " + std::to_string(t.delay_s) +
                         " s leaves the PRI window");
    if (t.attenuation == Complex{0.0, 0.0}) continue;
    // Pulse envelope within the window, identical across PRIs.
    Eigen::VectorXcd envelope(samples);
    for (int l = 0; l < samples; ++l) {
      const double local = l * step;
      const double offset = local - t.delay_s;
      Complex h = waveform.sample_time(offset);
      if (offset < 0.0 && policy == SpilloverPolicy::Wrap)
        h = waveform.sample_time(offset + tau);  // tail of the previous pulse
      envelope[l] = h * phasor(2.0 * kPi * t.doppler_hz * local);
    }
    for (int p = 0; p < pulses; ++p)
      blocks.col(p) += t.attenuation * phasor(2.0 * kPi * t.doppler_hz * p * tau) * envelope;
  }
  return blocks;
}

MeasurementMatrix fourier_extract(const Eigen::Ref<const Eigen::MatrixXcd>& time_blocks,
                                  const SamplingIndexSet& sampling, const Waveform& waveform,
                                  const RadarParams& params) {
  const int samples = static_cast<int>(time_blocks.rows());
  if (samples != params.pri_samples())
    throw OutOfRange("fourier_extract: block length disagrees with tau * B");
  const Eigen::VectorXcd c = sampled_coefficients(sampling, waveform);

  MeasurementMatrix m;
  m.sampling = sampling;
  m.values.resize(sampling.size(), time_blocks.cols());
  for (int i = 0; i < sampling.size(); ++i) {
    int bin = sampling.indices[static_cast<std::size_t>(i)] % samples;
    if (bin < 0) bin += samples;
    Eigen::VectorXcd kernel(samples);
    for (int l = 0; l < samples; ++l)
      kernel[l] = phasor(-2.0 * kPi * static_cast<double>(bin) * l / samples);
    // c_k = (1/L) DFT_k, then Ybar = tau Y / H(omega_k) = Y / c_k.
    m.values.row(i) = (kernel.transpose() * time_blocks) / (static_cast<double>(samples) * c[i]);
  }
  return m;
}

double noise_sigma_sq(const Waveform& waveform, const RadarParams& params, double snr_db,
                      double ref_amplitude) {
  const double step = 1.0 / params.bandwidth_hz;
  const int pulse_samples =
      static_cast<int>(std::lround(waveform.pulse_width() * params.bandwidth_hz));
  if (pulse_samples < 1)
    throw NonPositiveParameter("noise_sigma_sq: pulse shorter than one Nyquist sample");
  double energy = 0.0;
  for (int l = 0; l < pulse_samples; ++l)
    energy += std::norm(ref_amplitude * waveform.sample_time(l * step));
  const double snr = std::pow(10.0, snr_db / 10.0);
  return energy / (pulse_samples * snr);
}

void add_noise(Eigen::MatrixXcd& time_blocks, const NoiseSpec& noise, const Waveform& waveform,
               const RadarParams& params) {
  if (noise.noiseless()) return;
  const double sigma = std::sqrt(noise_sigma_sq(waveform, params, noise.snr_db));
  Rng rng(noise.seed);
  for (Eigen::Index p = 0; p < time_blocks.cols(); ++p)
    for (Eigen::Index l = 0; l < time_blocks.rows(); ++l)
      time_blocks(l, p) += sigma * rng.gaussian();
}

void add_noise(MeasurementMatrix& measurement, const NoiseSpec& noise, const Waveform& waveform,
               const RadarParams& params) {
  if (noise.noiseless()) return;
  const double sigma_sq = noise_sigma_sq(waveform, params, noise.snr_db);
  const Eigen::VectorXcd c = sampled_coefficients(measurement.sampling, waveform);
  const int samples = params.pri_samples();
  Rng rng(noise.seed);
  for (Eigen::Index p = 0; p < measurement.values.cols(); ++p) {
    for (Eigen::Index k = 0; k < measurement.values.rows(); ++k) {
      const double var = sigma_sq / (samples * std::norm(c[k]));
      measurement.values(k, p) += std::sqrt(var) * rng.gaussian();
    }
  }
  measurement.noisy = true;
}

}  // namespace dsradar
