#include "dsradar/waveform.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace dsradar {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

// D(x) = (e^{j 2 pi x} - 1) / (j 2 pi x); D(0) = 1, D(other integers) = 0.
Complex phase_ramp_mean(double x) {
  if (x == std::round(x)) return x == 0.0 ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
  const double ax = std::abs(x);
  if (ax < 1e-6) {
    // series in j 2 pi x, keeps precision where the direct form cancels
    return {1.0 - (2.0 / 3.0) * kPi * kPi * x * x, kPi * x - kPi * kPi * kPi * x * x * x / 3.0};
  }
  const Complex num{std::cos(2.0 * kPi * x) - 1.0, std::sin(2.0 * kPi * x)};
  return num / Complex{0.0, 2.0 * kPi * x};
}

// Adaptive Simpson on a complex integrand.
Complex simpson_step(double a, double b, Complex fa, Complex fm, Complex fb) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
Complex adaptive_simpson(const F& f, double a, double b, Complex fa, Complex fm, Complex fb,
                         Complex whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const Complex flm = f(lm);
  const Complex frm = f(rm);
  const Complex left = simpson_step(a, m, fa, flm, fm);
  const Complex right = simpson_step(m, b, fm, frm, fb);
  const Complex delta = left + right - whole;
  if (std::abs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) throw QuadratureFailure("adaptive_simpson: tolerance not reached");
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

template <typename F>
Complex integrate(const F& f, double a, double b, double tol) {
  // Seed with enough panels that the oscillation cannot hide from the
  // first Simpson estimate.
  const int panels = 64;
  Complex total = 0.0;
  const double h = (b - a) / panels;
  for (int i = 0; i < panels; ++i) {
    const double lo = a + i * h;
    const double hi = lo + h;
    const double mid = 0.5 * (lo + hi);
    const Complex fa = f(lo), fm = f(mid), fb = f(hi);
    total += adaptive_simpson(f, lo, hi, fa, fm, fb, simpson_step(lo, hi, fa, fm, fb), tol, 40);
  }
  return total;
}

}  // namespace

std::string waveform_kind_name(WaveformKind kind) {
  switch (kind) {
    case WaveformKind::Rect: return "rect";
    case WaveformKind::Lfm: return "lfm";
    case WaveformKind::Dsfcm: return "dsfcm";
  }
  return "?";
}

WaveformKind parse_waveform_kind(const std::string& name) {
  if (name == "rect") return WaveformKind::Rect;
  if (name == "lfm") return WaveformKind::Lfm;
  if (name == "dsfcm") return WaveformKind::Dsfcm;
  throw ConfigError("unknown waveform kind '" + name + "'");
}

Waveform Waveform::rect(double pri_s, double pulse_width_s) {
  if (!(pri_s > 0.0) || !(pulse_width_s > 0.0) || pulse_width_s > pri_s)
    throw NonPositiveParameter("rect waveform: need 0 < T_p <= tau");
  Waveform w;
  w.kind_ = WaveformKind::Rect;
  w.pri_s_ = pri_s;
  w.pulse_width_s_ = pulse_width_s;
  w.amplitude_ = 1.0;
  return w;
}

Waveform Waveform::lfm(double pri_s, double pulse_width_s, double bandwidth_hz) {
  if (!(pri_s > 0.0) || !(pulse_width_s > 0.0) || pulse_width_s > pri_s ||
      !(bandwidth_hz > 0.0))
    throw NonPositiveParameter("lfm waveform: need 0 < T_p <= tau and B > 0");
  Waveform w;
  w.kind_ = WaveformKind::Lfm;
  w.pri_s_ = pri_s;
  w.pulse_width_s_ = pulse_width_s;
  w.sweep_hz_ = bandwidth_hz;
  w.amplitude_ = 1.0;
  return w;
}

Waveform Waveform::dsfcm_tones(double pri_s, std::vector<int> tones, double pulse_width_s) {
  if (!(pri_s > 0.0)) throw NonPositiveParameter("dsfcm waveform: pri must be positive");
  if (pulse_width_s == 0.0) pulse_width_s = pri_s;
  if (!(pulse_width_s > 0.0) || pulse_width_s > pri_s)
    throw NonPositiveParameter("dsfcm waveform: need 0 < T_p <= tau");
  if (tones.empty()) throw NonPositiveParameter("dsfcm waveform: empty tone set");
  std::sort(tones.begin(), tones.end());

  Waveform w;
  w.kind_ = WaveformKind::Dsfcm;
  w.pri_s_ = pri_s;
  w.pulse_width_s_ = pulse_width_s;
  w.tones_ = std::move(tones);

  // Average power of (1/K) sum_k e^{j 2 pi k t / tau} over [0, T_p):
  // (1/K^2) sum_{k,k'} D((k - k') T_p / tau).
  const double ratio = pulse_width_s / pri_s;
  const std::size_t k = w.tones_.size();
  double power = 0.0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      power += phase_ramp_mean((w.tones_[i] - w.tones_[j]) * ratio).real();
  power /= static_cast<double>(k * k);
  w.amplitude_ = 1.0 / std::sqrt(power);
  return w;
}

Waveform Waveform::dsfcm(double pri_s, const DifferenceSet& ds, double pulse_width_s) {
  return dsfcm_tones(pri_s, equivalent_shift(ds), pulse_width_s);
}

std::complex<double> Waveform::sample_time(double t) const {
  if (t < 0.0 || t >= pulse_width_s_) return 0.0;
  switch (kind_) {
    case WaveformKind::Rect:
      return amplitude_;
    case WaveformKind::Lfm: {
      // instantaneous frequency sweeps -B/2 .. +B/2 across the pulse
      const double phase = 2.0 * kPi * (-0.5 * sweep_hz_ * t +
                                        0.5 * sweep_hz_ / pulse_width_s_ * t * t);
      return amplitude_ * Complex{std::cos(phase), std::sin(phase)};
    }
    case WaveformKind::Dsfcm: {
      Complex sum = 0.0;
      for (int tone : tones_) {
        const double phase = 2.0 * kPi * tone * t / pri_s_;
        sum += Complex{std::cos(phase), std::sin(phase)};
      }
      return amplitude_ * sum / static_cast<double>(tones_.size());
    }
  }
  return 0.0;
}

std::complex<double> Waveform::fourier_coefficient(int k) const {
  const double ratio = pulse_width_s_ / pri_s_;
  switch (kind_) {
    case WaveformKind::Rect:
      return amplitude_ * ratio * phase_ramp_mean(-k * ratio);
    case WaveformKind::Dsfcm: {
      Complex sum = 0.0;
      for (int tone : tones_) sum += phase_ramp_mean((tone - k) * ratio);
      return amplitude_ * ratio * sum / static_cast<double>(tones_.size());
    }
    case WaveformKind::Lfm:
      return lfm_transform(2.0 * kPi * k / pri_s_) / pri_s_;
  }
  return 0.0;
}

Eigen::VectorXcd Waveform::fourier_coefficients(const FourierRange& range) const {
  Eigen::VectorXcd c(range.size());
  for (int k = range.lo; k <= range.hi; ++k) c[k - range.lo] = fourier_coefficient(k);
  return c;
}

std::complex<double> Waveform::ctft(double freq_hz) const {
  switch (kind_) {
    case WaveformKind::Rect:
      return amplitude_ * pulse_width_s_ * phase_ramp_mean(-freq_hz * pulse_width_s_);
    case WaveformKind::Dsfcm: {
      Complex sum = 0.0;
      for (int tone : tones_)
        sum += phase_ramp_mean((tone / pri_s_ - freq_hz) * pulse_width_s_);
      return amplitude_ * pulse_width_s_ * sum / static_cast<double>(tones_.size());
    }
    case WaveformKind::Lfm:
      return lfm_transform(2.0 * kPi * freq_hz);
  }
  return 0.0;
}

Eigen::VectorXd Waveform::power_spectrum(const Eigen::Ref<const Eigen::VectorXd>& freq_hz) const {
  Eigen::VectorXd psd(freq_hz.size());
  for (Eigen::Index i = 0; i < freq_hz.size(); ++i) psd[i] = std::norm(ctft(freq_hz[i]));
  return psd;
}

// int_0^Tp h(t) e^{-j omega t} dt with the chirp phase evaluated directly,
// keeping the integrand smooth on the closed interval.
std::complex<double> Waveform::lfm_transform(double omega) const {
  const auto f = [&](double t) {
    const double phase = 2.0 * kPi * (-0.5 * sweep_hz_ * t +
                                      0.5 * sweep_hz_ / pulse_width_s_ * t * t) -
                         omega * t;
    return Complex{std::cos(phase), std::sin(phase)};
  };
  return amplitude_ * integrate(f, 0.0, pulse_width_s_, 1e-12 * pulse_width_s_);
}

double Waveform::bandwidth_estimate() const {
  if (kind_ != WaveformKind::Dsfcm)
    throw WrongKind("bandwidth_estimate: defined for the DSFCM waveform");
  return static_cast<double>(tones_.back() - tones_.front()) / pri_s_;
}

}  // namespace dsradar
