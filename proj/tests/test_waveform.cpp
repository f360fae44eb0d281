#include <doctest.h>

#include <cmath>
#include <complex>

#include "dsradar/waveform.hpp"

using namespace dsradar;
using Complex = std::complex<double>;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Simpson-rule quadrature oracle, independent of the closed forms under test.
// Integrates over the pulse support (the integrand vanishes beyond), with the
// right endpoint nudged inside so the support cutoff is not sampled.
Complex quad_fourier_coefficient(const Waveform& w, int k, int panels = 20001) {
  const double tau = w.pri();
  const double width = w.pulse_width();
  const double h = width / (panels - 1);
  Complex acc = 0.0;
  for (int i = 0; i < panels; ++i) {
    const double t = std::min(i * h, width * (1.0 - 1e-14));
    const double weight = (i == 0 || i == panels - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    acc += weight * w.sample_time(t) * std::exp(Complex{0.0, -2.0 * kPi * k * t / tau});
  }
  return acc * h / 3.0 / tau;
}

double average_power(const Waveform& w, int panels = 40001) {
  const double width = w.pulse_width();
  const double h = width / panels;
  double acc = 0.0;
  for (int i = 0; i < panels; ++i) acc += std::norm(w.sample_time((i + 0.5) * h));
  return acc * h / width;
}

}  // namespace

TEST_CASE("unit power normalization") {
  const double tau = 10e-6;
  const DifferenceSet ds = catalog("91-10-1");
  const Waveform waves[] = {
      Waveform::rect(tau, tau / 5.0),
      Waveform::lfm(tau, tau / 10.0, 9.1e6),
      Waveform::dsfcm(tau, ds),
      Waveform::dsfcm(tau, ds, tau / 3.0),
  };
  for (const Waveform& w : waves) CHECK(average_power(w) == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("sample_time") {
  const double tau = 10e-6;
  SUBCASE("rect is constant on its support and zero outside") {
    const Waveform w = Waveform::rect(tau, tau / 4.0);
    CHECK(w.sample_time(tau / 8.0) == Complex{1.0, 0.0});
    CHECK(w.sample_time(-1e-9) == Complex{0.0, 0.0});
    CHECK(w.sample_time(tau / 4.0) == Complex{0.0, 0.0});
  }
  SUBCASE("dsfcm phasors align at t = 0") {
    const Waveform w = Waveform::dsfcm(tau, catalog("91-10-1"));
    // (1/K) sum of K unit phasors = 1 before the power normalization
    CHECK(std::abs(w.sample_time(0.0) - Complex{w.amplitude_scale(), 0.0}) < 1e-12);
    CHECK(w.amplitude_scale() == doctest::Approx(std::sqrt(10.0)).epsilon(1e-12));
  }
  SUBCASE("single-tone dsfcm is constant 1") {
    const Waveform w = Waveform::dsfcm_tones(tau, {0});
    CHECK(std::abs(w.sample_time(0.3 * tau) - Complex{1.0, 0.0}) < 1e-12);
    CHECK(std::abs(w.sample_time(0.9 * tau) - Complex{1.0, 0.0}) < 1e-12);
  }
  SUBCASE("lfm sweeps its band") {
    const double width = tau / 10.0;
    const Waveform w = Waveform::lfm(tau, width, 9.1e6);
    // numerical instantaneous frequency at the pulse center is ~0
    const double dt = 1e-12;
    const Complex a = w.sample_time(width / 2.0 - dt);
    const Complex b = w.sample_time(width / 2.0 + dt);
    const double freq = std::arg(b / a) / (2.0 * kPi * 2.0 * dt);
    CHECK(std::abs(freq) < 0.01 * 9.1e6);
  }
}

TEST_CASE("fourier coefficients") {
  const double tau = 10e-6;
  SUBCASE("rect with full-width pulse has a single coefficient") {
    const Waveform w = Waveform::rect(tau, tau);
    CHECK(std::abs(w.fourier_coefficient(0) - Complex{1.0, 0.0}) < 1e-12);
    for (int k : {-3, -1, 1, 2, 40}) CHECK(std::abs(w.fourier_coefficient(k)) == 0.0);
  }
  SUBCASE("full-width dsfcm puts equal magnitude on its tones and zero elsewhere") {
    const DifferenceSet ds = catalog("91-10-1");
    const Waveform w = Waveform::dsfcm(tau, ds);
    const auto shifted = equivalent_shift(ds);
    for (int tone : shifted)
      CHECK(std::abs(w.fourier_coefficient(tone)) ==
            doctest::Approx(1.0 / std::sqrt(10.0)).epsilon(1e-12));
    const FourierRange range = fourier_range(tau, 9.1e6);
    int nonzero = 0;
    for (int k = range.lo; k <= range.hi; ++k)
      if (std::abs(w.fourier_coefficient(k)) > 1e-10) ++nonzero;
    CHECK(nonzero == 10);
  }
  SUBCASE("closed forms agree with quadrature") {
    const Waveform rect = Waveform::rect(tau, tau / 3.0);
    const Waveform comb = Waveform::dsfcm_tones(tau, {-2, 0, 3}, 0.7 * tau);
    for (int k : {-5, -1, 0, 1, 2, 7}) {
      CHECK(std::abs(rect.fourier_coefficient(k) - quad_fourier_coefficient(rect, k)) < 1e-8);
      CHECK(std::abs(comb.fourier_coefficient(k) - quad_fourier_coefficient(comb, k)) < 1e-8);
    }
    const Waveform chirp = Waveform::lfm(tau, tau / 8.0, 2e6);
    for (int k : {-3, 0, 4})
      CHECK(std::abs(chirp.fourier_coefficient(k) - quad_fourier_coefficient(chirp, k)) < 1e-8);
  }
  SUBCASE("range evaluation") {
    const Waveform w = Waveform::rect(tau, tau);
    const Eigen::VectorXcd c = w.fourier_coefficients({-2, 2});
    REQUIRE(c.size() == 5);
    CHECK(std::abs(c[2] - Complex{1.0, 0.0}) < 1e-12);
  }
}

TEST_CASE("bandwidth estimate") {
  const double tau = 10e-6;
  SUBCASE("(2863,54,1)") {
    const Waveform w = Waveform::dsfcm(tau, catalog("2863-54-1"));
    CHECK(w.bandwidth_estimate() == doctest::Approx(279.2e6).epsilon(1e-12));
  }
  SUBCASE("(91,10,1)") {
    const Waveform w = Waveform::dsfcm(tau, catalog("91-10-1"));
    CHECK(w.bandwidth_estimate() == doctest::Approx(6.9e6).epsilon(1e-12));
  }
  SUBCASE("degenerate single tone") {
    CHECK(Waveform::dsfcm_tones(tau, {0}).bandwidth_estimate() == 0.0);
  }
  SUBCASE("wrong kind") {
    CHECK_THROWS_AS(Waveform::rect(tau, tau).bandwidth_estimate(), WrongKind);
  }
}

TEST_CASE("power spectrum") {
  const double tau = 10e-6;
  SUBCASE("rect main lobe at DC") {
    const double width = tau / 10.0;
    const Waveform w = Waveform::rect(tau, width);
    CHECK(std::norm(w.ctft(0.0)) == doctest::Approx(width * width).epsilon(1e-12));
    CHECK(std::norm(w.ctft(1.0 / width)) < 1e-18);  // first null
    CHECK(std::norm(w.ctft(0.5 / width)) < std::norm(w.ctft(0.0)));
  }
  SUBCASE("dsfcm concentrates on its tone comb") {
    const DifferenceSet ds = catalog("91-10-1");
    const Waveform w = Waveform::dsfcm(tau, ds);
    const auto shifted = equivalent_shift(ds);
    const double on_tone = std::norm(w.ctft(shifted[3] / tau));
    const double off_tone = std::norm(w.ctft((shifted[3] + 0.5) / tau));
    CHECK(on_tone > 100.0 * off_tone);
  }
  SUBCASE("parseval: integrated spectrum equals the pulse energy within 1%") {
    const double width = tau / 10.0;
    const Waveform waves[] = {Waveform::rect(tau, width),
                              Waveform::lfm(tau, width, 3e6),
                              Waveform::dsfcm_tones(tau, {-3, 0, 1, 5}, width)};
    for (const Waveform& w : waves) {
      const double span = 2.0 * 40.0 / width;  // wide enough for the sinc tails
      const int points = 40001;
      const double df = span / points;
      double energy = 0.0;
      for (int i = 0; i < points; ++i) {
        const double f = -span / 2.0 + (i + 0.5) * df;
        energy += std::norm(w.ctft(f));
      }
      energy *= df;
      CHECK(energy == doctest::Approx(width).epsilon(0.01));
    }
  }
  SUBCASE("dsfcm energy fraction on its bins dominates rect") {
    const DifferenceSet ds = catalog("91-10-1");
    const double width = tau / 2.0;
    const Waveform comb = Waveform::dsfcm(tau, ds, width);
    const Waveform rect = Waveform::rect(tau, width);
    const auto shifted = equivalent_shift(ds);
    double comb_on = 0.0, comb_total = 0.0, rect_on = 0.0, rect_total = 0.0;
    const FourierRange range = fourier_range(tau, 9.1e6);
    for (int k = range.lo; k <= range.hi; ++k) {
      const bool on = std::find(shifted.begin(), shifted.end(), k) != shifted.end();
      const double c = std::norm(comb.fourier_coefficient(k));
      const double r = std::norm(rect.fourier_coefficient(k));
      comb_total += c;
      rect_total += r;
      if (on) {
        comb_on += c;
        rect_on += r;
      }
    }
    CHECK(comb_on / comb_total > rect_on / rect_total);
    CHECK(comb_on / comb_total > 0.5);
  }
}
