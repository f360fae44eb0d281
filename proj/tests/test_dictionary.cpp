#include <doctest.h>

#include <cmath>
#include <complex>

#include "dsradar/dictionary.hpp"
#include "dsradar/rng.hpp"

using namespace dsradar;
using Complex = std::complex<double>;

namespace {

FourierRange centered_range(int n) { return {-(n + 1) / 2, n / 2}; }

}  // namespace

TEST_CASE("fourier_range") {
  SUBCASE("10us x 300MHz") {
    const FourierRange r = fourier_range(10e-6, 300e6);
    CHECK(r.lo == -1500);
    CHECK(r.hi == 1500);
  }
  SUBCASE("1s x 2Hz") {
    const FourierRange r = fourier_range(1.0, 2.0);
    CHECK(r.lo == -1);
    CHECK(r.hi == 1);
    CHECK(r.size() == 3);
  }
  SUBCASE("10us x 9.1MHz holds the shifted (91,10,1) indices") {
    const FourierRange r = fourier_range(10e-6, 9.1e6);
    CHECK(r.lo == -46);
    CHECK(r.hi == 45);
    for (int idx : equivalent_shift(catalog("91-10-1"))) CHECK(r.contains(idx));
  }
  SUBCASE("invalid parameters") {
    CHECK_THROWS_AS(fourier_range(0.0, 1.0), NonPositiveParameter);
    CHECK_THROWS_AS(fourier_range(1.0, -1.0), NonPositiveParameter);
  }
}

TEST_CASE("build_sampling") {
  const FourierRange range{-2, 2};
  SUBCASE("consecutive centered block") {
    const SamplingIndexSet s = consecutive_sampling(4, range, 5);
    CHECK(s.indices == std::vector<int>{-2, -1, 0, 1});
  }
  SUBCASE("consecutive full range") {
    CHECK(consecutive_sampling(5, range, 5).indices == std::vector<int>{-2, -1, 0, 1, 2});
    CHECK_THROWS_AS(consecutive_sampling(6, range, 6), TooManyIndices);
  }
  SUBCASE("ds sampling equals the shifted catalog indices") {
    const DifferenceSet ds = catalog("91-10-1");
    const SamplingIndexSet s = ds_sampling(ds, centered_range(91));
    CHECK(s.indices == equivalent_shift(ds));
    CHECK(s.grid_order == 91);
  }
  SUBCASE("ds indices must fit the range") {
    CHECK_THROWS_AS(ds_sampling(catalog("91-10-1"), FourierRange{-10, 10}), DSOutOfRange);
  }
  SUBCASE("random draws are reproducible and distinct") {
    const FourierRange wide{-500, 500};
    const SamplingIndexSet a = random_sampling(54, wide, 993, 42);
    const SamplingIndexSet b = random_sampling(54, wide, 993, 42);
    const SamplingIndexSet c = random_sampling(54, wide, 993, 43);
    CHECK(a.indices == b.indices);
    CHECK(a.indices != c.indices);
    CHECK(a.indices.size() == 54);
    for (std::size_t i = 1; i < a.indices.size(); ++i) CHECK(a.indices[i] > a.indices[i - 1]);
    for (int idx : a.indices) CHECK(wide.contains(idx));
  }
}

TEST_CASE("delay dictionary") {
  SUBCASE("full consecutive K=N=4 is the DFT matrix with zero coherence") {
    const SamplingIndexSet s = consecutive_sampling(4, {-2, 1}, 4);
    const Eigen::MatrixXcd phi = delay_dictionary(s);
    CHECK(phi.rows() == 4);
    CHECK(phi.cols() == 4);
    const CoherenceReport report = coherence(phi);
    CHECK(report.mu == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("entry formula") {
    // kappa = 1, second grid column, N = 4 -> exp(-j pi / 2) = -j
    SamplingIndexSet s;
    s.scheme = Scheme::Consecutive;
    s.indices = {0, 1};
    s.grid_order = 4;
    const Eigen::MatrixXcd phi = delay_dictionary(s);
    CHECK(phi(1, 1).real() == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(phi(1, 1).imag() == doctest::Approx(-1.0).epsilon(1e-15));
  }
  SUBCASE("unit modulus entries, column norm sqrt(K)") {
    const SamplingIndexSet s = ds_sampling(catalog("91-10-1"), centered_range(91));
    const Eigen::MatrixXcd phi = delay_dictionary(s);
    for (Eigen::Index i = 0; i < phi.rows(); ++i)
      for (Eigen::Index j = 0; j < std::min<Eigen::Index>(phi.cols(), 7); ++j)
        CHECK(std::abs(phi(i, j)) == doctest::Approx(1.0).epsilon(1e-12));
    for (Eigen::Index j = 0; j < phi.cols(); ++j)
      CHECK(phi.col(j).squaredNorm() == doctest::Approx(10.0).epsilon(1e-12));
  }
}

TEST_CASE("doppler dictionary") {
  SUBCASE("square case is orthogonal") {
    const Eigen::MatrixXcd psi = doppler_dictionary(8, 8, 10e-6);
    const Eigen::MatrixXcd gram = psi.adjoint() * psi;
    for (Eigen::Index i = 0; i < 8; ++i)
      for (Eigen::Index j = 0; j < 8; ++j)
        CHECK(std::abs(gram(i, j) - (i == j ? Complex{8.0, 0.0} : Complex{0.0, 0.0})) < 1e-10);
  }
  SUBCASE("zero-frequency column is all ones") {
    const int m_grids = 8;
    const double tau = 10e-6;
    // f_m = 0 at m = M/2
    const Eigen::MatrixXcd psi = doppler_dictionary(5, m_grids, tau);
    CHECK(doppler_grid_freq(m_grids / 2, m_grids, tau) == doctest::Approx(0.0));
    for (Eigen::Index p = 0; p < 5; ++p)
      CHECK(std::abs(psi(p, m_grids / 2) - Complex{1.0, 0.0}) < 1e-14);
  }
  SUBCASE("grid step") {
    const double tau = 10e-6;
    const double step = doppler_grid_freq(1, 128, tau) - doppler_grid_freq(0, 128, tau);
    CHECK(step == doctest::Approx(781.25));
    CHECK(doppler_grid_freq(0, 128, tau) == doctest::Approx(-50000.0));
    const Eigen::MatrixXcd psi = doppler_dictionary(20, 128, tau);
    CHECK(psi.rows() == 20);
    CHECK(psi.cols() == 128);
    for (Eigen::Index j = 0; j < psi.cols(); ++j)
      CHECK(psi.col(j).squaredNorm() == doctest::Approx(20.0).epsilon(1e-12));
  }
}

TEST_CASE("welch bound") {
  CHECK(welch_bound(91, 10) == doctest::Approx(0.3).epsilon(1e-14));
  CHECK(welch_bound(993, 32) == doctest::Approx(std::sqrt(31.0) / 32.0).epsilon(1e-14));
  CHECK(welch_bound(993, 32) == doctest::Approx(0.173993).epsilon(1e-5));
  CHECK(welch_bound(64, 64) == 0.0);
}

TEST_CASE("coherence") {
  SUBCASE("DS sampling reaches the Welch bound with a flat profile") {
    const SamplingIndexSet s = ds_sampling(catalog("91-10-1"), centered_range(91));
    const CoherenceReport report = coherence(s);
    CHECK(report.mu == doctest::Approx(0.3).epsilon(1e-12));
    CHECK(report.mu_profile.size() == 90);
    CHECK(report.mu_profile.maxCoeff() - report.mu_profile.minCoeff() < 1e-12);
  }
  SUBCASE("shortcut equals brute force on small instances") {
    Rng rng(11);
    for (int trial = 0; trial < 8; ++trial) {
      const int n = static_cast<int>(rng.uniform_int(20, 200));
      const int k = static_cast<int>(rng.uniform_int(3, std::min(n, 24)));
      const SamplingIndexSet s = random_sampling(k, centered_range(n), n, rng.bits());
      const CoherenceReport fast = coherence(s);
      const CoherenceReport brute = coherence(delay_dictionary(s));
      CHECK(fast.mu == doctest::Approx(brute.mu).epsilon(1e-10));
      for (Eigen::Index u = 0; u < fast.mu_profile.size(); ++u)
        CHECK(std::abs(fast.mu_profile[u] - brute.mu_profile[u]) < 1e-10);
    }
  }
  SUBCASE("consecutive profile matches the closed form everywhere") {
    const int n = 2863;
    const int k = 54;
    const SamplingIndexSet s = consecutive_sampling(k, centered_range(n), n);
    const CoherenceReport report = coherence(s);
    for (int u = 1; u < n; ++u)
      CHECK(std::abs(report.mu_profile[u - 1] - consecutive_mu_closed_form(u, n, k)) < 1e-10);
    // maximized by adjacent columns
    CHECK(report.mu == doctest::Approx(report.mu_profile[0]).epsilon(1e-12));
  }
  SUBCASE("welch inequality holds for any sampling") {
    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
      const int n = static_cast<int>(rng.uniform_int(10, 300));
      const int k = static_cast<int>(rng.uniform_int(2, std::min(n, 40)));
      const SamplingIndexSet s = random_sampling(k, centered_range(n), n, rng.bits());
      const CoherenceReport report = coherence(s);
      CHECK(report.mu >= report.welch - 1e-10);
    }
  }
  SUBCASE("random sampling almost always exceeds the DS coherence") {
    const DifferenceSet ds = catalog("91-10-1");
    const double ds_mu = coherence(ds_sampling(ds, centered_range(91))).mu;
    int not_worse = 0;
    const int draws = 500;
    for (int t = 0; t < draws; ++t) {
      const SamplingIndexSet s = random_sampling(10, centered_range(91), 91, derive_seed(3, t));
      if (coherence(s).mu <= ds_mu + 1e-12) ++not_worse;
    }
    CHECK(not_worse <= draws / 100);
  }
  SUBCASE("zero column rejected") {
    Eigen::MatrixXcd bad = Eigen::MatrixXcd::Ones(3, 3);
    bad.col(1).setZero();
    CHECK_THROWS_AS(coherence(bad), ZeroColumn);
  }
}

TEST_CASE("kronecker dictionary") {
  SUBCASE("2x2 blocks") {
    Eigen::MatrixXcd a(2, 2), b(2, 2);
    a << Complex{1, 0}, Complex{2, 0}, Complex{3, 0}, Complex{4, 0};
    b << Complex{0, 1}, Complex{1, 1}, Complex{1, -1}, Complex{0, -1};
    const Eigen::MatrixXcd kron = kronecker_dictionary(a, b);
    REQUIRE(kron.rows() == 4);
    REQUIRE(kron.cols() == 4);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(std::abs(kron(i, j) - a(0, 0) * b(i, j)) < 1e-15);
    CHECK(std::abs(kron(2, 3) - a(1, 1) * b(0, 1)) < 1e-15);
  }
  SUBCASE("identity kron identity") {
    const Eigen::MatrixXcd eye = Eigen::MatrixXcd::Identity(3, 3);
    CHECK((kronecker_dictionary(eye, eye) - Eigen::MatrixXcd::Identity(9, 9)).norm() < 1e-15);
  }
  SUBCASE("column count at the full scale and the memory guard") {
    // (2863,54,1) with M = 128 grids: 2863 * 128 = 366464 atoms
    CHECK(2863LL * 128 == 366464);
    const Eigen::MatrixXcd big = Eigen::MatrixXcd::Ones(54, 2863);
    const Eigen::MatrixXcd psi = Eigen::MatrixXcd::Ones(20, 128);
    CHECK_THROWS_AS(kronecker_dictionary(big, psi), DimensionOverflow);
  }
}

TEST_CASE("sparsity bounds") {
  CHECK(sparsity_bound(54) == 4);
  CHECK(sparsity_bound(10) == 2);
  CHECK(sparsity_bound(32) == 3);
  CHECK(df_capacity(20, 54) == 83);
  CHECK(df_capacity(20, 10) == 41);
}
