#include "dsradar/dictionary.hpp"

#include <cmath>
#include <numbers>

namespace dsradar {

namespace {

constexpr double kPi = std::numbers::pi;

// exp(-j 2 pi (a b mod n) / n) with the product reduced in integers.
std::complex<double> unit_root(long long a, long long b, long long n) {
  long long t = (a * b) % n;
  if (t < 0) t += n;
  const double angle = -2.0 * kPi * static_cast<double>(t) / static_cast<double>(n);
  return {std::cos(angle), std::sin(angle)};
}

int resolve_grid_order(const SamplingIndexSet& sampling, int grid_order) {
  const int n = grid_order > 0 ? grid_order : sampling.grid_order;
  if (n < sampling.size())
    throw NonPositiveParameter("delay dictionary: grid order below the sample count");
  return n;
}

}  // namespace

Eigen::MatrixXcd delay_dictionary(const SamplingIndexSet& sampling, int grid_order) {
  const int n = resolve_grid_order(sampling, grid_order);
  const int k = sampling.size();
  Eigen::MatrixXcd phi(k, n);
  for (int row = 0; row < k; ++row)
    for (int col = 0; col < n; ++col)
      phi(row, col) = unit_root(sampling.indices[static_cast<std::size_t>(row)], col, n);
  return phi;
}

double doppler_grid_freq(int m, int doppler_grids, double pri_s) {
  return -1.0 / (2.0 * pri_s) +
         static_cast<double>(m) / (static_cast<double>(doppler_grids) * pri_s);
}

Eigen::MatrixXcd doppler_dictionary(int pulses, int doppler_grids, [[maybe_unused]] double pri_s) {
  // f_m p tau = p (m/M - 1/2): the PRI cancels on the uniform grid
  if (pulses < 1 || doppler_grids < 1)
    throw NonPositiveParameter("doppler_dictionary: P and M must be >= 1");
  Eigen::MatrixXcd psi(pulses, doppler_grids);
  for (int m = 0; m < doppler_grids; ++m) {
    // f_m * p * tau = (-1/2 + m/M) * p; reduce the rational part exactly.
    for (int p = 0; p < pulses; ++p) {
      const long long num = (2LL * m - doppler_grids) * p;
      const long long den = 2LL * doppler_grids;
      long long t = num % den;
      if (t < 0) t += den;
      const double angle = 2.0 * kPi * static_cast<double>(t) / static_cast<double>(den);
      psi(p, m) = {std::cos(angle), std::sin(angle)};
    }
  }
  return psi;
}

double welch_bound(int n, int k) {
  if (n < 2 || k < 1 || k > n)
    throw NonPositiveParameter("welch_bound: need 1 <= K <= N, N >= 2");
  return std::sqrt(static_cast<double>(n - k) /
                   (static_cast<double>(k) * static_cast<double>(n - 1)));
}

CoherenceReport coherence(const SamplingIndexSet& sampling, int grid_order) {
  const int n = resolve_grid_order(sampling, grid_order);
  const int k = sampling.size();
  CoherenceReport report;
  report.welch = welch_bound(n, k);
  report.mu_profile.resize(n - 1);
  for (int u = 1; u < n; ++u) {
    std::complex<double> sum = 0.0;
    for (int kappa : sampling.indices) sum += unit_root(kappa, u, n);
    report.mu_profile[u - 1] = std::abs(sum) / static_cast<double>(k);
  }
  report.mu = report.mu_profile.maxCoeff();
  return report;
}

CoherenceReport coherence(const Eigen::Ref<const Eigen::MatrixXcd>& dictionary) {
  const Eigen::Index n = dictionary.cols();
  if (n < 2) throw NonPositiveParameter("coherence: need at least two columns");
  Eigen::VectorXd norms = dictionary.colwise().norm();
  for (Eigen::Index j = 0; j < n; ++j)
    if (norms[j] == 0.0) throw ZeroColumn("coherence: column " + std::to_string(j) + " is zero");

  CoherenceReport report;
  report.welch = welch_bound(static_cast<int>(n), static_cast<int>(dictionary.rows()));
  report.mu_profile = Eigen::VectorXd::Zero(n - 1);
  const Eigen::MatrixXcd gram = dictionary.adjoint() * dictionary;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const double cross = std::abs(gram(i, j)) / (norms[i] * norms[j]);
      double& slot = report.mu_profile[j - i - 1];
      if (cross > slot) slot = cross;
    }
  }
  report.mu = report.mu_profile.maxCoeff();
  return report;
}

double consecutive_mu_closed_form(int u, int n, int k) {
  // sin(pi x) with x reduced modulo 2 in integers to keep large u K exact.
  const auto sin_pi_frac = [](long long num, long long den) {
    long long t = num % (2 * den);
    if (t < 0) t += 2 * den;
    return std::sin(kPi * static_cast<double>(t) / static_cast<double>(den));
  };
  const double denom = sin_pi_frac(u, n);
  if (denom == 0.0) return 1.0;
  return std::abs(sin_pi_frac(static_cast<long long>(u) * k, n)) /
         (static_cast<double>(k) * std::abs(denom));
}

Eigen::MatrixXcd kronecker_dictionary(const Eigen::Ref<const Eigen::MatrixXcd>& phi,
                                      const Eigen::Ref<const Eigen::MatrixXcd>& psi,
                                      std::size_t budget_bytes) {
  const std::size_t rows = static_cast<std::size_t>(phi.rows()) * static_cast<std::size_t>(psi.rows());
  const std::size_t cols = static_cast<std::size_t>(phi.cols()) * static_cast<std::size_t>(psi.cols());
  const std::size_t bytes = rows * cols * sizeof(std::complex<double>);
  if (bytes > budget_bytes)
    throw DimensionOverflow("kronecker_dictionary: " + std::to_string(bytes) +
                            " bytes exceeds the budget of " + std::to_string(budget_bytes));
  Eigen::MatrixXcd a(rows, cols);
  for (Eigen::Index i = 0; i < phi.rows(); ++i)
    for (Eigen::Index j = 0; j < phi.cols(); ++j)
      a.block(i * psi.rows(), j * psi.cols(), psi.rows(), psi.cols()) = phi(i, j) * psi;
  return a;
}

int sparsity_bound(int k) {
  if (k < 1) throw NonPositiveParameter("sparsity_bound: K must be >= 1");
  return static_cast<int>(std::floor((1.0 + std::sqrt(static_cast<double>(k))) / 2.0));
}

long long df_capacity(int pulses, int k) {
  if (pulses < 1) throw NonPositiveParameter("df_capacity: P must be >= 1");
  if (k < 1) throw NonPositiveParameter("df_capacity: K must be >= 1");
  return static_cast<long long>(
      std::floor(static_cast<double>(pulses) / 2.0 * (1.0 + std::sqrt(static_cast<double>(k)))));
}

}  // namespace dsradar
