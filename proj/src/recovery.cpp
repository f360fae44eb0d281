#include "dsradar/recovery.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "dsradar/dictionary.hpp"

namespace dsradar {

namespace {

constexpr double kPi = std::numbers::pi;
using Complex = std::complex<double>;

int resolve_picks(const RecoveryConfig& config, Eigen::Index rows) {
  if (config.sparsity < 0) throw NonPositiveParameter("recovery: negative sparsity");
  if (config.sparsity > 0) return config.sparsity;
  return static_cast<int>(std::floor(std::sqrt(static_cast<double>(rows))));
}

// argmax with ties broken toward the lowest index, skipping used entries.
int argmax_unused(const Eigen::VectorXd& scores, const std::vector<bool>& used) {
  int best = -1;
  double best_score = -1.0;
  for (Eigen::Index j = 0; j < scores.size(); ++j) {
    if (used[static_cast<std::size_t>(j)]) continue;
    if (scores[j] > best_score) {
      best_score = scores[j];
      best = static_cast<int>(j);
    }
  }
  return best_score > 0.0 ? best : -1;
}

Eigen::MatrixXcd solve_least_squares(const Eigen::Ref<const Eigen::MatrixXcd>& columns,
                                     const Eigen::Ref<const Eigen::MatrixXcd>& rhs) {
  Eigen::ColPivHouseholderQR<Eigen::MatrixXcd> qr(columns);
  if (qr.rank() < columns.cols())
    throw RankDeficientSupport("least squares: selected columns are rank deficient");
  return qr.solve(rhs);
}

}  // namespace

SparseSolution omp(const Eigen::Ref<const Eigen::MatrixXcd>& dictionary,
                   const Eigen::Ref<const Eigen::VectorXcd>& y, const RecoveryConfig& config) {
  const Eigen::Index cols = dictionary.cols();
  const Eigen::VectorXd col_norms = dictionary.colwise().norm();
  for (Eigen::Index j = 0; j < cols; ++j)
    if (col_norms[j] == 0.0) throw ZeroColumn("omp: column " + std::to_string(j) + " is zero");

  const int picks = resolve_picks(config, dictionary.rows());
  const double stop = std::max(config.residual_tol, 1e-13 * y.norm());

  SparseSolution sol;
  std::vector<bool> used(static_cast<std::size_t>(cols), false);
  Eigen::VectorXcd residual = y;
  Eigen::MatrixXcd selected(dictionary.rows(), 0);
  for (int s = 0; s < picks; ++s) {
    if (residual.norm() <= stop) break;
    const Eigen::VectorXd scores =
        (dictionary.adjoint() * residual).cwiseAbs().cwiseQuotient(col_norms);
    const int j = argmax_unused(scores, used);
    if (j < 0) break;
    used[static_cast<std::size_t>(j)] = true;
    sol.support.push_back(j);
    selected.conservativeResize(Eigen::NoChange, selected.cols() + 1);
    selected.col(selected.cols() - 1) = dictionary.col(j);
    sol.coefficients = solve_least_squares(selected, y);
    residual = y - selected * sol.coefficients;
    sol.residual_history.push_back(residual.norm());
  }
  if (sol.support.empty()) sol.coefficients.resize(0);
  return sol;
}

JointSparseEstimate somp(const Eigen::Ref<const Eigen::MatrixXcd>& phi,
                         const Eigen::Ref<const Eigen::MatrixXcd>& y,
                         const RecoveryConfig& config) {
  const Eigen::Index n = phi.cols();
  const int picks = resolve_picks(config, phi.rows());
  const double stop = std::max(config.residual_tol, 1e-13 * y.norm());

  JointSparseEstimate est;
  est.coefficients = Eigen::MatrixXcd::Zero(n, y.cols());
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  Eigen::MatrixXcd residual = y;
  Eigen::MatrixXcd selected(phi.rows(), 0);
  Eigen::MatrixXcd b_omega;
  for (int s = 0; s < picks; ++s) {
    if (residual.norm() <= stop) break;
    const Eigen::VectorXd scores = (phi.adjoint() * residual).rowwise().norm();
    const int j = argmax_unused(scores, used);
    if (j < 0) break;
    used[static_cast<std::size_t>(j)] = true;
    est.support.push_back(j);
    selected.conservativeResize(Eigen::NoChange, selected.cols() + 1);
    selected.col(selected.cols() - 1) = phi.col(j);
    b_omega = solve_least_squares(selected, y);
    residual = y - selected * b_omega;
    est.residual_history.push_back(residual.norm());
  }
  for (std::size_t i = 0; i < est.support.size(); ++i)
    est.coefficients.row(est.support[i]) = b_omega.row(static_cast<Eigen::Index>(i));
  return est;
}

namespace {

DelayDopplerMap match_rows(const JointSparseEstimate& estimate, int doppler_grids, int delay_grids,
                           const std::function<Eigen::VectorXcd(const Eigen::VectorXcd&)>& correlate,
                           double column_energy) {
  DelayDopplerMap map;
  map.doppler_grids = doppler_grids;
  map.delay_grids = delay_grids;
  for (int row : estimate.support) {
    const Eigen::VectorXcd b = estimate.coefficients.row(row).transpose();
    const Eigen::VectorXcd scores = correlate(b);
    int best = 0;
    double best_mag = -1.0;
    for (Eigen::Index m = 0; m < scores.size(); ++m) {
      const double mag = std::abs(scores[m]);
      if (mag > best_mag) {
        best_mag = mag;
        best = static_cast<int>(m);
      }
    }
    // scalar least squares onto the picked column
    map.entries.push_back({best, row, scores[best] / column_energy});
  }
  return map;
}

}  // namespace

DelayDopplerMap doppler_match(const JointSparseEstimate& estimate,
                              const Eigen::Ref<const Eigen::MatrixXcd>& psi) {
  const double column_energy = static_cast<double>(psi.rows());
  return match_rows(
      estimate, static_cast<int>(psi.cols()), static_cast<int>(estimate.coefficients.rows()),
      [&](const Eigen::VectorXcd& b) -> Eigen::VectorXcd { return psi.adjoint() * b; },
      column_energy);
}

DelayDopplerMap doppler_match_fft(const JointSparseEstimate& estimate, int doppler_grids,
                                  double pri_s) {
  const auto correlate = [&](const Eigen::VectorXcd& b) {
    Eigen::VectorXcd scores(doppler_grids);
    for (int m = 0; m < doppler_grids; ++m) {
      const double f = doppler_grid_freq(m, doppler_grids, pri_s);
      Complex acc = 0.0;
      for (Eigen::Index p = 0; p < b.size(); ++p) {
        const double angle = -2.0 * kPi * f * static_cast<double>(p) * pri_s;
        acc += b[p] * Complex{std::cos(angle), std::sin(angle)};
      }
      scores[m] = acc;
    }
    return scores;
  };
  return match_rows(estimate, doppler_grids, static_cast<int>(estimate.coefficients.rows()),
                    correlate, static_cast<double>(estimate.coefficients.cols()));
}

DelayDopplerMap structured_recover(const Eigen::Ref<const Eigen::MatrixXcd>& y,
                                   const Eigen::Ref<const Eigen::MatrixXcd>& phi,
                                   const Eigen::Ref<const Eigen::MatrixXcd>& psi,
                                   const RecoveryConfig& config) {
  return doppler_match(somp(phi, y, config), psi);
}

Eigen::MatrixXcd doppler_focus(const Eigen::Ref<const Eigen::MatrixXcd>& y, double pri_s,
                               int doppler_grids) {
  const Eigen::MatrixXcd filter =
      doppler_dictionary(static_cast<int>(y.cols()), doppler_grids, pri_s).conjugate();
  return y * filter;
}

DelayDopplerMap df_recover(const Eigen::Ref<const Eigen::MatrixXcd>& focused,
                           const Eigen::Ref<const Eigen::MatrixXcd>& phi, int pulses,
                           const RecoveryConfig& config,
                           std::vector<double>* residual_history) {
  const int k = static_cast<int>(phi.rows());
  const int per_column = sparsity_bound(k);
  const long long total_cap = config.sparsity > 0
                                  ? config.sparsity
                                  : df_capacity(pulses, k);

  DelayDopplerMap map;
  map.doppler_grids = static_cast<int>(focused.cols());
  map.delay_grids = static_cast<int>(phi.cols());
  RecoveryConfig column_config = config;
  column_config.sparsity =
      config.sparsity > 0 ? std::min(config.sparsity, per_column) : per_column;
  for (Eigen::Index m = 0; m < focused.cols(); ++m) {
    const SparseSolution sol = omp(phi, focused.col(m), column_config);
    for (std::size_t i = 0; i < sol.support.size(); ++i)
      map.entries.push_back({static_cast<int>(m), sol.support[i],
                             sol.coefficients[static_cast<Eigen::Index>(i)]});
    if (residual_history)
      residual_history->insert(residual_history->end(), sol.residual_history.begin(),
                               sol.residual_history.end());
  }
  map.entries = top_entries(map, static_cast<int>(total_cap));
  return map;
}

DelayDopplerMap standard_recover(const Eigen::Ref<const Eigen::MatrixXcd>& y,
                                 const Eigen::Ref<const Eigen::MatrixXcd>& phi,
                                 const Eigen::Ref<const Eigen::MatrixXcd>& psi,
                                 const RecoveryConfig& config, std::size_t budget_bytes,
                                 std::vector<double>* residual_history) {
  const int k = static_cast<int>(phi.rows());
  const int n = static_cast<int>(phi.cols());
  const int p = static_cast<int>(psi.rows());
  const int m = static_cast<int>(psi.cols());
  if (y.rows() != k || y.cols() != p)
    throw OutOfRange("standard_recover: measurement shape disagrees with the dictionaries");

  // vec(Y): y[k*P + p] = Y(k, p); column (n, m) of Phi kron Psi sits at n*M + m.
  Eigen::VectorXcd yv(static_cast<Eigen::Index>(k) * p);
  for (int kk = 0; kk < k; ++kk)
    for (int pp = 0; pp < p; ++pp) yv[static_cast<Eigen::Index>(kk) * p + pp] = y(kk, pp);

  SparseSolution sol;
  const std::size_t bytes = static_cast<std::size_t>(k) * p * n * m * sizeof(Complex);
  if (bytes <= budget_bytes) {
    sol = omp(kronecker_dictionary(phi, psi, budget_bytes), yv, config);
  } else {
    // Implicit correlations: scores(n, m) = |phi_n^H R conj(psi_m)|.
    const int picks = resolve_picks(config, yv.size());
    const double stop = std::max(config.residual_tol, 1e-13 * yv.norm());
    std::vector<bool> used(static_cast<std::size_t>(n) * m, false);
    Eigen::VectorXcd residual = yv;
    Eigen::MatrixXcd selected(yv.size(), 0);
    for (int s = 0; s < picks; ++s) {
      if (residual.norm() <= stop) break;
      Eigen::MatrixXcd r_mat(k, p);
      for (int kk = 0; kk < k; ++kk)
        for (int pp = 0; pp < p; ++pp) r_mat(kk, pp) = residual[static_cast<Eigen::Index>(kk) * p + pp];
      const Eigen::MatrixXd scores = (phi.adjoint() * r_mat * psi.conjugate()).cwiseAbs();
      int best_flat = -1;
      double best = 0.0;
      for (int nn = 0; nn < n; ++nn) {
        for (int mm = 0; mm < m; ++mm) {
          const int flat = nn * m + mm;
          if (used[static_cast<std::size_t>(flat)]) continue;
          if (scores(nn, mm) > best) {
            best = scores(nn, mm);
            best_flat = flat;
          }
        }
      }
      if (best_flat < 0) break;
      used[static_cast<std::size_t>(best_flat)] = true;
      sol.support.push_back(best_flat);
      Eigen::VectorXcd column(static_cast<Eigen::Index>(k) * p);
      const int nn = best_flat / m;
      const int mm = best_flat % m;
      for (int kk = 0; kk < k; ++kk)
        for (int pp = 0; pp < p; ++pp)
          column[static_cast<Eigen::Index>(kk) * p + pp] = phi(kk, nn) * psi(pp, mm);
      selected.conservativeResize(Eigen::NoChange, selected.cols() + 1);
      selected.col(selected.cols() - 1) = column;
      sol.coefficients = solve_least_squares(selected, yv);
      residual = yv - selected * sol.coefficients;
      sol.residual_history.push_back(residual.norm());
    }
  }

  if (residual_history) *residual_history = sol.residual_history;
  DelayDopplerMap map;
  map.doppler_grids = m;
  map.delay_grids = n;
  for (std::size_t i = 0; i < sol.support.size(); ++i) {
    const int flat = sol.support[i];
    map.entries.push_back({flat % m, flat / m, sol.coefficients[static_cast<Eigen::Index>(i)]});
  }
  return map;
}

double mixed_norm(const Eigen::Ref<const Eigen::MatrixXcd>& b, double i, double q) {
  if (i < 1.0 || q < 1.0) throw NonPositiveParameter("mixed_norm: need i, q >= 1");
  double total = 0.0;
  for (Eigen::Index row = 0; row < b.rows(); ++row) {
    double row_norm = 0.0;
    for (Eigen::Index col = 0; col < b.cols(); ++col)
      row_norm += std::pow(std::abs(b(row, col)), i);
    row_norm = std::pow(row_norm, 1.0 / i);
    total += std::pow(row_norm, q);
  }
  return std::pow(total, 1.0 / q);
}

std::vector<MapEntry> top_entries(const DelayDopplerMap& map, int count) {
  std::vector<MapEntry> entries = map.entries;
  std::sort(entries.begin(), entries.end(), [](const MapEntry& a, const MapEntry& b) {
    const double ma = std::abs(a.amplitude);
    const double mb = std::abs(b.amplitude);
    if (ma != mb) return ma > mb;
    if (a.doppler_index != b.doppler_index) return a.doppler_index < b.doppler_index;
    return a.delay_index < b.delay_index;
  });
  if (count >= 0 && static_cast<std::size_t>(count) < entries.size())
    entries.resize(static_cast<std::size_t>(count));
  return entries;
}

}  // namespace dsradar
