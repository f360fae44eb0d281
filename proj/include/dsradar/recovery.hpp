#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "dsradar/errors.hpp"

namespace dsradar {

struct RecoveryConfig {
  // Number of greedy picks; 0 selects the Auto bound floor(sqrt(K)) with K
  // the measurement row count.
  int sparsity = 0;
  // Early stop once the residual norm falls below this (0 keeps only the
  // built-in exact-zero stop).
  double residual_tol = 0.0;
};

struct SparseSolution {
  std::vector<int> support;            // pick order
  Eigen::VectorXcd coefficients;       // aligned with support
  std::vector<double> residual_history;
};

// Greedy selection by |<a_j, r>| / ||a_j||, least squares on the selected
// columns, residual update.
SparseSolution omp(const Eigen::Ref<const Eigen::MatrixXcd>& dictionary,
                   const Eigen::Ref<const Eigen::VectorXcd>& y,
                   const RecoveryConfig& config = {});

// Jointly sparse estimate B (N x P) with row support Omega.
struct JointSparseEstimate {
  Eigen::MatrixXcd coefficients;  // N x P, rows off the support are zero
  std::vector<int> support;       // Omega, pick order
  std::vector<double> residual_history;
};

// Simultaneous OMP across the P measurement columns: picks
// argmax_j ||phi_j^H R||_2, refits B_Omega by least squares, updates the
// residual. Loop bound floor(sqrt(K)) unless config.sparsity is set.
JointSparseEstimate somp(const Eigen::Ref<const Eigen::MatrixXcd>& phi,
                         const Eigen::Ref<const Eigen::MatrixXcd>& y,
                         const RecoveryConfig& config = {});

struct MapEntry {
  int doppler_index = 0;  // m
  int delay_index = 0;    // n
  std::complex<double> amplitude;
};

// Sparse view of the M x N delay-Doppler matrix X.
struct DelayDopplerMap {
  int doppler_grids = 0;  // M
  int delay_grids = 0;    // N
  std::vector<MapEntry> entries;
};

// For each recovered delay row, picks the Doppler column maximizing
// |psi_m^H b|; the amplitude is the scalar least-squares fit onto psi_m.
DelayDopplerMap doppler_match(const JointSparseEstimate& estimate,
                              const Eigen::Ref<const Eigen::MatrixXcd>& psi);

// Same peak pick evaluated from the uniform-grid DFT identity instead of an
// explicit dictionary.
DelayDopplerMap doppler_match_fft(const JointSparseEstimate& estimate, int doppler_grids,
                                  double pri_s);

// somp followed by doppler_match.
DelayDopplerMap structured_recover(const Eigen::Ref<const Eigen::MatrixXcd>& y,
                                   const Eigen::Ref<const Eigen::MatrixXcd>& phi,
                                   const Eigen::Ref<const Eigen::MatrixXcd>& psi,
                                   const RecoveryConfig& config = {});

// Focused measurements D (K x M): D(k, m) = sum_p Y(k, p) e^{-j 2 pi f_m p tau}.
Eigen::MatrixXcd doppler_focus(const Eigen::Ref<const Eigen::MatrixXcd>& y, double pri_s,
                               int doppler_grids);

// Per-column OMP on the focused measurements; per-column picks are capped at
// sparsity_bound(K) and the merged map keeps the globally largest entries
// (config.sparsity of them; Auto keeps df_capacity(P, K)). residual_history,
// when given, receives the per-column iteration residuals in column order.
DelayDopplerMap df_recover(const Eigen::Ref<const Eigen::MatrixXcd>& focused,
                           const Eigen::Ref<const Eigen::MatrixXcd>& phi, int pulses,
                           const RecoveryConfig& config = {},
                           std::vector<double>* residual_history = nullptr);

// OMP over the Kronecker dictionary Phi kron Psi; materialized under the
// byte budget, otherwise the correlations are evaluated implicitly as
// Phi^H R conj(Psi).
DelayDopplerMap standard_recover(const Eigen::Ref<const Eigen::MatrixXcd>& y,
                                 const Eigen::Ref<const Eigen::MatrixXcd>& phi,
                                 const Eigen::Ref<const Eigen::MatrixXcd>& psi,
                                 const RecoveryConfig& config = {},
                                 std::size_t budget_bytes = std::size_t{1} << 28,
                                 std::vector<double>* residual_history = nullptr);

// ||B||_{i,q} = (sum_n ||row_n||_i^q)^{1/q}.
double mixed_norm(const Eigen::Ref<const Eigen::MatrixXcd>& b, double i, double q);

// Entries sorted by descending magnitude, truncated to count.
std::vector<MapEntry> top_entries(const DelayDopplerMap& map, int count);

}  // namespace dsradar
