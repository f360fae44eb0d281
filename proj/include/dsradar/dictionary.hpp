#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstddef>

#include "dsradar/sampling.hpp"

namespace dsradar {

// Delay dictionary Phi (K x N): Phi(k, n) = exp(-j 2 pi kappa_k n / N),
// n = 0..N-1. Unit-modulus entries, columns of squared norm K.
Eigen::MatrixXcd delay_dictionary(const SamplingIndexSet& sampling, int grid_order = 0);

// Doppler grid f_m = -1/(2 tau) + m/(M tau), m = 0..M-1.
double doppler_grid_freq(int m, int doppler_grids, double pri_s);

// Doppler dictionary Psi (P x M): Psi(p, m) = exp(j 2 pi f_m p tau).
Eigen::MatrixXcd doppler_dictionary(int pulses, int doppler_grids, double pri_s);

// sqrt((N - K) / (K (N - 1))), the universal coherence lower bound.
double welch_bound(int n, int k);

struct CoherenceReport {
  double mu = 0.0;
  double welch = 0.0;
  Eigen::VectorXd mu_profile;  // mu(u), u = 1..N-1
};

// mu(u) for the Vandermonde delay dictionary via the circulant shortcut
// mu(u) = |sum_k exp(-j 2 pi u kappa_k / N)| / K. Phases are reduced with
// integer arithmetic, so the profile is accurate to a few ulp even at
// N ~ 10^4.
CoherenceReport coherence(const SamplingIndexSet& sampling, int grid_order = 0);

// Coherence of an arbitrary dictionary by exhaustive pairwise inner
// products; mu_profile[u-1] holds the largest normalized cross-correlation
// among column pairs at distance u. Oracle route for the shortcut above.
CoherenceReport coherence(const Eigen::Ref<const Eigen::MatrixXcd>& dictionary);

// Closed form for consecutive sampling: mu(u) = |sin(pi u K / N)| /
// (K |sin(pi u / N)|).
double consecutive_mu_closed_form(int u, int n, int k);

// A (KP x NM) = Phi kron Psi; column (n, m) sits at index n*M + m. Refuses
// to materialize above the byte budget.
Eigen::MatrixXcd kronecker_dictionary(const Eigen::Ref<const Eigen::MatrixXcd>& phi,
                                      const Eigen::Ref<const Eigen::MatrixXcd>& psi,
                                      std::size_t budget_bytes = std::size_t{1} << 28);

// Unique-recovery sparsity cap floor((1 + sqrt(K)) / 2) and the Doppler
// focusing total capacity floor((P/2)(1 + sqrt(K))).
int sparsity_bound(int k);
long long df_capacity(int pulses, int k);

}  // namespace dsradar
