#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "dsradar/errors.hpp"
#include "dsradar/rng.hpp"

namespace dsradar {

struct RadarParams {
  double pri_s = 0.0;        // tau
  double bandwidth_hz = 0.0; // B_h, receiver two-sided bandwidth
  int pulses = 1;            // P
  int delay_grids = 1;       // N
  int doppler_grids = 1;     // M

  // Nyquist samples per PRI
  int pri_samples() const { return static_cast<int>(std::lround(pri_s * bandwidth_hz)); }
  double doppler_span_hz() const { return 1.0 / pri_s; }
};

struct Target {
  std::complex<double> attenuation;  // a_s
  double delay_s = 0.0;              // t_s in [0, tau)
  double doppler_hz = 0.0;           // f_s in [-1/2tau, 1/2tau)
};

struct Scene {
  std::vector<Target> targets;

  int size() const { return static_cast<int>(targets.size()); }
};

struct SceneOptions {
  bool on_grid = false;         // snap delays/Dopplers to the grid points
  double delay_margin_s = 0.0;  // delays drawn from [0, tau - margin)
  double doppler_scale = 1.0;   // Dopplers drawn from scale * [-1/2tau, 1/2tau)
  bool distinct_delay_grids = false;  // no two targets share a delay grid cell
};

// Unit-amplitude targets with random phase, delays and Dopplers uniform over
// the (optionally restricted) unambiguous region.
Scene random_scene(int num_targets, const RadarParams& params, Rng& rng,
                   const SceneOptions& options = {});

}  // namespace dsradar
