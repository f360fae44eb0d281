#include "dsradar/scene.hpp"

#include <algorithm>

#include "dsradar/dictionary.hpp"

namespace dsradar {

Scene random_scene(int num_targets, const RadarParams& params, Rng& rng,
                   const SceneOptions& options) {
  if (num_targets < 0) throw NonPositiveParameter("random_scene: negative target count");
  const double tau = params.pri_s;
  const double max_delay = tau - options.delay_margin_s;
  if (!(max_delay > 0.0)) throw NonPositiveParameter("random_scene: delay margin leaves no range");

  Scene scene;
  scene.targets.reserve(static_cast<std::size_t>(num_targets));
  std::vector<int> used_delay_grids;
  for (int s = 0; s < num_targets; ++s) {
    Target t;
    t.attenuation = rng.unit_phasor();
    if (options.on_grid) {
      const int n_max = static_cast<int>(max_delay / tau * params.delay_grids);
      int n = 0;
      do {
        n = static_cast<int>(rng.uniform_int(0, std::max(0, n_max - 1)));
      } while (options.distinct_delay_grids &&
               std::find(used_delay_grids.begin(), used_delay_grids.end(), n) !=
                   used_delay_grids.end());
      used_delay_grids.push_back(n);
      t.delay_s = n * tau / params.delay_grids;
      const int m = static_cast<int>(rng.uniform_int(0, params.doppler_grids - 1));
      t.doppler_hz = doppler_grid_freq(m, params.doppler_grids, tau);
    } else {
      double delay = 0.0;
      int grid = 0;
      do {
        delay = rng.uniform(0.0, max_delay);
        grid = static_cast<int>(delay / tau * params.delay_grids);
      } while (options.distinct_delay_grids &&
               std::find(used_delay_grids.begin(), used_delay_grids.end(), grid) !=
                   used_delay_grids.end());
      used_delay_grids.push_back(grid);
      t.delay_s = delay;
      const double half = 0.5 / tau * options.doppler_scale;
      t.doppler_hz = rng.uniform(-half, half);
    }
    scene.targets.push_back(t);
  }
  return scene;
}

}  // namespace dsradar
