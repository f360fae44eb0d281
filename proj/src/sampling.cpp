#include "dsradar/sampling.hpp"

#include <algorithm>
#include <cmath>

#include "dsradar/rng.hpp"

namespace dsradar {

FourierRange fourier_range(double pri_s, double bandwidth_hz) {
  if (!(pri_s > 0.0) || !(bandwidth_hz > 0.0))
    throw NonPositiveParameter("fourier_range: pri and bandwidth must be positive");
  // snap within a relative 1e-12 so tau * B landing on an integer stays there
  const double half = pri_s * bandwidth_hz / 2.0;
  const double snap = half * 1e-12;
  FourierRange range;
  range.lo = -static_cast<int>(std::ceil(half - snap));
  range.hi = static_cast<int>(std::floor(half + snap));
  return range;
}

std::string scheme_name(Scheme scheme) {
  switch (scheme) {
    case Scheme::Consecutive: return "consecutive";
    case Scheme::Random: return "random";
    case Scheme::DS: return "ds";
  }
  return "?";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "consecutive") return Scheme::Consecutive;
  if (name == "random") return Scheme::Random;
  if (name == "ds") return Scheme::DS;
  throw ConfigError("unknown sampling scheme '" + name + "'");
}

SamplingIndexSet consecutive_sampling(int k, FourierRange range, int grid_order) {
  if (k < 1) throw NonPositiveParameter("consecutive_sampling: K must be >= 1");
  if (k > range.size())
    throw TooManyIndices("consecutive_sampling: K exceeds the Fourier range");
  SamplingIndexSet s;
  s.scheme = Scheme::Consecutive;
  s.range = range;
  s.grid_order = grid_order;
  int lo = -(k / 2);
  if (lo < range.lo) lo = range.lo;
  if (lo + k - 1 > range.hi) lo = range.hi - k + 1;
  for (int i = 0; i < k; ++i) s.indices.push_back(lo + i);
  return s;
}

SamplingIndexSet random_sampling(int k, FourierRange range, int grid_order, std::uint64_t seed) {
  if (k < 1) throw NonPositiveParameter("random_sampling: K must be >= 1");
  if (k > range.size())
    throw TooManyIndices("random_sampling: K exceeds the Fourier range");
  // Partial Fisher-Yates over the index pool.
  std::vector<int> pool(static_cast<std::size_t>(range.size()));
  for (int i = 0; i < range.size(); ++i) pool[static_cast<std::size_t>(i)] = range.lo + i;
  Rng rng(seed);
  SamplingIndexSet s;
  s.scheme = Scheme::Random;
  s.range = range;
  s.grid_order = grid_order;
  for (int i = 0; i < k; ++i) {
    const auto j = rng.uniform_int(i, range.size() - 1);
    std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    s.indices.push_back(pool[static_cast<std::size_t>(i)]);
  }
  std::sort(s.indices.begin(), s.indices.end());
  return s;
}

SamplingIndexSet ds_sampling(const DifferenceSet& ds, FourierRange range) {
  SamplingIndexSet s;
  s.scheme = Scheme::DS;
  s.range = range;
  s.grid_order = ds.modulus;
  s.indices = equivalent_shift(ds);
  for (int idx : s.indices) {
    if (!range.contains(idx))
      throw DSOutOfRange("ds_sampling: shifted index " + std::to_string(idx) +
                         " outside the Fourier range [" + std::to_string(range.lo) + ", " +
                         std::to_string(range.hi) + "]");
  }
  return s;
}

SamplingIndexSet build_sampling(Scheme scheme, int k, FourierRange range,
                                const DifferenceSet* ds, std::uint64_t seed, int grid_order) {
  switch (scheme) {
    case Scheme::Consecutive:
      return consecutive_sampling(k, range, grid_order);
    case Scheme::Random:
      return random_sampling(k, range, grid_order, seed);
    case Scheme::DS: {
      if (ds == nullptr) throw ConfigError("build_sampling: DS scheme needs a difference set");
      if (grid_order != 0 && grid_order != ds->modulus)
        throw ConfigError("build_sampling: grid order must equal the set modulus for DS sampling");
      return ds_sampling(*ds, range);
    }
  }
  throw ConfigError("build_sampling: bad scheme");
}

}  // namespace dsradar
