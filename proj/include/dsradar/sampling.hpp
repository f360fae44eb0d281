#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dsradar/difference_set.hpp"
#include "dsradar/errors.hpp"

namespace dsradar {

// Per-PRI Fourier index set I = {-ceil(tau B/2), ..., floor(tau B/2)}.
struct FourierRange {
  int lo = 0;
  int hi = 0;

  int size() const { return hi - lo + 1; }
  bool contains(int k) const { return k >= lo && k <= hi; }
};

FourierRange fourier_range(double pri_s, double bandwidth_hz);

enum class Scheme { Consecutive, Random, DS };

std::string scheme_name(Scheme scheme);
Scheme parse_scheme(const std::string& name);

// K Fourier-bin indices kappa drawn from the range, plus the delay grid count
// the delay dictionary is built against.
struct SamplingIndexSet {
  Scheme scheme = Scheme::Consecutive;
  std::vector<int> indices;  // sorted ascending, distinct, inside range
  int grid_order = 0;        // N
  FourierRange range;

  int size() const { return static_cast<int>(indices.size()); }
};

// K contiguous indices centered on bin 0 (lowpass band).
SamplingIndexSet consecutive_sampling(int k, FourierRange range, int grid_order);

// K distinct indices drawn uniformly from the range; reproducible per seed.
SamplingIndexSet random_sampling(int k, FourierRange range, int grid_order, std::uint64_t seed);

// Shifted difference-set indices; grid_order is the set's modulus.
SamplingIndexSet ds_sampling(const DifferenceSet& ds, FourierRange range);

// Config-driven dispatcher over the three constructors above.
SamplingIndexSet build_sampling(Scheme scheme, int k, FourierRange range,
                                const DifferenceSet* ds, std::uint64_t seed, int grid_order);

}  // namespace dsradar
