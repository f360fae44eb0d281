#include "dsradar/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "dsradar/dictionary.hpp"

namespace dsradar {

namespace {

double circular_distance(double a, double b, double span) {
  double d = std::abs(a - b);
  d = std::fmod(d, span);
  return std::min(d, span - d);
}

struct Candidate {
  double cost = 0.0;
  int truth = 0;
  int estimate = 0;
  double delay_err = 0.0;
  double doppler_err = 0.0;
};

// All truth/estimate pairs sorted by combined error; greedy one-to-one pass.
template <typename CostFn>
std::vector<Candidate> greedy_match(std::size_t truths, std::size_t estimates, CostFn&& cost_of) {
  std::vector<Candidate> candidates;
  candidates.reserve(truths * estimates);
  for (std::size_t s = 0; s < truths; ++s)
    for (std::size_t e = 0; e < estimates; ++e) candidates.push_back(cost_of(s, e));
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.cost != b.cost) return a.cost < b.cost;
    if (a.truth != b.truth) return a.truth < b.truth;
    return a.estimate < b.estimate;
  });
  std::vector<bool> truth_used(truths, false);
  std::vector<bool> estimate_used(estimates, false);
  std::vector<Candidate> matched;
  for (const Candidate& c : candidates) {
    if (truth_used[static_cast<std::size_t>(c.truth)] ||
        estimate_used[static_cast<std::size_t>(c.estimate)])
      continue;
    truth_used[static_cast<std::size_t>(c.truth)] = true;
    estimate_used[static_cast<std::size_t>(c.estimate)] = true;
    matched.push_back(c);
  }
  return matched;
}

}  // namespace

NyquistBins nyquist_bins(const RadarParams& params) {
  return {1.0 / params.bandwidth_hz, 1.0 / (params.pulses * params.pri_s)};
}

std::vector<Estimate> to_estimates(const DelayDopplerMap& map, double pri_s) {
  std::vector<Estimate> estimates;
  estimates.reserve(map.entries.size());
  for (const MapEntry& entry : map.entries) {
    Estimate e;
    e.delay_s = static_cast<double>(entry.delay_index) * pri_s / map.delay_grids;
    e.doppler_hz = doppler_grid_freq(entry.doppler_index, map.doppler_grids, pri_s);
    e.amplitude = entry.amplitude;
    estimates.push_back(e);
  }
  return estimates;
}

TrialScore match_detections(const Scene& truth, const std::vector<Estimate>& estimates,
                            const NyquistBins& bins, double doppler_span_hz) {
  TrialScore score;
  score.targets = truth.size();
  const auto cost_of = [&](std::size_t s, std::size_t e) {
    const Target& t = truth.targets[s];
    Candidate c;
    c.truth = static_cast<int>(s);
    c.estimate = static_cast<int>(e);
    c.delay_err = std::abs(estimates[e].delay_s - t.delay_s);
    c.doppler_err = circular_distance(estimates[e].doppler_hz, t.doppler_hz, doppler_span_hz);
    const double dt = c.delay_err / bins.delay_s;
    const double df = c.doppler_err / bins.doppler_hz;
    c.cost = std::sqrt(dt * dt + df * df);
    return c;
  };
  for (const Candidate& c : greedy_match(truth.targets.size(), estimates.size(), cost_of)) {
    if (c.delay_err < bins.delay_s && c.doppler_err < bins.doppler_hz) {
      ++score.detections;
      score.errors.emplace_back(c.delay_err / bins.delay_s, c.doppler_err / bins.doppler_hz);
    }
  }
  return score;
}

double prob_detection(const std::vector<TrialScore>& scores) {
  if (scores.empty()) throw EmptyTrialSet("prob_detection: no trials");
  long long detections = 0;
  long long targets = 0;
  for (const TrialScore& s : scores) {
    detections += s.detections;
    targets += s.targets;
  }
  if (targets == 0) return 0.0;
  return static_cast<double>(detections) / static_cast<double>(targets);
}

std::pair<double, double> normalized_rmse(const std::vector<TrialScore>& scores) {
  long long total = 0;
  double delay_sq = 0.0;
  double doppler_sq = 0.0;
  for (const TrialScore& s : scores) {
    for (const auto& [dt, df] : s.errors) {
      delay_sq += dt * dt;
      doppler_sq += df * df;
      ++total;
    }
  }
  if (total == 0) throw NoDetections("normalized_rmse: no true detections pooled");
  return {std::sqrt(delay_sq / static_cast<double>(total)),
          std::sqrt(doppler_sq / static_cast<double>(total))};
}

bool separate_detection(const Target& first, const Target& second,
                        const std::vector<Estimate>& estimates, double doppler_span_hz) {
  const double delay_gap = std::abs(first.delay_s - second.delay_s);
  const double doppler_gap =
      circular_distance(first.doppler_hz, second.doppler_hz, doppler_span_hz);
  const Target truth_pair[2] = {first, second};
  const auto cost_of = [&](std::size_t s, std::size_t e) {
    Candidate c;
    c.truth = static_cast<int>(s);
    c.estimate = static_cast<int>(e);
    c.delay_err = std::abs(estimates[e].delay_s - truth_pair[s].delay_s);
    c.doppler_err =
        circular_distance(estimates[e].doppler_hz, truth_pair[s].doppler_hz, doppler_span_hz);
    // normalize by the half spacings so the greedy order matches the test
    const double dt = delay_gap > 0.0 ? c.delay_err / (delay_gap / 2.0) : (c.delay_err > 0.0 ? 1e300 : 0.0);
    const double df =
        doppler_gap > 0.0 ? c.doppler_err / (doppler_gap / 2.0) : (c.doppler_err > 0.0 ? 1e300 : 0.0);
    c.cost = std::sqrt(dt * dt + df * df);
    return c;
  };
  const auto matched = greedy_match(2, estimates.size(), cost_of);
  if (matched.size() < 2) return false;
  for (const Candidate& c : matched) {
    if (!(c.delay_err < delay_gap / 2.0)) return false;
    if (!(c.doppler_err < doppler_gap / 2.0)) return false;
  }
  return true;
}

}  // namespace dsradar
