#pragma once

#include "crevo/core/rng.hpp"
#include "crevo/evoc/action.hpp"

namespace crevo::evoc {

// Steps with at least this many moving parts count as "high movement" for
// trend learning.
inline constexpr int kHighMoveThreshold = 3;

// Samples must reach this count before the learned trend biases invention.
inline constexpr int kTrendMinSamples = 10;

// Running means of self-evaluated action fitness, split by how much the
// action's first step moves. This is the stand-in for the learned trend
// "more overall movement tends to be good".
struct TrendStats {
  double mean_fitness_highmove = 0.0;
  double mean_fitness_lowmove = 0.0;
  int samples_highmove = 0;
  int samples_lowmove = 0;

  int samples() const { return samples_highmove + samples_lowmove; }

  void add_sample(int moving_parts, double fitness) {
    if (moving_parts >= kHighMoveThreshold) {
      ++samples_highmove;
      mean_fitness_highmove += (fitness - mean_fitness_highmove) / samples_highmove;
    } else {
      ++samples_lowmove;
      mean_fitness_lowmove += (fitness - mean_fitness_lowmove) / samples_lowmove;
    }
  }
};

struct PostureDist {
  double p_up = 1.0 / 3.0;
  double p_down = 1.0 / 3.0;
  double p_still = 1.0 / 3.0;

  double prob(Posture p) const {
    switch (p) {
      case Posture::Up: return p_up;
      case Posture::Down: return p_down;
      case Posture::Still: return p_still;
    }
    return 0.0;
  }
};

// Posture sampler for invention. Uniform until learning is enabled and the
// trend has enough evidence; then 0.8 total mass on the movement direction
// the trend favours, split evenly between UP and DOWN when movement wins.
inline PostureDist trend_bias(const TrendStats& trend, bool learning_enabled) {
  if (!learning_enabled || trend.samples() < kTrendMinSamples ||
      trend.mean_fitness_highmove == trend.mean_fitness_lowmove) {
    return PostureDist{};
  }
  if (trend.mean_fitness_highmove > trend.mean_fitness_lowmove) {
    return PostureDist{0.4, 0.4, 0.2};
  }
  return PostureDist{0.1, 0.1, 0.8};
}

inline Posture sample_posture(const PostureDist& dist, Rng& rng) {
  const double u = rng.uniform();
  if (u < dist.p_up) return Posture::Up;
  if (u < dist.p_up + dist.p_down) return Posture::Down;
  return Posture::Still;
}

// Sample a posture different from `current`, with the remaining two postures
// renormalized from `dist`. One uniform draw. Keeps the per-part change
// frequency equal to the mutation rate.
inline Posture sample_other_posture(const PostureDist& dist, Posture current, Rng& rng) {
  Posture first = Posture::Up, second = Posture::Down;
  switch (current) {
    case Posture::Up: first = Posture::Down; second = Posture::Still; break;
    case Posture::Down: first = Posture::Up; second = Posture::Still; break;
    case Posture::Still: first = Posture::Up; second = Posture::Down; break;
  }
  const double pa = dist.prob(first);
  const double pb = dist.prob(second);
  const double total = pa + pb;
  if (total <= 0.0) return first;
  return rng.uniform() < pa / total ? first : second;
}

}  // namespace crevo::evoc
