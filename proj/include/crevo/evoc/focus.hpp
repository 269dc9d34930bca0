#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "crevo/evoc/fitness.hpp"

namespace crevo::evoc {

enum class ShiftKind { HeadFlip, SymFlip, Both };

// Periodic flips of the fitness-function modes. Each flip is an involution,
// so applying the same shift twice restores the original parameters.
struct FitnessSchedule {
  bool enabled = false;
  int period = 50;
  ShiftKind kind = ShiftKind::HeadFlip;

  std::vector<std::string> validate() const {
    std::vector<std::string> problems;
    if (enabled && period < 1) problems.push_back("period: must be >= 1 when enabled");
    return problems;
  }
};

inline FitnessParams shift_fitness(FitnessParams params, const FitnessSchedule& schedule,
                                   int iteration) {
  if (!schedule.enabled || iteration <= 0 || iteration % schedule.period != 0) {
    return params;
  }
  if (schedule.kind == ShiftKind::HeadFlip || schedule.kind == ShiftKind::Both) {
    params.head_mode = flipped(params.head_mode);
  }
  if (schedule.kind == ShiftKind::SymFlip || schedule.kind == ShiftKind::Both) {
    params.sym_mode = flipped(params.sym_mode);
  }
  return params;
}

inline std::string fitness_mode_label(const FitnessParams& params) {
  std::string label = params.head_mode == HeadMode::RewardStill ? "still" : "moving";
  label += '-';
  label += params.sym_mode == SymMode::RewardSame ? "same" : "opposite";
  return label;
}

// Per-agent mutation-rate controller: underperformance against the agent's
// own recent best pushes the rate to p_hi (associative mode); performing at
// least as well as the previous iteration decays it geometrically back to
// the p_lo floor (analytic mode).
struct FocusController {
  double p_lo = 1.0 / 6.0;
  double p_hi = 0.5;
  double theta = 0.8;
  double decay = 0.9;
  int window = 10;

  std::vector<std::string> validate() const {
    std::vector<std::string> problems;
    if (!(p_lo > 0.0 && p_lo <= 1.0)) problems.push_back("p_lo: must lie in (0, 1]");
    if (!(p_hi >= p_lo && p_hi <= 1.0)) problems.push_back("p_hi: must lie in [p_lo, 1]");
    if (!(theta > 0.0 && theta <= 1.0)) problems.push_back("theta: must lie in (0, 1]");
    if (!(decay > 0.0 && decay < 1.0)) problems.push_back("decay: must lie in (0, 1)");
    if (window < 1) problems.push_back("window: must be >= 1");
    return problems;
  }
};

// Tolerance on the underperformance comparison. The default weights put a
// converged agent's post-HEAD_FLIP fitness exactly at theta * recent_best
// (8 vs 0.8 * 10); the trigger must fire on that boundary for the shift
// response to exist at all, so the comparison is <= with an fp guard.
inline constexpr double kThetaBoundaryTolerance = 1e-9;

inline double update_mutation_rate(const FocusController& controller, double rate,
                                   double current_fitness, double recent_best,
                                   double previous_fitness) {
  if (current_fitness <= controller.theta * recent_best + kThetaBoundaryTolerance) {
    return controller.p_hi;
  }
  if (current_fitness >= previous_fitness) {
    return std::max(controller.p_lo, controller.decay * rate);
  }
  return rate;
}

struct CfConfig {
  FitnessSchedule schedule;
  FocusController controller;

  std::vector<std::string> validate() const {
    auto problems = schedule.validate();
    auto more = controller.validate();
    problems.insert(problems.end(), more.begin(), more.end());
    return problems;
  }
};

}  // namespace crevo::evoc
