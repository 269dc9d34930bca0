#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "crevo/evoc/action.hpp"

namespace crevo::evoc {

enum class HeadMode { RewardStill, RewardMoving };
enum class SymMode { RewardSame, RewardOpposite };

inline HeadMode flipped(HeadMode m) {
  return m == HeadMode::RewardStill ? HeadMode::RewardMoving : HeadMode::RewardStill;
}
inline SymMode flipped(SymMode m) {
  return m == SymMode::RewardSame ? SymMode::RewardOpposite : SymMode::RewardSame;
}

// Weights of the single-step fitness function. Defaults give a maximum
// single-step score of 10; the all-STILL step scores 2.
struct FitnessParams {
  double w_head_still = 2.0;
  double w_limb_move = 1.0;
  double w_pair_sym = 2.0;
  HeadMode head_mode = HeadMode::RewardStill;
  SymMode sym_mode = SymMode::RewardSame;

  double max_step_fitness() const {
    return w_head_still + 2.0 * (2.0 * w_limb_move + w_pair_sym);
  }

  std::vector<std::string> validate() const {
    std::vector<std::string> problems;
    if (w_head_still < 0) problems.push_back("w_head_still: must be >= 0");
    if (w_limb_move < 0) problems.push_back("w_limb_move: must be >= 0");
    if (w_pair_sym < 0) problems.push_back("w_pair_sym: must be >= 0");
    return problems;
  }
};

namespace detail {
inline double pair_score(Posture a, Posture b, const FitnessParams& params) {
  const int moving = (is_moving(a) ? 1 : 0) + (is_moving(b) ? 1 : 0);
  double s = params.w_limb_move * moving;
  if (moving == 2) {
    const bool same = (a == b);
    const bool rewarded = (params.sym_mode == SymMode::RewardSame) ? same : !same;
    if (rewarded) s += params.w_pair_sym;
  }
  return s;
}
}  // namespace detail

// Fitness of a single step: head reward plus per-pair movement and symmetry
// rewards for the arm pair and the leg pair. HIPS never contributes, which
// keeps the optimum set non-singleton.
inline double step_fitness(const ActionStep& step, const FitnessParams& params) {
  double f = 0.0;
  const bool head_moving = is_moving(step.get(BodyPart::Head));
  const bool head_rewarded =
      (params.head_mode == HeadMode::RewardStill) ? !head_moving : head_moving;
  if (head_rewarded) f += params.w_head_still;
  f += detail::pair_score(step.get(BodyPart::LeftArm), step.get(BodyPart::RightArm), params);
  f += detail::pair_score(step.get(BodyPart::LeftLeg), step.get(BodyPart::RightLeg), params);
  return f;
}

// Chained fitness: the first step's fitness plus one per additional step.
inline double chain_fitness(const ChainedAction& action, const FitnessParams& params,
                            int max_chain_length = kUnboundedChainLength) {
  if (auto violation = validate_chain(action, max_chain_length)) {
    throw std::invalid_argument("invalid chain at step " +
                                std::to_string(violation->step_index) + ": " +
                                violation->rule);
  }
  return step_fitness(action.steps.front(), params) + (action.length() - 1);
}

struct OracleResult {
  double max_fitness = 0.0;
  int optimum_count = 0;
  std::vector<double> table;  // fitness indexed by ActionStep::index()

  bool is_optimal(int step_index) const { return table[step_index] == max_fitness; }
};

// Exhaustive evaluation of all 729 steps. Used as the reference ceiling for
// the no-chaining plateau and exposed through the oracle-fitness subcommand.
inline OracleResult oracle_enumerate(const FitnessParams& params) {
  OracleResult r;
  r.table.resize(kStepSpaceSize);
  r.max_fitness = 0.0;
  for (int i = 0; i < kStepSpaceSize; ++i) {
    r.table[i] = step_fitness(ActionStep::from_index(i), params);
    r.max_fitness = std::max(r.max_fitness, r.table[i]);
  }
  for (double f : r.table) {
    if (f == r.max_fitness) ++r.optimum_count;
  }
  return r;
}

}  // namespace crevo::evoc
