#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <deque>
#include <set>
#include <string>
#include <vector>

#include "crevo/core/rng.hpp"
#include "crevo/evoc/action.hpp"
#include "crevo/evoc/fitness.hpp"
#include "crevo/evoc/focus.hpp"
#include "crevo/evoc/trend.hpp"

namespace crevo::evoc {

enum class Role { Creator, Imitator, Mixed };

enum class RoleScheme { Mixed, Split };

struct WorldConfig {
  int grid_width = 10;
  int grid_height = 10;
  bool chaining_enabled = false;
  bool learning_enabled = false;
  double p_invent = 0.5;
  double p_cont = 0.5;
  RoleScheme role_scheme = RoleScheme::Mixed;
  double fraction_creators = 0.5;
  int iterations = 100;
  std::uint64_t seed = 0;
  FitnessParams fitness;
  int max_chain_length = 100;

  int agent_count() const { return grid_width * grid_height; }

  std::vector<std::string> validate() const {
    std::vector<std::string> problems;
    if (grid_width < 1) problems.push_back("grid_width: must be >= 1");
    if (grid_height < 1) problems.push_back("grid_height: must be >= 1");
    if (!(p_invent >= 0.0 && p_invent <= 1.0)) problems.push_back("p_invent: must lie in [0, 1]");
    if (!(p_cont >= 0.0 && p_cont <= 1.0)) problems.push_back("p_cont: must lie in [0, 1]");
    if (!(fraction_creators >= 0.0 && fraction_creators <= 1.0)) {
      problems.push_back("fraction_creators: must lie in [0, 1]");
    }
    if (iterations < 0) problems.push_back("iterations: must be >= 0");
    if (max_chain_length < 1) problems.push_back("max_chain_length: must be >= 1");
    auto more = fitness.validate();
    problems.insert(problems.end(), more.begin(), more.end());
    return problems;
  }
};

struct Agent {
  ChainedAction action = ChainedAction::single(ActionStep{});
  Role role = Role::Mixed;
  TrendStats trend;
  double mutation_rate = 1.0 / 6.0;

  // Contextual-focus bookkeeping; constant unless a FocusController runs.
  double prev_fitness = 0.0;
  std::deque<double> recent_fitness;
};

struct Metrics {
  int iteration = 0;
  double mean_fitness = 0.0;
  double max_fitness = 0.0;
  int diversity = 0;
  double mean_chain_length = 0.0;
  double mean_mutation_rate = 0.0;

  bool operator==(const Metrics&) const = default;
};

struct CfMetrics {
  Metrics metrics;
  std::string fitness_mode;
};

// Invention: resample each body part of the current first step with the
// agent's mutation rate (drawing changed postures through the trend bias),
// then, when chaining is on and the new step moves an arm, extend the chain
// with p_cont per step, forcing the chain arm to alternate and resampling the
// other parts uniformly.
inline ChainedAction invent(const Agent& agent, const WorldConfig& cfg, Rng& rng) {
  ActionStep step = agent.action.steps.front();
  const PostureDist bias = trend_bias(agent.trend, cfg.learning_enabled);
  for (int part = 0; part < kBodyPartCount; ++part) {
    if (rng.bernoulli(agent.mutation_rate)) {
      step.postures[part] = sample_other_posture(bias, step.postures[part], rng);
    }
  }

  std::vector<ActionStep> steps{step};
  const auto arm = step.first_moving_arm();
  if (cfg.chaining_enabled && arm) {
    const int arm_slot = static_cast<int>(*arm);
    const PostureDist uniform{};
    while (static_cast<int>(steps.size()) < cfg.max_chain_length && rng.bernoulli(cfg.p_cont)) {
      ActionStep next;
      for (int part = 0; part < kBodyPartCount; ++part) {
        if (part == arm_slot) continue;
        next.postures[part] = sample_posture(uniform, rng);
      }
      next.postures[arm_slot] = opposite(steps.back().postures[arm_slot]);
      steps.push_back(next);
    }
  }
  return ChainedAction{std::move(steps), arm};
}

// Lazy imitation: scan the four neighbors in uniformly random order and copy
// the first action strictly fitter than the agent's own; otherwise keep the
// current action.
inline ChainedAction imitate(const Agent& agent, const std::array<const Agent*, 4>& neighbors,
                             const FitnessParams& params, Rng& rng) {
  const double own = chain_fitness(agent.action, params);
  std::array<int, 4> order{0, 1, 2, 3};
  rng.shuffle(order);
  for (int i : order) {
    if (chain_fitness(neighbors[i]->action, params) > own) return neighbors[i]->action;
  }
  return agent.action;
}

// Toroidal lattice of agents. One World drives one run; tick order and all
// draws are fixed, so a (config, seed) pair reproduces the metric series
// byte for byte.
class World {
 public:
  explicit World(const WorldConfig& cfg)
      : cfg_(cfg), params_(cfg.fitness), rng_(cfg.seed) {
    const int n = cfg_.agent_count();
    agents_.resize(n);
    neighbor_table_.resize(n);
    for (int i = 0; i < n; ++i) neighbor_table_[i] = compute_neighbors(i);
    if (cfg_.role_scheme == RoleScheme::Split) {
      std::vector<int> order(n);
      for (int i = 0; i < n; ++i) order[i] = i;
      rng_.shuffle(order);
      const int creators =
          static_cast<int>(cfg_.fraction_creators * n + 0.5);
      for (int i = 0; i < n; ++i) {
        agents_[order[i]].role = i < creators ? Role::Creator : Role::Imitator;
      }
    }
    const double f0 = chain_fitness(agents_.front().action, params_);
    for (Agent& a : agents_) {
      a.prev_fitness = f0;
      a.recent_fitness.push_back(f0);
    }
  }

  const WorldConfig& config() const { return cfg_; }
  const FitnessParams& params() const { return params_; }
  const std::vector<Agent>& agents() const { return agents_; }
  std::vector<Agent>& agents() { return agents_; }
  int iteration() const { return iteration_; }

  int diversity() const {
    std::set<std::vector<std::uint16_t>> distinct;
    for (const Agent& a : agents_) distinct.insert(a.action.encoded());
    return static_cast<int>(distinct.size());
  }

  Metrics metrics(int iteration) const {
    Metrics m;
    m.iteration = iteration;
    double sum = 0.0, max = 0.0, chain_sum = 0.0, rate_sum = 0.0;
    for (const Agent& a : agents_) {
      const double f = chain_fitness(a.action, params_);
      sum += f;
      max = std::max(max, f);
      chain_sum += a.action.length();
      rate_sum += a.mutation_rate;
    }
    const double n = static_cast<double>(agents_.size());
    m.mean_fitness = sum / n;
    m.max_fitness = max;
    m.diversity = diversity();
    m.mean_chain_length = chain_sum / n;
    m.mean_mutation_rate = rate_sum / n;
    return m;
  }

  // One synchronous round: every agent decides from the pre-tick state, then
  // all actions update at once. Invented actions are adopted only when
  // strictly fitter; every invention updates the inventor's trend stats.
  Metrics tick() {
    advance_actions();
    return metrics(++iteration_);
  }

  std::vector<Metrics> run() {
    std::vector<Metrics> series;
    series.reserve(cfg_.iterations + 1);
    series.push_back(metrics(0));
    for (int t = 1; t <= cfg_.iterations; ++t) {
      advance_actions();
      series.push_back(metrics(t));
    }
    iteration_ = cfg_.iterations;
    return series;
  }

  // The contextual-focus run: the schedule may flip fitness modes at period
  // boundaries, and the controller retunes each agent's mutation rate from
  // its own fitness trajectory after every round.
  std::vector<CfMetrics> run_cf(const CfConfig& cf) {
    std::vector<CfMetrics> series;
    series.reserve(cfg_.iterations + 1);
    series.push_back({metrics(0), fitness_mode_label(params_)});
    for (int t = 1; t <= cfg_.iterations; ++t) {
      params_ = shift_fitness(params_, cf.schedule, t);
      advance_actions();
      apply_controller(cf.controller);
      series.push_back({metrics(t), fitness_mode_label(params_)});
    }
    iteration_ = cfg_.iterations;
    return series;
  }

 private:
  std::array<const Agent*, 4> compute_neighbor_ptrs(int idx) const {
    std::array<const Agent*, 4> out{};
    for (int k = 0; k < 4; ++k) out[k] = &agents_[neighbor_table_[idx][k]];
    return out;
  }

  std::array<int, 4> compute_neighbors(int idx) const {
    const int w = cfg_.grid_width, h = cfg_.grid_height;
    const int x = idx % w, y = idx / w;
    return {
        ((y + h - 1) % h) * w + x,  // north
        ((y + 1) % h) * w + x,      // south
        y * w + (x + w - 1) % w,    // west
        y * w + (x + 1) % w,        // east
    };
  }

  void advance_actions() {
    const int n = static_cast<int>(agents_.size());
    std::vector<ChainedAction> next(n);
    for (int i = 0; i < n; ++i) {
      Agent& a = agents_[i];
      const bool invents =
          a.role == Role::Creator ||
          (a.role == Role::Mixed && rng_.bernoulli(cfg_.p_invent));
      if (invents) {
        ChainedAction candidate = invent(a, cfg_, rng_);
        const double cf = chain_fitness(candidate, params_, cfg_.max_chain_length);
        a.trend.add_sample(candidate.steps.front().moving_part_count(), cf);
        next[i] = cf > chain_fitness(a.action, params_) ? std::move(candidate) : a.action;
      } else {
        next[i] = imitate(a, compute_neighbor_ptrs(i), params_, rng_);
      }
    }
    for (int i = 0; i < n; ++i) agents_[i].action = std::move(next[i]);
  }

  void apply_controller(const FocusController& controller) {
    for (Agent& a : agents_) {
      const double current = chain_fitness(a.action, params_);
      double recent_best = a.recent_fitness.front();
      for (double f : a.recent_fitness) recent_best = std::max(recent_best, f);
      a.mutation_rate = update_mutation_rate(controller, a.mutation_rate, current,
                                             recent_best, a.prev_fitness);
      a.prev_fitness = current;
      a.recent_fitness.push_back(current);
      while (static_cast<int>(a.recent_fitness.size()) > controller.window) {
        a.recent_fitness.pop_front();
      }
    }
  }

  WorldConfig cfg_;
  FitnessParams params_;
  std::vector<Agent> agents_;
  std::vector<std::array<int, 4>> neighbor_table_;
  Rng rng_;
  int iteration_ = 0;
};

inline std::vector<Metrics> run(const WorldConfig& cfg) { return World(cfg).run(); }

inline std::vector<CfMetrics> run_cf(const WorldConfig& cfg, const CfConfig& cf) {
  return World(cfg).run_cf(cf);
}

}  // namespace crevo::evoc
