#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace crevo::evoc {

enum class Posture : std::uint8_t { Up = 0, Down = 1, Still = 2 };

enum class BodyPart : std::uint8_t {
  Head = 0,
  LeftArm = 1,
  RightArm = 2,
  LeftLeg = 3,
  RightLeg = 4,
  Hips = 5,
};

inline constexpr int kBodyPartCount = 6;
inline constexpr int kPostureCount = 3;
inline constexpr int kStepSpaceSize = 729;  // 3^6

constexpr bool is_moving(Posture p) { return p != Posture::Still; }

// Defined for the two moving postures only.
inline Posture opposite(Posture p) {
  switch (p) {
    case Posture::Up: return Posture::Down;
    case Posture::Down: return Posture::Up;
    case Posture::Still: break;
  }
  throw std::invalid_argument("opposite(STILL) is undefined");
}

inline const char* to_string(Posture p) {
  switch (p) {
    case Posture::Up: return "UP";
    case Posture::Down: return "DOWN";
    case Posture::Still: return "STILL";
  }
  return "?";
}

inline const char* to_string(BodyPart b) {
  switch (b) {
    case BodyPart::Head: return "head";
    case BodyPart::LeftArm: return "left_arm";
    case BodyPart::RightArm: return "right_arm";
    case BodyPart::LeftLeg: return "left_leg";
    case BodyPart::RightLeg: return "right_leg";
    case BodyPart::Hips: return "hips";
  }
  return "?";
}

// One posture assignment for all six body parts. Default is the immobile
// all-STILL step.
struct ActionStep {
  std::array<Posture, kBodyPartCount> postures{Posture::Still, Posture::Still,
                                               Posture::Still, Posture::Still,
                                               Posture::Still, Posture::Still};

  Posture get(BodyPart part) const { return postures[static_cast<int>(part)]; }
  void set(BodyPart part, Posture p) { postures[static_cast<int>(part)] = p; }

  bool operator==(const ActionStep&) const = default;

  int moving_part_count() const {
    int n = 0;
    for (Posture p : postures) n += is_moving(p) ? 1 : 0;
    return n;
  }

  bool moves_arm() const {
    return is_moving(get(BodyPart::LeftArm)) || is_moving(get(BodyPart::RightArm));
  }

  // LEFT_ARM takes precedence over RIGHT_ARM.
  std::optional<BodyPart> first_moving_arm() const {
    if (is_moving(get(BodyPart::LeftArm))) return BodyPart::LeftArm;
    if (is_moving(get(BodyPart::RightArm))) return BodyPart::RightArm;
    return std::nullopt;
  }

  // Canonical enumeration of the 729-member step space: base-3 digits in
  // body-part order, posture enum order.
  int index() const {
    int idx = 0;
    for (int part = 0; part < kBodyPartCount; ++part) {
      idx = idx * kPostureCount + static_cast<int>(postures[part]);
    }
    return idx;
  }

  static ActionStep from_index(int idx) {
    if (idx < 0 || idx >= kStepSpaceSize) {
      throw std::out_of_range("step index outside [0, 729)");
    }
    ActionStep s;
    for (int part = kBodyPartCount - 1; part >= 0; --part) {
      s.postures[part] = static_cast<Posture>(idx % kPostureCount);
      idx /= kPostureCount;
    }
    return s;
  }
};

// An ordered multi-step action. chain_arm is derived data: the first moving
// arm of step 1, present whenever that step moves an arm. Structural identity
// (and hence diversity counting) is the step list alone.
struct ChainedAction {
  std::vector<ActionStep> steps;
  std::optional<BodyPart> chain_arm;

  static ChainedAction single(const ActionStep& s) {
    return ChainedAction{{s}, s.first_moving_arm()};
  }

  static ChainedAction from_steps(std::vector<ActionStep> steps) {
    auto arm = steps.empty() ? std::nullopt : steps.front().first_moving_arm();
    return ChainedAction{std::move(steps), arm};
  }

  int length() const { return static_cast<int>(steps.size()); }

  bool operator==(const ChainedAction& other) const { return steps == other.steps; }

  // Compact encoding used for diversity counting and hashing.
  std::vector<std::uint16_t> encoded() const {
    std::vector<std::uint16_t> e;
    e.reserve(steps.size());
    for (const ActionStep& s : steps) e.push_back(static_cast<std::uint16_t>(s.index()));
    return e;
  }
};

struct ChainViolation {
  std::string rule;
  int step_index = 0;  // 1-indexed step where the rule failed
};

inline constexpr int kUnboundedChainLength = INT32_MAX;

// Returns nullopt when the step list forms a valid chain:
//   - non-empty, length within the cap;
//   - if n >= 2, step 1 moves an arm and chain_arm (when given) names the
//     first moving arm;
//   - every interior step moves the chain arm opposite to the step before it.
// The final step is exempt: a non-alternating step terminates the chain but
// remains part of it.
inline std::optional<ChainViolation> validate_chain(
    const std::vector<ActionStep>& steps, std::optional<BodyPart> chain_arm,
    int max_chain_length = kUnboundedChainLength) {
  const int n = static_cast<int>(steps.size());
  if (n == 0) return ChainViolation{"chain must contain at least one step", 0};
  if (n > max_chain_length) {
    return ChainViolation{"chain exceeds max_chain_length", n};
  }
  if (n == 1) return std::nullopt;

  const auto arm = steps.front().first_moving_arm();
  if (!arm) return ChainViolation{"first step must move an arm", 1};
  if (chain_arm && *chain_arm != *arm) {
    return ChainViolation{"chain_arm must be the first moving arm of step 1", 1};
  }

  Posture prev = steps.front().get(*arm);
  for (int k = 1; k + 1 < n; ++k) {  // interior steps, 0-based
    const Posture cur = steps[k].get(*arm);
    if (!is_moving(cur) || cur != opposite(prev)) {
      return ChainViolation{
          "interior step must move the chain arm opposite to the previous step",
          k + 1};
    }
    prev = cur;
  }
  return std::nullopt;
}

inline std::optional<ChainViolation> validate_chain(
    const ChainedAction& action, int max_chain_length = kUnboundedChainLength) {
  return validate_chain(action.steps, action.chain_arm, max_chain_length);
}

}  // namespace crevo::evoc
