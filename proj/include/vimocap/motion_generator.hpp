#pragma once

#include <cstdint>
#include <string>

#include "vimocap/pose.hpp"
#include "vimocap/skeleton.hpp"

namespace vimocap {

enum class MotionKind { kReach, kSquat, kSpin, kDanceLoop, kRandomSpline };

MotionKind motion_kind_from_string(const std::string& name);
std::string to_string(MotionKind kind);

// Scripted stage-frame motion: deterministic for (kind, seed), built from
// sums of sinusoids so every joint-angle trajectory is smooth, stays inside
// the skeleton's limits, and (for kRandomSpline at fps >= 16) changes by
// less than pi/8 between consecutive frames. The pelvis starts near
// (0, 0.9, 0) with a gentle wander. Requires frames >= 3.
MotionSequence generate_motion(const SkeletonConfig& skeleton, MotionKind kind, int frames,
                               double fps, std::uint64_t seed);

// Applies a rigid transform to a sequence: root rotation R -> G * R,
// translation t -> G * t + h. Used to move stage-frame motion into F_C.
MotionSequence transform_motion(const MotionSequence& motion, const Eigen::Matrix3d& g,
                                const Eigen::Vector3d& h);

}  // namespace vimocap
