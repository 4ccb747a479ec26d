#pragma once

#include <Eigen/Dense>

#include <vector>

#include "vimocap/pose.hpp"
#include "vimocap/skeleton.hpp"

namespace vimocap {

// Forward-kinematics output in the reference camera frame.
struct FkResult {
    std::vector<Eigen::Vector3d> joint_positions;        // N_J
    std::vector<Eigen::Matrix3d> global_rotations;       // N_J, accumulated
    std::vector<Eigen::Vector3d> marker_positions;       // N_M
    std::vector<Eigen::Vector3d> imu_positions;          // per imu_map entry
    std::vector<Eigen::Matrix3d> imu_orientations;       // per imu_map entry

    // Orientation of the bone ending at `child_joint`: the accumulated
    // rotation of its proximal joint.
    const Eigen::Matrix3d& bone_orientation(int child_joint, const SkeletonConfig& s) const {
        return global_rotations[s.joints[child_joint].parent];
    }
    Eigen::Vector3d bone_midpoint(int child_joint, const SkeletonConfig& s) const {
        return 0.5 * (joint_positions[s.joints[child_joint].parent] +
                      joint_positions[child_joint]);
    }
};

// Root position = t; child position = parent position + parent global
// rotation * rest offset. Markers read their mapped joints; IMUs sit at the
// midpoint of their bone and inherit its orientation.
// Throws DimensionMismatch if the pose and skeleton disagree.
FkResult forward_kinematics(const SkeletonConfig& skeleton, const PoseFrame& pose);

// Same chain but root-relative (as if t were zero).
FkResult forward_kinematics_root_relative(const SkeletonConfig& skeleton, const PoseFrame& pose);

}  // namespace vimocap
