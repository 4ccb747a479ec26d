#include "vimocap/forward_kinematics.hpp"

#include "vimocap/errors.hpp"

namespace vimocap {

namespace {

FkResult run_fk(const SkeletonConfig& skeleton, const PoseFrame& pose, const Eigen::Vector3d& root) {
    const int n = skeleton.num_joints();
    if (pose.num_joints() != n) {
        throw DimensionMismatch("forward_kinematics: pose has " +
                                std::to_string(pose.num_joints()) + " joints, skeleton has " +
                                std::to_string(n));
    }
    FkResult out;
    out.joint_positions.resize(n);
    out.global_rotations.resize(n);
    out.joint_positions[0] = root;
    out.global_rotations[0] = pose.rotation(0);
    for (int j = 1; j < n; ++j) {
        const int p = skeleton.joints[j].parent;
        out.joint_positions[j] =
            out.joint_positions[p] + out.global_rotations[p] * skeleton.joints[j].offset;
        out.global_rotations[j] = out.global_rotations[p] * pose.rotation(j);
    }
    out.marker_positions.reserve(skeleton.marker_map.size());
    for (int m : skeleton.marker_map) {
        out.marker_positions.push_back(out.joint_positions[m]);
    }
    out.imu_positions.reserve(skeleton.imu_map.size());
    out.imu_orientations.reserve(skeleton.imu_map.size());
    for (int b : skeleton.imu_map) {
        out.imu_positions.push_back(out.bone_midpoint(b, skeleton));
        out.imu_orientations.push_back(out.bone_orientation(b, skeleton));
    }
    return out;
}

}  // namespace

FkResult forward_kinematics(const SkeletonConfig& skeleton, const PoseFrame& pose) {
    return run_fk(skeleton, pose, pose.t);
}

FkResult forward_kinematics_root_relative(const SkeletonConfig& skeleton, const PoseFrame& pose) {
    return run_fk(skeleton, pose, Eigen::Vector3d::Zero());
}

}  // namespace vimocap
