#pragma once

#include <Eigen/Dense>

#include <vector>

#include "vimocap/rotation.hpp"

namespace vimocap {

// One skeletal pose: per-joint 6D rotations (row 0 = global root rotation,
// rows 1.. = local joint rotations) and the root translation in the
// reference camera frame.
struct PoseFrame {
    Eigen::Matrix<double, Eigen::Dynamic, 6> theta6d;
    Eigen::Vector3d t = Eigen::Vector3d::Zero();

    PoseFrame() = default;
    explicit PoseFrame(int num_joints);

    int num_joints() const { return static_cast<int>(theta6d.rows()); }
    Rotation6d rot6d(int j) const { return theta6d.row(j).transpose(); }
    void set_rot6d(int j, const Rotation6d& r) { theta6d.row(j) = r.transpose(); }
    Eigen::Matrix3d rotation(int j) const { return rotation6d_to_matrix(rot6d(j)); }
    void set_rotation(int j, const Eigen::Matrix3d& m) { set_rot6d(j, matrix_to_rotation6d(m)); }

    bool all_finite() const { return theta6d.allFinite() && t.allFinite(); }
};

// Euler view of the same pose (intrinsic XYZ per joint), used by the
// refinement stage. gimbal_lock records whether any joint sat on the
// degenerate pitch during conversion.
struct EulerPose {
    Eigen::MatrixX3d theta;
    Eigen::Vector3d t = Eigen::Vector3d::Zero();
    bool gimbal_lock = false;

    int num_joints() const { return static_cast<int>(theta.rows()); }
};

struct MotionSequence {
    std::vector<PoseFrame> frames;
    double fps = 60.0;

    int num_frames() const { return static_cast<int>(frames.size()); }
    double sampling_time() const { return 1.0 / fps; }
};

struct EulerMotion {
    std::vector<EulerPose> frames;
    double fps = 60.0;

    int num_frames() const { return static_cast<int>(frames.size()); }
    double sampling_time() const { return 1.0 / fps; }
};

// Lossless (rotation-wise) transforms between the 6D and Euler
// parameterizations of a pose; the Euler->6D direction always reproduces the
// same rotation matrices, the 6D->Euler direction flags gimbal lock.
EulerPose pose_to_euler(const PoseFrame& pose);
PoseFrame euler_to_pose(const EulerPose& pose);
EulerMotion motion_to_euler(const MotionSequence& motion);
MotionSequence euler_to_motion(const EulerMotion& motion);

}  // namespace vimocap
