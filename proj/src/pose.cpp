#include "vimocap/pose.hpp"

namespace vimocap {

PoseFrame::PoseFrame(int num_joints) {
    theta6d.resize(num_joints, 6);
    const Rotation6d id = identity_rotation6d();
    for (int j = 0; j < num_joints; ++j) {
        theta6d.row(j) = id.transpose();
    }
}

EulerPose pose_to_euler(const PoseFrame& pose) {
    EulerPose out;
    out.theta.resize(pose.num_joints(), 3);
    out.t = pose.t;
    for (int j = 0; j < pose.num_joints(); ++j) {
        const EulerResult e = matrix_to_euler(pose.rotation(j));
        out.theta.row(j) = e.angles.transpose();
        out.gimbal_lock = out.gimbal_lock || e.gimbal_lock;
    }
    return out;
}

PoseFrame euler_to_pose(const EulerPose& pose) {
    PoseFrame out(pose.num_joints());
    out.t = pose.t;
    for (int j = 0; j < pose.num_joints(); ++j) {
        out.set_rotation(j, euler_to_matrix(pose.theta.row(j).transpose()));
    }
    return out;
}

EulerMotion motion_to_euler(const MotionSequence& motion) {
    EulerMotion out;
    out.fps = motion.fps;
    out.frames.reserve(motion.frames.size());
    for (const PoseFrame& frame : motion.frames) {
        out.frames.push_back(pose_to_euler(frame));
    }
    return out;
}

MotionSequence euler_to_motion(const EulerMotion& motion) {
    MotionSequence out;
    out.fps = motion.fps;
    out.frames.reserve(motion.frames.size());
    for (const EulerPose& frame : motion.frames) {
        out.frames.push_back(euler_to_pose(frame));
    }
    return out;
}

}  // namespace vimocap
