#pragma once

#include <Eigen/Dense>

#include <vector>

namespace vimocap {

// Pinhole camera. Extrinsics map the reference frame F_C (the frame all
// poses live in) to this camera's frame; the designated inference camera is
// index 0 in a rig and carries identity extrinsics.
struct CameraModel {
    double fx = 1000.0, fy = 1000.0;  // pixels
    double cx = 640.0, cy = 360.0;
    int width = 1280, height = 720;
    Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d translation = Eigen::Vector3d::Zero();

    Eigen::Vector3d to_camera(const Eigen::Vector3d& x) const {
        return rotation * x + translation;
    }
};

// Pinhole projection of a point in F_C, pixels. Throws BehindCamera when the
// depth in the camera frame is <= 1e-6 m.
Eigen::Vector2d project(const CameraModel& camera, const Eigen::Vector3d& x);

// Inverse-intrinsics map onto the Z=1 plane:
// p_c = ((p_x - cx) / fx, (p_y - cy) / fy).
Eigen::Vector2d canonicalize_keypoint(const CameraModel& camera, const Eigen::Vector2d& p);

struct RigConfig {
    int num_cameras = 4;
    double ring_radius_m = 3.0;
    double ring_height_m = 1.5;
    Eigen::Vector3d look_at = Eigen::Vector3d(0.0, 0.9, 0.0);  // stage frame
    double fx = 1100.0, fy = 1100.0;
    double cx = 640.0, cy = 360.0;
    int width = 1280, height = 720;
};

// Cameras evenly spaced on a ring around the stage origin, all expressed in
// F_C = the frame of camera 0. stage_to_ref carries the transform that moves
// stage-frame geometry (e.g. generated motion) into F_C.
struct CameraRig {
    std::vector<CameraModel> cameras;
    Eigen::Matrix3d stage_to_ref_rotation = Eigen::Matrix3d::Identity();
    Eigen::Vector3d stage_to_ref_translation = Eigen::Vector3d::Zero();
};

CameraRig build_rig(const RigConfig& config);

}  // namespace vimocap
