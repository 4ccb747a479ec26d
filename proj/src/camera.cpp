#include "vimocap/camera.hpp"

#include <cmath>
#include <numbers>

#include "vimocap/errors.hpp"

namespace vimocap {

Eigen::Vector2d project(const CameraModel& camera, const Eigen::Vector3d& x) {
    const Eigen::Vector3d xc = camera.to_camera(x);
    if (xc.z() <= 1e-6) {
        throw BehindCamera("project: point depth " + std::to_string(xc.z()) + " m");
    }
    return {camera.fx * xc.x() / xc.z() + camera.cx, camera.fy * xc.y() / xc.z() + camera.cy};
}

Eigen::Vector2d canonicalize_keypoint(const CameraModel& camera, const Eigen::Vector2d& p) {
    return {(p.x() - camera.cx) / camera.fx, (p.y() - camera.cy) / camera.fy};
}

CameraRig build_rig(const RigConfig& config) {
    const Eigen::Vector3d up(0.0, 1.0, 0.0);
    std::vector<Eigen::Matrix3d> stage_rot(config.num_cameras);
    std::vector<Eigen::Vector3d> stage_trans(config.num_cameras);
    for (int i = 0; i < config.num_cameras; ++i) {
        const double angle = 2.0 * std::numbers::pi * i / config.num_cameras;
        const Eigen::Vector3d position(config.ring_radius_m * std::sin(angle),
                                       config.ring_height_m,
                                       config.ring_radius_m * std::cos(angle));
        const Eigen::Vector3d forward = (config.look_at - position).normalized();
        const Eigen::Vector3d right = forward.cross(up).normalized();
        const Eigen::Vector3d down = forward.cross(right);  // image y grows downward
        Eigen::Matrix3d r;
        r.row(0) = right.transpose();
        r.row(1) = down.transpose();
        r.row(2) = forward.transpose();
        stage_rot[i] = r;
        stage_trans[i] = -r * position;
    }

    CameraRig rig;
    rig.stage_to_ref_rotation = stage_rot[0];
    rig.stage_to_ref_translation = stage_trans[0];
    rig.cameras.resize(config.num_cameras);
    for (int i = 0; i < config.num_cameras; ++i) {
        CameraModel& cam = rig.cameras[i];
        cam.fx = config.fx;
        cam.fy = config.fy;
        cam.cx = config.cx;
        cam.cy = config.cy;
        cam.width = config.width;
        cam.height = config.height;
        if (i == 0) {
            cam.rotation = Eigen::Matrix3d::Identity();
            cam.translation = Eigen::Vector3d::Zero();
        } else {
            cam.rotation = stage_rot[i] * stage_rot[0].transpose();
            cam.translation = stage_trans[i] - cam.rotation * stage_trans[0];
        }
    }
    return rig;
}

}  // namespace vimocap
