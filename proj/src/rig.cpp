#include "vimocap/rig.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "vimocap/errors.hpp"
#include "vimocap/rng.hpp"

namespace vimocap {

Eigen::Vector3d finite_diff_acceleration(const Eigen::Vector3d& prev, const Eigen::Vector3d& cur,
                                         const Eigen::Vector3d& next, double st) {
    return (next - 2.0 * cur + prev) / (st * st);
}

namespace {

// Positions of every supervision bone's midpoint for one frame.
std::vector<Eigen::Vector3d> supervision_positions(const SkeletonConfig& s, const FkResult& fk) {
    std::vector<Eigen::Vector3d> out;
    out.reserve(s.supervision_bones.size());
    for (int b : s.supervision_bones) {
        out.push_back(fk.bone_midpoint(b, s));
    }
    return out;
}

}  // namespace

std::vector<FrameSample> render_observations(const MotionSequence& seq,
                                             const std::vector<CameraModel>& cameras,
                                             const SkeletonConfig& skeleton,
                                             const CalibrationResult& calibration,
                                             const NoiseSpec& noise, std::uint64_t seed) {
    if (cameras.empty()) {
        throw ConfigError("render_observations: need at least one camera");
    }
    if (calibration.num_sensors() != skeleton.num_input_imus()) {
        throw DimensionMismatch("render_observations: calibration sensor count != imu_map size");
    }
    const int frames = seq.num_frames();
    const double st = seq.sampling_time();
    auto rng = make_rng(seed, 0x0b5);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::uniform_real_distribution<double> uniform(0.0, 1.0);

    std::vector<FkResult> fk(frames);
    std::vector<std::vector<Eigen::Vector3d>> sup_pos(frames);
    for (int f = 0; f < frames; ++f) {
        fk[f] = forward_kinematics(skeleton, seq.frames[f]);
        sup_pos[f] = supervision_positions(skeleton, fk[f]);
    }

    // Map each input sensor to its slot in the supervision list so both
    // streams share one acceleration evaluation.
    std::vector<int> input_slot(skeleton.num_input_imus(), -1);
    for (int n = 0; n < skeleton.num_input_imus(); ++n) {
        for (int k = 0; k < skeleton.num_supervision_bones(); ++k) {
            if (skeleton.supervision_bones[k] == skeleton.imu_map[n]) {
                input_slot[n] = k;
            }
        }
    }

    std::vector<FrameSample> out(frames);
    for (int f = 0; f < frames; ++f) {
        FrameSample& sample = out[f];
        sample.index = f;
        sample.st = st;
        sample.gt_pose = seq.frames[f];

        sample.keypoints.resize(cameras.size());
        for (std::size_t c = 0; c < cameras.size(); ++c) {
            const CameraModel& cam = cameras[c];
            KeypointObservation& obs = sample.keypoints[c];
            const int nm = skeleton.num_markers();
            obs.p.resize(2, nm);
            obs.p_c.resize(2, nm);
            obs.sigma.resize(nm);
            for (int m = 0; m < nm; ++m) {
                const Eigen::Vector2d offset(noise.keypoint_std_px * gauss(rng),
                                             noise.keypoint_std_px * gauss(rng));
                const bool dropped = uniform(rng) < noise.keypoint_dropout;
                Eigen::Vector2d pixel(cam.cx, cam.cy);
                double sigma = 0.0;
                if (!dropped) {
                    try {
                        pixel = project(cam, fk[f].marker_positions[m]) + offset;
                        sigma = std::clamp(1.0 - offset.norm() / noise.confidence_scale_px, 0.0, 1.0);
                    } catch (const BehindCamera&) {
                        pixel = Eigen::Vector2d(cam.cx, cam.cy);
                        sigma = 0.0;
                    }
                }
                obs.p.col(m) = pixel;
                obs.p_c.col(m) = canonicalize_keypoint(cam, pixel);
                obs.sigma[m] = sigma;
            }
        }

        const int fp = std::clamp(f, 1, frames - 2);  // stencil center for boundary frames
        sample.sup_orientation.resize(skeleton.num_supervision_bones());
        sample.sup_acceleration.resize(skeleton.num_supervision_bones());
        for (int k = 0; k < skeleton.num_supervision_bones(); ++k) {
            const int bone = skeleton.supervision_bones[k];
            const Eigen::Matrix3d wobble =
                random_small_rotation(noise.imu_orientation_std_rad, rng());
            sample.sup_orientation[k] = fk[f].bone_orientation(bone, skeleton) * wobble;
            Eigen::Vector3d accel = finite_diff_acceleration(
                sup_pos[fp - 1][k], sup_pos[fp][k], sup_pos[fp + 1][k], st);
            accel += noise.imu_accel_std * Eigen::Vector3d(gauss(rng), gauss(rng), gauss(rng));
            sample.sup_acceleration[k] = accel;
        }

        sample.imu_raw.resize(skeleton.num_input_imus());
        sample.imu_orientation.resize(skeleton.num_input_imus());
        sample.imu_acceleration.resize(skeleton.num_input_imus());
        for (int n = 0; n < skeleton.num_input_imus(); ++n) {
            const int slot = input_slot[n];
            const Eigen::Matrix3d r_b = slot >= 0
                                            ? sample.sup_orientation[slot]
                                            : fk[f].bone_orientation(skeleton.imu_map[n], skeleton);
            Eigen::Vector3d a_n;
            if (slot >= 0) {
                a_n = sample.sup_acceleration[slot];
            } else {
                const Eigen::Vector3d prev = fk[fp - 1].bone_midpoint(skeleton.imu_map[n], skeleton);
                const Eigen::Vector3d cur = fk[fp].bone_midpoint(skeleton.imu_map[n], skeleton);
                const Eigen::Vector3d next = fk[fp + 1].bone_midpoint(skeleton.imu_map[n], skeleton);
                a_n = finite_diff_acceleration(prev, cur, next, st);
            }
            sample.imu_orientation[n] = r_b;
            sample.imu_acceleration[n] = a_n;
            ImuMeasurement& raw = sample.imu_raw[n];
            raw.sensor_id = n;
            raw.orientation = calibration.r_i2c.transpose() * r_b * calibration.r_s2b[n];
            raw.acceleration = calibration.r_i2c.transpose() * a_n;
        }
    }
    return out;
}

int input_dimension(const SkeletonConfig& skeleton) {
    return 3 * skeleton.num_markers() + 12 * skeleton.num_input_imus() + kNumKeyBones;
}

Eigen::VectorXd assemble_input(const FrameSample& frame, const SkeletonConfig& skeleton) {
    const int nm = skeleton.num_markers();
    const int ni = skeleton.num_input_imus();
    if (frame.keypoints.empty() || frame.keypoints[0].p_c.cols() != nm ||
        static_cast<int>(frame.imu_orientation.size()) != ni ||
        static_cast<int>(frame.imu_acceleration.size()) != ni) {
        throw DimensionMismatch("assemble_input: frame does not match skeleton maps");
    }
    Eigen::VectorXd x(input_dimension(skeleton));
    int at = 0;
    const KeypointObservation& obs = frame.keypoints[0];  // inference camera
    for (int m = 0; m < nm; ++m) {
        x[at++] = obs.p_c(0, m);
        x[at++] = obs.p_c(1, m);
    }
    for (int m = 0; m < nm; ++m) {
        x[at++] = obs.sigma[m];
    }
    for (int n = 0; n < ni; ++n) {
        const Eigen::Matrix3d& r = frame.imu_orientation[n];
        for (int row = 0; row < 3; ++row) {
            for (int col = 0; col < 3; ++col) {
                x[at++] = r(row, col);
            }
        }
    }
    for (int n = 0; n < ni; ++n) {
        x.segment<3>(at) = frame.imu_acceleration[n];
        at += 3;
    }
    x.segment<kNumKeyBones>(at) = skeleton.key_bone_lengths();
    return x;
}

CalibrationResult random_calibration(int num_sensors, std::uint64_t seed) {
    CalibrationResult calib;
    calib.r_i2c = random_rotation(mix_seed(seed, 0xca11));
    calib.r_s2b.resize(num_sensors);
    for (int n = 0; n < num_sensors; ++n) {
        calib.r_s2b[n] = random_rotation(mix_seed(seed, 0xca12 + n));
    }
    return calib;
}

CalibrationObservation make_calibration_observation(const SkeletonConfig& skeleton,
                                                    const CalibrationResult& calibration,
                                                    double orientation_noise_rad,
                                                    std::uint64_t seed) {
    if (calibration.num_sensors() != skeleton.num_input_imus()) {
        throw DimensionMismatch("make_calibration_observation: sensor count mismatch");
    }
    const int n_joints = skeleton.num_joints();

    // T-pose: the rest skeleton. A-pose: arms lowered 45 deg, knees bent 20 deg.
    EulerPose t_pose;
    t_pose.theta = Eigen::MatrixX3d::Zero(n_joints, 3);
    t_pose.t = Eigen::Vector3d(0.0, 0.9, 3.0);
    EulerPose a_pose = t_pose;
    const double arm = 45.0 * std::numbers::pi / 180.0;
    const double knee = 20.0 * std::numbers::pi / 180.0;
    auto set_axis = [&](const char* name, int axis, double value) {
        const int j = skeleton.joint_index(name);
        if (j >= 0) {
            a_pose.theta(j, axis) = value;
        }
    };
    set_axis("clavicle_l", 2, -arm);
    set_axis("clavicle_r", 2, arm);
    set_axis("upleg_l", 0, knee);
    set_axis("upleg_r", 0, knee);
    set_axis("lowleg_l", 0, -knee);
    set_axis("lowleg_r", 0, -knee);

    const FkResult fk_t = forward_kinematics(skeleton, euler_to_pose(t_pose));
    const FkResult fk_a = forward_kinematics(skeleton, euler_to_pose(a_pose));

    auto rng = make_rng(seed, 0x0b51);
    auto wobble = [&](const Eigen::Matrix3d& m) {
        return m * random_small_rotation(orientation_noise_rad, rng());
    };

    CalibrationObservation obs;
    obs.sensors.resize(skeleton.num_input_imus());
    for (int n = 0; n < skeleton.num_input_imus(); ++n) {
        const int bone = skeleton.imu_map[n];
        SensorPoses& s = obs.sensors[n];
        const Eigen::Matrix3d bone_a = fk_a.bone_orientation(bone, skeleton);
        const Eigen::Matrix3d bone_t = fk_t.bone_orientation(bone, skeleton);
        s.imu_a = wobble(calibration.r_i2c.transpose() * bone_a * calibration.r_s2b[n]);
        s.imu_t = wobble(calibration.r_i2c.transpose() * bone_t * calibration.r_s2b[n]);
        s.bone_a = wobble(bone_a);
        s.bone_t = wobble(bone_t);
    }
    return obs;
}

}  // namespace vimocap
