#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <vector>

#include "vimocap/calibration.hpp"
#include "vimocap/camera.hpp"
#include "vimocap/forward_kinematics.hpp"
#include "vimocap/pose.hpp"
#include "vimocap/skeleton.hpp"

namespace vimocap {

// 2D detections of one camera for one frame.
struct KeypointObservation {
    Eigen::Matrix2Xd p;    // pixels, one column per marker
    Eigen::VectorXd sigma;  // confidences in [0, 1]; 0 marks a dropout
    Eigen::Matrix2Xd p_c;  // canonicalized onto the Z=1 plane
};

// Everything the pipeline observes (plus ground truth) for one frame.
struct FrameSample {
    PoseFrame gt_pose;
    std::vector<KeypointObservation> keypoints;      // per camera
    std::vector<ImuMeasurement> imu_raw;             // per input sensor, frame F_I
    std::vector<Eigen::Matrix3d> imu_orientation;    // calibrated R_b_n in F_C
    std::vector<Eigen::Vector3d> imu_acceleration;   // calibrated A_n in F_C
    std::vector<Eigen::Matrix3d> sup_orientation;    // per supervision bone, F_C
    std::vector<Eigen::Vector3d> sup_acceleration;   // per supervision bone, F_C
    int index = 0;
    double st = 0.0;  // sampling time, seconds
};

struct NoiseSpec {
    double keypoint_std_px = 0.0;
    double keypoint_dropout = 0.0;       // probability of sigma = 0
    double confidence_scale_px = 10.0;   // s0 in sigma = clamp(1 - |noise| / s0, 0, 1)
    double imu_orientation_std_rad = 0.0;
    double imu_accel_std = 0.0;          // m/s^2
};

// Central second difference (P(t+1) - 2 P(t) + P(t-1)) / st^2.
Eigen::Vector3d finite_diff_acceleration(const Eigen::Vector3d& prev, const Eigen::Vector3d& cur,
                                         const Eigen::Vector3d& next, double st);

// Renders noisy keypoints (with confidences), raw + calibrated input-IMU
// streams and supervision-bone streams for every frame of a ground-truth
// sequence. Deterministic for (inputs, seed). Boundary frames reuse the
// nearest interior acceleration. Dropped-out keypoints keep sigma = 0 and
// p at the principal point.
std::vector<FrameSample> render_observations(const MotionSequence& seq,
                                             const std::vector<CameraModel>& cameras,
                                             const SkeletonConfig& skeleton,
                                             const CalibrationResult& calibration,
                                             const NoiseSpec& noise, std::uint64_t seed);

// Length of the per-frame network input vector for this skeleton.
int input_dimension(const SkeletonConfig& skeleton);

// [p_c, sigma, R_b (row-major), A, L_k] of the designated inference camera
// (index 0). Throws DimensionMismatch when counts disagree with the skeleton.
Eigen::VectorXd assemble_input(const FrameSample& frame, const SkeletonConfig& skeleton);

// Ground-truth calibration with a random R_I2C and per-sensor mounting
// rotations, deterministic for seed.
CalibrationResult random_calibration(int num_sensors, std::uint64_t seed);

// Two-frame (A-pose / T-pose) calibration observations consistent with
// `calibration` up to `orientation_noise_rad` perturbations on every matrix.
CalibrationObservation make_calibration_observation(const SkeletonConfig& skeleton,
                                                    const CalibrationResult& calibration,
                                                    double orientation_noise_rad,
                                                    std::uint64_t seed);

}  // namespace vimocap
