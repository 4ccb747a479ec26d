#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace vimocap {

// Raw inertial sample: orientation and gravity-removed acceleration in the
// inertial frame F_I.
struct ImuMeasurement {
    int sensor_id = 0;
    Eigen::Matrix3d orientation = Eigen::Matrix3d::Identity();  // R~_n
    Eigen::Vector3d acceleration = Eigen::Vector3d::Zero();     // A_I,n, m/s^2
};

// Inertial-to-camera rotation plus one sensor-to-bone mounting rotation per
// input sensor (indexed by position in the skeleton's imu_map).
struct CalibrationResult {
    Eigen::Matrix3d r_i2c = Eigen::Matrix3d::Identity();
    std::vector<Eigen::Matrix3d> r_s2b;

    int num_sensors() const { return static_cast<int>(r_s2b.size()); }
};

// Per-sensor orientation pairs observed in the two calibration frames.
struct SensorPoses {
    Eigen::Matrix3d imu_a, imu_t;    // R~_n in F_I for the A- and T-pose frame
    Eigen::Matrix3d bone_a, bone_t;  // R^_b_n in F_C for the same frames
};

struct CalibrationObservation {
    std::vector<SensorPoses> sensors;
};

struct CalibrationOptions {
    int max_sweeps = 100;
    double objective_tolerance = 1e-12;  // stop when a sweep improves by less
    int num_starts = 8;                  // deterministic multi-start (seeded)
    std::uint64_t seed = 1;
};

// Least-squares fit of R_I2C and all R_S2B,n to both calibration frames by
// alternating closed-form Procrustes updates with SO(3) projection.
// Requires >= 2 sensors and at least one sensor whose bone orientation moves
// by >= 5 degrees between the frames (throws RankDeficient otherwise);
// throws NonConvergence if no start settles within max_sweeps.
CalibrationResult calibrate_two_frame(const CalibrationObservation& obs,
                                      const CalibrationOptions& options = {});

// Sum of squared Frobenius residuals of Eqs. R_I2C R~ = R^ R_S2B over both
// frames; the quantity the solver minimizes.
double calibration_objective(const CalibrationObservation& obs, const CalibrationResult& calib);

// R_b_n = R_I2C * R~_n * R_S2B,n^T. Throws UnknownSensor on a bad id.
Eigen::Matrix3d transform_orientation(const ImuMeasurement& meas, const CalibrationResult& calib);

// A_n = R_I2C * A_I,n. Throws UnknownSensor on a bad id.
Eigen::Vector3d transform_acceleration(const ImuMeasurement& meas, const CalibrationResult& calib);

CalibrationResult load_calibration(const std::filesystem::path& path);
void save_calibration(const std::filesystem::path& path, const CalibrationResult& calib);

}  // namespace vimocap
