#include "vimocap/calibration.hpp"

#include <nlohmann/json.hpp>

#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include "vimocap/errors.hpp"
#include "vimocap/rotation.hpp"

namespace vimocap {

using nlohmann::json;

double calibration_objective(const CalibrationObservation& obs, const CalibrationResult& calib) {
    double total = 0.0;
    for (std::size_t n = 0; n < obs.sensors.size(); ++n) {
        const SensorPoses& s = obs.sensors[n];
        const Eigen::Matrix3d& s2b = calib.r_s2b[n];
        total += (calib.r_i2c * s.imu_a - s.bone_a * s2b).squaredNorm();
        total += (calib.r_i2c * s.imu_t - s.bone_t * s2b).squaredNorm();
    }
    return total;
}

namespace {

CalibrationResult solve_from(const CalibrationObservation& obs, const Eigen::Matrix3d& r_i2c_init,
                             const CalibrationOptions& options, double* objective_out,
                             bool* converged_out) {
    const std::size_t n_sensors = obs.sensors.size();
    CalibrationResult calib;
    calib.r_i2c = r_i2c_init;
    calib.r_s2b.assign(n_sensors, Eigen::Matrix3d::Identity());

    double prev = std::numeric_limits<double>::infinity();
    bool converged = false;
    for (int sweep = 0; sweep < options.max_sweeps; ++sweep) {
        // Fix R_I2C, update each R_S2B,n: argmin over S of
        // sum_f |R^(f) S - R_I2C R~(f)|^2  ->  S = proj(sum_f R^(f)^T R_I2C R~(f)).
        for (std::size_t n = 0; n < n_sensors; ++n) {
            const SensorPoses& s = obs.sensors[n];
            const Eigen::Matrix3d accum = s.bone_a.transpose() * calib.r_i2c * s.imu_a +
                                          s.bone_t.transpose() * calib.r_i2c * s.imu_t;
            calib.r_s2b[n] = project_to_so3(accum);
        }
        // Fix all R_S2B,n, update R_I2C: argmin over R of
        // sum |R X - Y|^2  ->  R = proj(sum Y X^T).
        Eigen::Matrix3d accum = Eigen::Matrix3d::Zero();
        for (std::size_t n = 0; n < n_sensors; ++n) {
            const SensorPoses& s = obs.sensors[n];
            accum += (s.bone_a * calib.r_s2b[n]) * s.imu_a.transpose();
            accum += (s.bone_t * calib.r_s2b[n]) * s.imu_t.transpose();
        }
        calib.r_i2c = project_to_so3(accum);

        const double objective = calibration_objective(obs, calib);
        if (prev - objective < options.objective_tolerance) {
            converged = true;
            prev = std::min(prev, objective);
            break;
        }
        prev = objective;
    }
    *objective_out = calibration_objective(obs, calib);
    *converged_out = converged;
    return calib;
}

}  // namespace

CalibrationResult calibrate_two_frame(const CalibrationObservation& obs,
                                      const CalibrationOptions& options) {
    if (obs.sensors.size() < 2) {
        throw RankDeficient("calibrate_two_frame: need at least 2 sensors");
    }
    const double min_separation = 5.0 * std::numbers::pi / 180.0;
    double max_separation = 0.0;
    for (const SensorPoses& s : obs.sensors) {
        if (!is_rotation(s.imu_a) || !is_rotation(s.imu_t) || !is_rotation(s.bone_a) ||
            !is_rotation(s.bone_t)) {
            throw NotARotation("calibrate_two_frame: observation not in SO(3)");
        }
        max_separation = std::max(max_separation, geodesic_distance(s.bone_a, s.bone_t));
    }
    if (max_separation < min_separation) {
        throw RankDeficient("calibrate_two_frame: A- and T-pose bone orientations too similar (" +
                            std::to_string(max_separation * 180.0 / std::numbers::pi) + " deg)");
    }

    CalibrationResult best;
    double best_objective = std::numeric_limits<double>::infinity();
    bool any_converged = false;
    for (int start = 0; start < std::max(1, options.num_starts); ++start) {
        const Eigen::Matrix3d init = start == 0
                                         ? Eigen::Matrix3d::Identity()
                                         : random_rotation(options.seed * 1000003ULL + start);
        double objective = 0.0;
        bool converged = false;
        CalibrationResult calib = solve_from(obs, init, options, &objective, &converged);
        any_converged = any_converged || converged;
        if (converged && objective < best_objective) {
            best_objective = objective;
            best = calib;
        }
    }
    if (!any_converged) {
        throw NonConvergence("calibrate_two_frame: no start converged within max_sweeps");
    }
    return best;
}

namespace {

const Eigen::Matrix3d& sensor_s2b(const CalibrationResult& calib, int sensor_id) {
    if (sensor_id < 0 || sensor_id >= calib.num_sensors()) {
        throw UnknownSensor("sensor id " + std::to_string(sensor_id) + " not in calibration");
    }
    return calib.r_s2b[sensor_id];
}

}  // namespace

Eigen::Matrix3d transform_orientation(const ImuMeasurement& meas, const CalibrationResult& calib) {
    return calib.r_i2c * meas.orientation * sensor_s2b(calib, meas.sensor_id).transpose();
}

Eigen::Vector3d transform_acceleration(const ImuMeasurement& meas, const CalibrationResult& calib) {
    sensor_s2b(calib, meas.sensor_id);
    return calib.r_i2c * meas.acceleration;
}

namespace {

json matrix_to_rowmajor(const Eigen::Matrix3d& m) {
    json out = json::array();
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            out.push_back(m(r, c));
        }
    }
    return out;
}

Eigen::Matrix3d rowmajor_to_matrix(const json& arr) {
    if (arr.size() != 9) {
        throw ConfigError("calibration file: rotation must be a row-major 9-tuple");
    }
    Eigen::Matrix3d m;
    for (int r = 0; r < 3; ++r) {
        for (int c = 0; c < 3; ++c) {
            m(r, c) = arr[3 * r + c].get<double>();
        }
    }
    return m;
}

}  // namespace

void save_calibration(const std::filesystem::path& path, const CalibrationResult& calib) {
    json doc;
    doc["format_version"] = 1;
    doc["r_i2c"] = matrix_to_rowmajor(calib.r_i2c);
    json sensors = json::array();
    for (int n = 0; n < calib.num_sensors(); ++n) {
        sensors.push_back({{"sensor", n}, {"r_s2b", matrix_to_rowmajor(calib.r_s2b[n])}});
    }
    doc["sensors"] = sensors;
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write calibration file " + path.string());
    }
    out << doc.dump(2) << "\n";
}

CalibrationResult load_calibration(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read calibration file " + path.string());
    }
    json doc = json::parse(in);
    if (doc.value("format_version", 0) != 1) {
        throw ConfigError("calibration file: unsupported format_version");
    }
    CalibrationResult calib;
    calib.r_i2c = rowmajor_to_matrix(doc.at("r_i2c"));
    calib.r_s2b.resize(doc.at("sensors").size());
    for (const auto& s : doc.at("sensors")) {
        const int id = s.at("sensor").get<int>();
        if (id < 0 || id >= static_cast<int>(calib.r_s2b.size())) {
            throw ConfigError("calibration file: sensor id out of range");
        }
        calib.r_s2b[id] = rowmajor_to_matrix(s.at("r_s2b"));
    }
    for (const Eigen::Matrix3d& m : calib.r_s2b) {
        if (!is_rotation(m) || !is_rotation(calib.r_i2c)) {
            throw NotARotation("calibration file: entry not in SO(3)");
        }
    }
    return calib;
}

}  // namespace vimocap
