#pragma once

#include <nlohmann/json.hpp>

#include "vimocap/calibration.hpp"
#include "vimocap/camera.hpp"
#include "vimocap/rig.hpp"
#include "vimocap/skeleton.hpp"

namespace vimocap {

nlohmann::json skeleton_to_json(const SkeletonConfig& skeleton);
SkeletonConfig skeleton_from_json(const nlohmann::json& doc);

nlohmann::json camera_to_json(const CameraModel& camera);
CameraModel camera_from_json(const nlohmann::json& doc);

nlohmann::json calibration_to_json(const CalibrationResult& calib);
CalibrationResult calibration_from_json(const nlohmann::json& doc);

nlohmann::json noise_to_json(const NoiseSpec& noise);
NoiseSpec noise_from_json(const nlohmann::json& doc);

nlohmann::json matrix3_to_json(const Eigen::Matrix3d& m);  // row-major 9-tuple
Eigen::Matrix3d matrix3_from_json(const nlohmann::json& arr);

}  // namespace vimocap
