#pragma once

#include <Eigen/Dense>

#include <array>
#include <filesystem>
#include <string>
#include <vector>

namespace vimocap {

struct Joint {
    std::string name;
    int parent = -1;  // -1 for the root; parents precede children
    Eigen::Vector3d offset = Eigen::Vector3d::Zero();  // rest offset from parent, meters
};

// Number and order of the key bone lengths fed to the trackers.
inline constexpr int kNumKeyBones = 7;
extern const std::array<const char*, kNumKeyBones> kKeyBoneNames;  // uparm..spine

// Skeleton definition shared by the rig, the trackers and the refiner.
//
// Bones are identified by their distal (child) joint: bone j spans
// parent(j) -> j, its rest length is |offset(j)|, and its orientation is the
// accumulated global rotation of the proximal joint parent(j). Sensor and
// tracker maps below all use this child-joint bone id.
struct SkeletonConfig {
    std::vector<Joint> joints;

    // Child joint realizing each key bone, in kKeyBoneNames order.
    std::array<int, kNumKeyBones> key_bone_joints{};

    std::vector<int> marker_map;  // joint index per marker
    std::vector<int> imu_map;     // bone id per input IMU sensor

    // Bones carrying orientation/acceleration supervision during training
    // (a superset of imu_map; default: every bone).
    std::vector<int> supervision_bones;

    // Per-joint Euler-angle limits, radians. Row 0 (root) is unconstrained.
    Eigen::MatrixX3d limits_min, limits_max;

    // Endpoint joints emitted by the limb and body trackers, and the bones
    // (endpoint joint pairs) whose lengths constrain them. Body bones may
    // borrow limb endpoints.
    std::vector<int> limb_endpoints, body_endpoints;
    std::vector<std::array<int, 2>> limb_bones, body_bones;

    int num_joints() const { return static_cast<int>(joints.size()); }
    int num_markers() const { return static_cast<int>(marker_map.size()); }
    int num_input_imus() const { return static_cast<int>(imu_map.size()); }
    int num_supervision_bones() const { return static_cast<int>(supervision_bones.size()); }

    double bone_length(int child_joint) const { return joints[child_joint].offset.norm(); }
    Eigen::Matrix<double, kNumKeyBones, 1> key_bone_lengths() const;

    int joint_index(const std::string& name) const;  // -1 if absent

    // Checks the structural invariants; throws on violation.
    void validate() const;
};

// The built-in 19-joint humanoid: pelvis(root), spine, chest, neck, head,
// L/R clavicle-uparm-lowarm-hand chains, L/R upleg-lowleg-foot chains.
// Markers sit on every joint (N_M = 19); input IMUs on the lowarm and
// lowleg bones (N_i = 4); limits default to +-150 deg per non-root axis.
SkeletonConfig default_skeleton();

SkeletonConfig load_skeleton(const std::filesystem::path& path);
void save_skeleton(const std::filesystem::path& path, const SkeletonConfig& skeleton);

}  // namespace vimocap
