#include "vimocap/skeleton.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <numbers>
#include <set>

#include "vimocap/errors.hpp"

namespace vimocap {

using nlohmann::json;

const std::array<const char*, kNumKeyBones> kKeyBoneNames = {
    "uparm", "lowarm", "upleg", "lowleg", "foot", "clavicle", "spine"};

Eigen::Matrix<double, kNumKeyBones, 1> SkeletonConfig::key_bone_lengths() const {
    Eigen::Matrix<double, kNumKeyBones, 1> lengths;
    for (int k = 0; k < kNumKeyBones; ++k) {
        lengths[k] = bone_length(key_bone_joints[k]);
    }
    return lengths;
}

int SkeletonConfig::joint_index(const std::string& name) const {
    for (int j = 0; j < num_joints(); ++j) {
        if (joints[j].name == name) {
            return j;
        }
    }
    return -1;
}

void SkeletonConfig::validate() const {
    const int n = num_joints();
    if (n == 0) {
        throw ConfigError("skeleton: no joints");
    }
    if (joints[0].parent != -1) {
        throw ConfigError("skeleton: joint 0 must be the root (parent = -1)");
    }
    std::set<std::string> names;
    for (int j = 0; j < n; ++j) {
        const Joint& joint = joints[j];
        if (!names.insert(joint.name).second) {
            throw ConfigError("skeleton: duplicate joint name " + joint.name);
        }
        if (j > 0) {
            if (joint.parent < 0 || joint.parent >= j) {
                throw ConfigError("skeleton: parent of " + joint.name +
                                  " must precede it (topological order)");
            }
            if (joint.offset.norm() <= 0.0) {
                throw ConfigError("skeleton: non-root joint " + joint.name +
                                  " needs a strictly positive rest offset");
            }
        }
        if (!joint.offset.allFinite()) {
            throw ConfigError("skeleton: non-finite offset on " + joint.name);
        }
    }
    auto check_joint = [&](int idx, const char* what) {
        if (idx < 0 || idx >= n) {
            throw ConfigError(std::string("skeleton: ") + what + " index out of range");
        }
    };
    auto check_bone = [&](int idx, const char* what) {
        check_joint(idx, what);
        if (idx == 0) {
            throw ConfigError(std::string("skeleton: ") + what + " cannot be the root joint");
        }
    };
    for (int k = 0; k < kNumKeyBones; ++k) {
        check_bone(key_bone_joints[k], "key bone");
    }
    for (int m : marker_map) {
        check_joint(m, "marker");
    }
    for (int b : imu_map) {
        check_bone(b, "imu");
    }
    for (int b : supervision_bones) {
        check_bone(b, "supervision bone");
    }
    if (limits_min.rows() != n || limits_max.rows() != n) {
        throw ConfigError("skeleton: joint limits must have one row per joint");
    }
    if (((limits_max - limits_min).array() < 0.0).any()) {
        throw ConfigError("skeleton: limits_min must be <= limits_max componentwise");
    }
    for (int e : limb_endpoints) {
        check_joint(e, "limb endpoint");
    }
    for (int e : body_endpoints) {
        check_joint(e, "body endpoint");
    }
    for (const auto& b : limb_bones) {
        check_joint(b[0], "limb bone");
        check_bone(b[1], "limb bone");
    }
    for (const auto& b : body_bones) {
        check_joint(b[0], "body bone");
        check_bone(b[1], "body bone");
    }
}

SkeletonConfig default_skeleton() {
    SkeletonConfig s;
    auto add = [&](const char* name, int parent, double x, double y, double z) {
        s.joints.push_back({name, parent, Eigen::Vector3d(x, y, z)});
    };
    // Stage frame: y up, x left, z toward the rig origin camera. Joints are
    // named after the bone they terminate.
    add("pelvis", -1, 0.0, 0.0, 0.0);
    add("spine", 0, 0.0, 0.13, 0.0);
    add("chest", 1, 0.0, 0.22, 0.0);
    add("neck", 2, 0.0, 0.18, 0.0);
    add("head", 3, 0.0, 0.14, 0.0);
    add("clavicle_l", 2, 0.15, 0.13, 0.0);
    add("uparm_l", 5, 0.26, 0.0, 0.0);
    add("lowarm_l", 6, 0.25, 0.0, 0.0);
    add("hand_l", 7, 0.09, 0.0, 0.0);
    add("clavicle_r", 2, -0.15, 0.13, 0.0);
    add("uparm_r", 9, -0.26, 0.0, 0.0);
    add("lowarm_r", 10, -0.25, 0.0, 0.0);
    add("hand_r", 11, -0.09, 0.0, 0.0);
    add("upleg_l", 0, 0.095, -0.42, 0.0);
    add("lowleg_l", 13, 0.0, -0.41, 0.0);
    add("foot_l", 14, 0.0, -0.06, 0.13);
    add("upleg_r", 0, -0.095, -0.42, 0.0);
    add("lowleg_r", 16, 0.0, -0.41, 0.0);
    add("foot_r", 17, 0.0, -0.06, 0.13);

    auto idx = [&](const char* name) { return s.joint_index(name); };
    s.key_bone_joints = {idx("uparm_l"), idx("lowarm_l"), idx("upleg_l"), idx("lowleg_l"),
                         idx("foot_l"),  idx("clavicle_l"), idx("spine")};

    s.marker_map.resize(s.joints.size());
    for (int j = 0; j < s.num_joints(); ++j) {
        s.marker_map[j] = j;
    }
    s.imu_map = {idx("lowarm_l"), idx("lowarm_r"), idx("lowleg_l"), idx("lowleg_r")};
    for (int j = 1; j < s.num_joints(); ++j) {
        s.supervision_bones.push_back(j);
    }

    const int n = s.num_joints();
    const double range = 150.0 * std::numbers::pi / 180.0;
    const double unbounded = 1e9;
    s.limits_min = Eigen::MatrixX3d::Constant(n, 3, -range);
    s.limits_max = Eigen::MatrixX3d::Constant(n, 3, range);
    s.limits_min.row(0).setConstant(-unbounded);
    s.limits_max.row(0).setConstant(unbounded);

    // Limb tracker: the four IMU-bound bones (forearms and shins), 8 endpoints.
    s.limb_endpoints = {idx("uparm_l"), idx("lowarm_l"), idx("uparm_r"), idx("lowarm_r"),
                        idx("upleg_l"), idx("lowleg_l"), idx("upleg_r"), idx("lowleg_r")};
    s.limb_bones = {{idx("uparm_l"), idx("lowarm_l")},
                    {idx("uparm_r"), idx("lowarm_r")},
                    {idx("upleg_l"), idx("lowleg_l")},
                    {idx("upleg_r"), idx("lowleg_r")}};
    // Body tracker: trunk, clavicles and feet (7 endpoints, 8 bones); the
    // uparm and foot bones reuse limb endpoints. Spine and hands stay
    // untracked and are recovered by the IK stage alone.
    s.body_endpoints = {idx("chest"),      idx("neck"),   idx("head"), idx("clavicle_l"),
                        idx("clavicle_r"), idx("foot_l"), idx("foot_r")};
    s.body_bones = {{idx("chest"), idx("neck")},
                    {idx("neck"), idx("head")},
                    {idx("chest"), idx("clavicle_l")},
                    {idx("chest"), idx("clavicle_r")},
                    {idx("clavicle_l"), idx("uparm_l")},
                    {idx("clavicle_r"), idx("uparm_r")},
                    {idx("lowleg_l"), idx("foot_l")},
                    {idx("lowleg_r"), idx("foot_r")}};
    s.validate();
    return s;
}

namespace {

json limits_to_json(const SkeletonConfig& s) {
    json rows = json::array();
    for (int j = 0; j < s.num_joints(); ++j) {
        rows.push_back({{"joint", s.joints[j].name},
                        {"min", {s.limits_min(j, 0), s.limits_min(j, 1), s.limits_min(j, 2)}},
                        {"max", {s.limits_max(j, 0), s.limits_max(j, 1), s.limits_max(j, 2)}}});
    }
    return rows;
}

std::vector<std::string> bone_names(const SkeletonConfig& s, const std::vector<int>& ids) {
    std::vector<std::string> out;
    out.reserve(ids.size());
    for (int id : ids) {
        out.push_back(s.joints[id].name);
    }
    return out;
}

json pairs_to_json(const SkeletonConfig& s, const std::vector<std::array<int, 2>>& bones) {
    json out = json::array();
    for (const auto& b : bones) {
        out.push_back({s.joints[b[0]].name, s.joints[b[1]].name});
    }
    return out;
}

int named_joint(const SkeletonConfig& s, const std::string& name, const char* what) {
    const int idx = s.joint_index(name);
    if (idx < 0) {
        throw ConfigError(std::string("skeleton file: unknown joint '") + name + "' in " + what);
    }
    return idx;
}

}  // namespace

void save_skeleton(const std::filesystem::path& path, const SkeletonConfig& s) {
    json doc;
    doc["format_version"] = 1;
    json joints = json::array();
    for (const Joint& j : s.joints) {
        joints.push_back({{"name", j.name},
                          {"parent", j.parent < 0 ? json() : json(s.joints[j.parent].name)},
                          {"offset", {j.offset.x(), j.offset.y(), j.offset.z()}}});
    }
    doc["joints"] = joints;
    json key_bones;
    for (int k = 0; k < kNumKeyBones; ++k) {
        key_bones[kKeyBoneNames[k]] = s.joints[s.key_bone_joints[k]].name;
    }
    doc["key_bones"] = key_bones;
    doc["marker_map"] = s.marker_map;
    doc["imu_map"] = bone_names(s, s.imu_map);
    doc["supervision_bones"] = bone_names(s, s.supervision_bones);
    doc["joint_limits"] = limits_to_json(s);
    doc["tracker"] = {{"limb_endpoints", bone_names(s, s.limb_endpoints)},
                      {"limb_bones", pairs_to_json(s, s.limb_bones)},
                      {"body_endpoints", bone_names(s, s.body_endpoints)},
                      {"body_bones", pairs_to_json(s, s.body_bones)}};
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot write skeleton file " + path.string());
    }
    out << doc.dump(2) << "\n";
}

SkeletonConfig load_skeleton(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read skeleton file " + path.string());
    }
    json doc = json::parse(in);
    if (doc.value("format_version", 0) != 1) {
        throw ConfigError("skeleton file: unsupported format_version");
    }
    SkeletonConfig s;
    for (const auto& j : doc.at("joints")) {
        Joint joint;
        joint.name = j.at("name").get<std::string>();
        if (j.at("parent").is_null()) {
            joint.parent = -1;
        } else {
            joint.parent = named_joint(s, j.at("parent").get<std::string>(), "joints");
        }
        const auto& o = j.at("offset");
        joint.offset = Eigen::Vector3d(o[0], o[1], o[2]);
        s.joints.push_back(joint);
    }
    for (int k = 0; k < kNumKeyBones; ++k) {
        s.key_bone_joints[k] =
            named_joint(s, doc.at("key_bones").at(kKeyBoneNames[k]).get<std::string>(), "key_bones");
    }
    s.marker_map = doc.at("marker_map").get<std::vector<int>>();
    for (const auto& name : doc.at("imu_map")) {
        s.imu_map.push_back(named_joint(s, name.get<std::string>(), "imu_map"));
    }
    for (const auto& name : doc.at("supervision_bones")) {
        s.supervision_bones.push_back(named_joint(s, name.get<std::string>(), "supervision_bones"));
    }
    const int n = s.num_joints();
    s.limits_min.resize(n, 3);
    s.limits_max.resize(n, 3);
    for (const auto& row : doc.at("joint_limits")) {
        const int j = named_joint(s, row.at("joint").get<std::string>(), "joint_limits");
        for (int a = 0; a < 3; ++a) {
            s.limits_min(j, a) = row.at("min")[a].get<double>();
            s.limits_max(j, a) = row.at("max")[a].get<double>();
        }
    }
    const json& tracker = doc.at("tracker");
    for (const auto& name : tracker.at("limb_endpoints")) {
        s.limb_endpoints.push_back(named_joint(s, name.get<std::string>(), "limb_endpoints"));
    }
    for (const auto& name : tracker.at("body_endpoints")) {
        s.body_endpoints.push_back(named_joint(s, name.get<std::string>(), "body_endpoints"));
    }
    for (const auto& pair : tracker.at("limb_bones")) {
        s.limb_bones.push_back({named_joint(s, pair[0].get<std::string>(), "limb_bones"),
                                named_joint(s, pair[1].get<std::string>(), "limb_bones")});
    }
    for (const auto& pair : tracker.at("body_bones")) {
        s.body_bones.push_back({named_joint(s, pair[0].get<std::string>(), "body_bones"),
                                named_joint(s, pair[1].get<std::string>(), "body_bones")});
    }
    s.validate();
    return s;
}

}  // namespace vimocap
