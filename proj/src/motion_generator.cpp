#include "vimocap/motion_generator.hpp"

#include <cmath>
#include <numbers>
#include <random>

#include "vimocap/errors.hpp"
#include "vimocap/rng.hpp"

namespace vimocap {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Harmonic {
    double amp = 0.0, omega = 0.0, phase = 0.0;
};

// angle(t) = offset + rate * t + sum_k amp_k * sin(omega_k * t + phase_k)
struct Trajectory {
    double offset = 0.0;
    double rate = 0.0;
    std::vector<Harmonic> harmonics;

    double eval(double t) const {
        double v = offset + rate * t;
        for (const Harmonic& h : harmonics) {
            v += h.amp * std::sin(h.omega * t + h.phase);
        }
        return v;
    }
};

struct MotionScript {
    Eigen::MatrixX3d offsets;                       // per joint, per axis
    std::vector<std::array<Trajectory, 3>> joints;  // Euler XYZ per joint
    std::array<Trajectory, 3> translation;          // stage frame, meters
};

Harmonic make_harmonic(std::mt19937_64& rng, double amp_lo, double amp_hi, double freq_lo_hz,
                       double freq_hi_hz) {
    std::uniform_real_distribution<double> amp(amp_lo, amp_hi);
    std::uniform_real_distribution<double> freq(freq_lo_hz, freq_hi_hz);
    std::uniform_real_distribution<double> phase(0.0, kTwoPi);
    return {amp(rng), kTwoPi * freq(rng), phase(rng)};
}

void add_joint_motion(MotionScript& script, int joint, int axis, Harmonic h) {
    script.joints[joint][axis].harmonics.push_back(h);
}

MotionScript make_script(const SkeletonConfig& s, MotionKind kind, double duration,
                         std::mt19937_64& rng) {
    const int n = s.num_joints();
    MotionScript script;
    script.joints.resize(n);
    script.translation[0].offset = 0.0;
    script.translation[1].offset = 0.9;
    script.translation[2].offset = 0.0;

    auto idx = [&](const char* name) { return s.joint_index(name); };
    const int clav_l = idx("clavicle_l"), clav_r = idx("clavicle_r");
    const int uparm_l = idx("uparm_l"), uparm_r = idx("uparm_r");
    const int lowarm_l = idx("lowarm_l"), lowarm_r = idx("lowarm_r");
    const int upleg_l = idx("upleg_l"), upleg_r = idx("upleg_r");
    const int lowleg_l = idx("lowleg_l"), lowleg_r = idx("lowleg_r");
    const int spine = idx("spine"), chest = idx("chest");

    switch (kind) {
        case MotionKind::kReach: {
            // Arms sweep; every other channel is constant.
            for (int j : {clav_l, clav_r, uparm_l, uparm_r, lowarm_l, lowarm_r}) {
                if (j < 0) {
                    continue;
                }
                add_joint_motion(script, j, 2, make_harmonic(rng, 0.3, 0.55, 0.25, 0.5));
                add_joint_motion(script, j, 1, make_harmonic(rng, 0.15, 0.3, 0.2, 0.45));
            }
            break;
        }
        case MotionKind::kSquat: {
            const Harmonic bob = make_harmonic(rng, 0.12, 0.18, 0.35, 0.5);
            script.translation[1].harmonics.push_back(bob);
            for (int j : {upleg_l, upleg_r}) {
                if (j >= 0) {
                    add_joint_motion(script, j, 0, {3.0 * bob.amp, bob.omega, bob.phase});
                }
            }
            for (int j : {lowleg_l, lowleg_r}) {
                if (j >= 0) {
                    add_joint_motion(script, j, 0, {-2.5 * bob.amp, bob.omega, bob.phase});
                }
            }
            if (spine >= 0) {
                add_joint_motion(script, spine, 0, {1.2 * bob.amp, bob.omega, bob.phase});
            }
            break;
        }
        case MotionKind::kSpin: {
            std::uniform_real_distribution<double> rate(0.8, 1.4);
            script.joints[0][1].rate = rate(rng);  // continuous yaw
            for (int j : {clav_l, clav_r, uparm_l, uparm_r}) {
                if (j >= 0) {
                    add_joint_motion(script, j, 2, make_harmonic(rng, 0.2, 0.4, 0.3, 0.6));
                }
            }
            break;
        }
        case MotionKind::kDanceLoop: {
            const double base_hz = duration > 2.0 ? 1.0 / duration : 0.5;
            std::uniform_real_distribution<double> amp(0.25, 0.5);
            std::uniform_real_distribution<double> phase(0.0, kTwoPi);
            std::uniform_int_distribution<int> mult(1, 3);
            for (int j = 1; j < n; ++j) {
                for (int axis = 0; axis < 3; ++axis) {
                    add_joint_motion(script, j, axis,
                                     {amp(rng), kTwoPi * base_hz * mult(rng), phase(rng)});
                }
            }
            script.translation[0].harmonics.push_back({0.25, kTwoPi * base_hz, 0.0});
            script.translation[2].harmonics.push_back({0.25, kTwoPi * base_hz, 0.5 * std::numbers::pi});
            add_joint_motion(script, 0, 1, {0.5, kTwoPi * base_hz, phase(rng)});
            break;
        }
        case MotionKind::kRandomSpline: {
            // Three harmonics per channel with a rate budget: amplitudes at
            // most 0.25 rad and frequencies at most 0.8 Hz keep
            // sum_k amp_k * omega_k below 3.8 rad/s, so neighbouring frames
            // at fps >= 16 differ by well under pi/8.
            std::uniform_real_distribution<double> offset(-0.15, 0.15);
            for (int j = 0; j < n; ++j) {
                for (int axis = 0; axis < 3; ++axis) {
                    script.joints[j][axis].offset = j == 0 ? 0.0 : offset(rng);
                    for (int k = 0; k < 3; ++k) {
                        add_joint_motion(script, j, axis, make_harmonic(rng, 0.05, 0.25, 0.1, 0.8));
                    }
                }
            }
            for (int axis = 0; axis < 3; ++axis) {
                script.translation[axis].harmonics.push_back(
                    make_harmonic(rng, 0.1, 0.3, 0.05, 0.25));
            }
            if (chest >= 0) {
                add_joint_motion(script, chest, 1, make_harmonic(rng, 0.1, 0.2, 0.1, 0.4));
            }
            break;
        }
    }
    return script;
}

}  // namespace

MotionKind motion_kind_from_string(const std::string& name) {
    if (name == "reach") return MotionKind::kReach;
    if (name == "squat") return MotionKind::kSquat;
    if (name == "spin") return MotionKind::kSpin;
    if (name == "dance_loop") return MotionKind::kDanceLoop;
    if (name == "random_spline") return MotionKind::kRandomSpline;
    throw ConfigError("unknown motion kind '" + name + "'");
}

std::string to_string(MotionKind kind) {
    switch (kind) {
        case MotionKind::kReach: return "reach";
        case MotionKind::kSquat: return "squat";
        case MotionKind::kSpin: return "spin";
        case MotionKind::kDanceLoop: return "dance_loop";
        case MotionKind::kRandomSpline: return "random_spline";
    }
    return "unknown";
}

MotionSequence generate_motion(const SkeletonConfig& skeleton, MotionKind kind, int frames,
                               double fps, std::uint64_t seed) {
    if (frames < 3) {
        throw ConfigError("generate_motion: need at least 3 frames");
    }
    if (fps <= 0.0) {
        throw ConfigError("generate_motion: fps must be positive");
    }
    auto rng = make_rng(seed, 0x90 + static_cast<std::uint64_t>(kind));
    const double duration = frames / fps;
    const MotionScript script = make_script(skeleton, kind, duration, rng);

    MotionSequence motion;
    motion.fps = fps;
    motion.frames.reserve(frames);
    const int n = skeleton.num_joints();
    for (int f = 0; f < frames; ++f) {
        const double t = f / fps;
        EulerPose euler;
        euler.theta.resize(n, 3);
        for (int j = 0; j < n; ++j) {
            for (int axis = 0; axis < 3; ++axis) {
                const double raw = script.joints[j][axis].eval(t);
                euler.theta(j, axis) =
                    j == 0 ? raw
                           : std::clamp(raw, skeleton.limits_min(j, axis),
                                        skeleton.limits_max(j, axis));
            }
        }
        euler.t = Eigen::Vector3d(script.translation[0].eval(t), script.translation[1].eval(t),
                                  script.translation[2].eval(t));
        motion.frames.push_back(euler_to_pose(euler));
    }
    return motion;
}

MotionSequence transform_motion(const MotionSequence& motion, const Eigen::Matrix3d& g,
                                const Eigen::Vector3d& h) {
    MotionSequence out = motion;
    for (PoseFrame& frame : out.frames) {
        frame.set_rotation(0, g * frame.rotation(0));
        frame.t = g * frame.t + h;
    }
    return out;
}

}  // namespace vimocap
