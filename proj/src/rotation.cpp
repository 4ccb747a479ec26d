#include "vimocap/rotation.hpp"

#include <cmath>

#include "vimocap/errors.hpp"
#include "vimocap/rng.hpp"

namespace vimocap {

namespace {
constexpr double kDegenerateNorm = 1e-12;
constexpr double kGimbalCos = 1e-7;
}  // namespace

Eigen::Matrix3d rotation6d_to_matrix(const Rotation6d& r) {
    const Eigen::Vector3d a1 = r.head<3>();
    const Eigen::Vector3d a2 = r.tail<3>();
    const double n1 = a1.norm();
    if (n1 <= kDegenerateNorm) {
        throw DegenerateInput("rotation6d_to_matrix: first column norm underflow");
    }
    const Eigen::Vector3d b1 = a1 / n1;
    const Eigen::Vector3d w2 = a2 - b1.dot(a2) * b1;
    const double n2 = w2.norm();
    if (n2 <= kDegenerateNorm) {
        throw DegenerateInput("rotation6d_to_matrix: second column degenerate after projection");
    }
    const Eigen::Vector3d b2 = w2 / n2;
    Eigen::Matrix3d m;
    m.col(0) = b1;
    m.col(1) = b2;
    m.col(2) = b1.cross(b2);
    return m;
}

Rotation6d matrix_to_rotation6d(const Eigen::Matrix3d& m) {
    if (!is_rotation(m)) {
        throw NotARotation("matrix_to_rotation6d: input not in SO(3)");
    }
    Rotation6d r;
    r.head<3>() = m.col(0);
    r.tail<3>() = m.col(1);
    return r;
}

Eigen::Matrix3d euler_to_matrix(const Eigen::Vector3d& xyz) {
    const double cx = std::cos(xyz.x()), sx = std::sin(xyz.x());
    const double cy = std::cos(xyz.y()), sy = std::sin(xyz.y());
    const double cz = std::cos(xyz.z()), sz = std::sin(xyz.z());
    Eigen::Matrix3d rx, ry, rz;
    rx << 1, 0, 0, 0, cx, -sx, 0, sx, cx;
    ry << cy, 0, sy, 0, 1, 0, -sy, 0, cy;
    rz << cz, -sz, 0, sz, cz, 0, 0, 0, 1;
    return rx * ry * rz;
}

EulerResult matrix_to_euler(const Eigen::Matrix3d& m) {
    if (!is_rotation(m)) {
        throw NotARotation("matrix_to_euler: input not in SO(3)");
    }
    // M = Rx * Ry * Rz, so m(0,2) = sin(pitch).
    EulerResult out;
    const double sy = std::clamp(m(0, 2), -1.0, 1.0);
    const double cy = std::sqrt(std::max(0.0, 1.0 - sy * sy));
    out.angles.y() = std::asin(sy);
    if (cy < kGimbalCos) {
        // Roll and yaw are coupled; set roll = 0 and put everything in yaw.
        // At pitch +pi/2: m(1,0) = sin(roll+yaw); at -pi/2: m(1,0) = sin(yaw-roll).
        out.gimbal_lock = true;
        out.angles.x() = 0.0;
        out.angles.z() = std::atan2(m(1, 0), m(1, 1));
    } else {
        out.angles.x() = std::atan2(-m(1, 2), m(2, 2));
        out.angles.z() = std::atan2(-m(0, 1), m(0, 0));
    }
    return out;
}

Eigen::Matrix3d project_to_so3(const Eigen::Matrix3d& m) {
    Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    Eigen::Matrix3d u = svd.matrixU();
    const Eigen::Matrix3d v = svd.matrixV();
    if ((u * v.transpose()).determinant() < 0) {
        u.col(2) *= -1.0;
    }
    return u * v.transpose();
}

double geodesic_distance(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b) {
    const double c = ((a.transpose() * b).trace() - 1.0) / 2.0;
    return std::acos(std::clamp(c, -1.0, 1.0));
}

bool is_rotation(const Eigen::Matrix3d& m, double tol) {
    const double defect = (m.transpose() * m - Eigen::Matrix3d::Identity()).norm();
    return defect <= tol && std::abs(m.determinant() - 1.0) <= tol;
}

Eigen::Matrix3d axis_angle_to_matrix(const Eigen::Vector3d& axis, double angle) {
    const double n = axis.norm();
    if (n <= kDegenerateNorm) {
        return Eigen::Matrix3d::Identity();
    }
    return Eigen::AngleAxisd(angle, axis / n).toRotationMatrix();
}

Eigen::Matrix3d slerp(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b, double alpha) {
    const Eigen::Quaterniond qa(a), qb(b);
    return qa.slerp(alpha, qb).toRotationMatrix();
}

Eigen::Matrix3d random_rotation(std::uint64_t seed) {
    auto rng = make_rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Vector4d q;
    do {
        for (int i = 0; i < 4; ++i) {
            q[i] = gauss(rng);
        }
    } while (q.norm() < kDegenerateNorm);
    q.normalize();
    return Eigen::Quaterniond(q[0], q[1], q[2], q[3]).toRotationMatrix();
}

Eigen::Matrix3d random_small_rotation(double angle_std, std::uint64_t seed) {
    auto rng = make_rng(seed, 0x5eed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Eigen::Vector3d axis;
    do {
        for (int i = 0; i < 3; ++i) {
            axis[i] = gauss(rng);
        }
    } while (axis.norm() < kDegenerateNorm);
    return axis_angle_to_matrix(axis, angle_std * gauss(rng));
}

}  // namespace vimocap
