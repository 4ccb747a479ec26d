#pragma once

#include <Eigen/Dense>

#include <cstdint>

namespace vimocap {

// Six scalars holding the first two columns of a rotation matrix
// (column-major: entries 0..2 = first column, 3..5 = second column).
// Continuous parameterization; reconstructed to SO(3) by Gram-Schmidt.
using Rotation6d = Eigen::Matrix<double, 6, 1>;

inline Rotation6d identity_rotation6d() {
    Rotation6d r;
    r << 1, 0, 0, 0, 1, 0;
    return r;
}

// Gram-Schmidt reconstruction. Scale-invariant in both input columns.
// Throws DegenerateInput when either normalization underflows (norm <= 1e-12).
Eigen::Matrix3d rotation6d_to_matrix(const Rotation6d& r);

// First two columns of M. Throws NotARotation unless M is in SO(3)
// within 1e-6 (Frobenius orthogonality defect and determinant).
Rotation6d matrix_to_rotation6d(const Eigen::Matrix3d& m);

// Intrinsic X-then-Y-then-Z Euler composition: M = Rx(a) * Ry(b) * Rz(c).
Eigen::Matrix3d euler_to_matrix(const Eigen::Vector3d& xyz);

struct EulerResult {
    Eigen::Vector3d angles;  // ([-pi,pi], [-pi/2,pi/2], [-pi,pi])
    bool gimbal_lock = false;
};

// Inverse of euler_to_matrix. At |cos(pitch)| < 1e-7 the decomposition is
// degenerate: gimbal_lock is flagged and roll is set to 0 (tie-break), with
// yaw absorbing the free angle so the matrix is still reproduced.
EulerResult matrix_to_euler(const Eigen::Matrix3d& m);

// Nearest rotation to m in Frobenius norm (polar decomposition via SVD,
// determinant corrected to +1).
Eigen::Matrix3d project_to_so3(const Eigen::Matrix3d& m);

// Geodesic angle between two rotations, radians in [0, pi].
double geodesic_distance(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b);

bool is_rotation(const Eigen::Matrix3d& m, double tol = 1e-6);

// Axis-angle exponential map.
Eigen::Matrix3d axis_angle_to_matrix(const Eigen::Vector3d& axis, double angle);

// Quaternion slerp between rotation matrices; shortest path.
Eigen::Matrix3d slerp(const Eigen::Matrix3d& a, const Eigen::Matrix3d& b, double alpha);

// Uniform random rotation via normalized 4D Gaussian quaternion.
Eigen::Matrix3d random_rotation(std::uint64_t seed);

// Rotation of `angle_std` * N(0,1) radians about a uniformly random axis.
Eigen::Matrix3d random_small_rotation(double angle_std, std::uint64_t seed);

}  // namespace vimocap
