#pragma once

#include <array>
#include <numbers>

namespace swcwt {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A point on the unit sphere: colatitude theta in [0, pi], longitude phi in [0, 2pi).
struct SpherePoint {
  double theta = 0.0;
  double phi = 0.0;
};

/// SO(3) element in the zyz convention. The rotation acting on points is
/// R_z(alpha) * R_y(beta) * R_z(gamma): first gamma about OZ, then beta about
/// OY, then alpha about OZ.
struct EulerAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;
using Vector3 = std::array<double, 3>;

/// Maps x into [0, 2pi).
double wrap_two_pi(double x);

/// Brings any real triple into alpha, gamma in [0, 2pi), beta in [0, pi] without
/// changing the rotation. At beta = 0 or pi the first angle is set to 0 and the
/// whole z-rotation moves into gamma.
EulerAngles normalize(EulerAngles a);

Matrix3 to_matrix(const EulerAngles& a);

/// zyz extraction; degenerate beta follows the same convention as normalize().
EulerAngles from_matrix(const Matrix3& m);

Matrix3 multiply(const Matrix3& a, const Matrix3& b);
Matrix3 transpose(const Matrix3& a);
Vector3 apply(const Matrix3& m, const Vector3& v);

/// Euler angles of "apply b, then a", i.e. of the matrix product a * b.
EulerAngles compose(const EulerAngles& a, const EulerAngles& b);

EulerAngles inverse(const EulerAngles& a);

Vector3 to_cartesian(const SpherePoint& x);
SpherePoint from_cartesian(const Vector3& v);

/// The rotation (phi, theta, 0) that carries the north pole to x.
EulerAngles frame_of(const SpherePoint& x);

SpherePoint rotate_point(const EulerAngles& rot, const SpherePoint& x);

/// Euler angles of rot^{-1} * frame_of(x). Its (alpha, beta) are the
/// coordinates (phi, theta) of rot^{-1} x and its gamma is the phase angle
/// kappa of the spin-weighted rotation operator.
EulerAngles pull_back_frame(const EulerAngles& rot, const SpherePoint& x);

/// Third Euler angle of rot^{-1} * frame_of(x), in [0, 2pi).
double third_angle_kappa(const EulerAngles& rot, const SpherePoint& x);

}  // namespace swcwt
