#include "swcwt/geometry.hpp"

#include <cmath>

namespace swcwt {
namespace {

// Below this value of sin(beta) the extraction treats the rotation as a pure
// z-rotation (beta = 0) or a flip followed by one (beta = pi).
constexpr double kGimbalTolerance = 1e-12;

}  // namespace

double wrap_two_pi(double x) {
  double r = std::fmod(x, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  if (r >= kTwoPi) r = 0.0;
  return r;
}

EulerAngles normalize(EulerAngles a) {
  double beta = wrap_two_pi(a.beta);
  if (beta > kPi) {
    // R_y(-b) = R_z(pi) R_y(b) R_z(-pi)
    beta = kTwoPi - beta;
    a.alpha += kPi;
    a.gamma += kPi;
  }
  if (beta == 0.0) return {0.0, 0.0, wrap_two_pi(a.alpha + a.gamma)};
  // R_z(a) R_y(pi) = R_y(pi) R_z(-a)
  if (beta == kPi) return {0.0, kPi, wrap_two_pi(a.gamma - a.alpha)};
  return {wrap_two_pi(a.alpha), beta, wrap_two_pi(a.gamma)};
}

Matrix3 to_matrix(const EulerAngles& e) {
  const double ca = std::cos(e.alpha), sa = std::sin(e.alpha);
  const double cb = std::cos(e.beta), sb = std::sin(e.beta);
  const double cg = std::cos(e.gamma), sg = std::sin(e.gamma);
  return {{{ca * cb * cg - sa * sg, -ca * cb * sg - sa * cg, ca * sb},
           {sa * cb * cg + ca * sg, -sa * cb * sg + ca * cg, sa * sb},
           {-sb * cg, sb * sg, cb}}};
}

EulerAngles from_matrix(const Matrix3& m) {
  const double sb = std::hypot(m[0][2], m[1][2]);
  const double cb = m[2][2];
  // (1 + cos b) e^{i(a+g)} and (1 - cos b) e^{i(a-g)} live in the upper-left
  // block; each is well conditioned near its own pole.
  const double sum = std::atan2(m[1][0] - m[0][1], m[0][0] + m[1][1]);
  const double diff = std::atan2(-(m[1][0] + m[0][1]), m[1][1] - m[0][0]);
  if (sb < kGimbalTolerance) {
    if (cb > 0.0) return {0.0, 0.0, wrap_two_pi(sum)};
    return {0.0, kPi, wrap_two_pi(-diff)};
  }
  const double beta = std::atan2(sb, cb);
  const double alpha = std::atan2(m[1][2], m[0][2]);
  const double gamma = cb >= 0.0 ? sum - alpha : alpha - diff;
  return {wrap_two_pi(alpha), beta, wrap_two_pi(gamma)};
}

Matrix3 multiply(const Matrix3& a, const Matrix3& b) {
  Matrix3 c{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j] + a[i][2] * b[2][j];
  return c;
}

Matrix3 transpose(const Matrix3& a) {
  Matrix3 t{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) t[i][j] = a[j][i];
  return t;
}

Vector3 apply(const Matrix3& m, const Vector3& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1] + m[0][2] * v[2],
          m[1][0] * v[0] + m[1][1] * v[1] + m[1][2] * v[2],
          m[2][0] * v[0] + m[2][1] * v[1] + m[2][2] * v[2]};
}

EulerAngles compose(const EulerAngles& a, const EulerAngles& b) {
  return from_matrix(multiply(to_matrix(a), to_matrix(b)));
}

EulerAngles inverse(const EulerAngles& a) {
  // (R_z(a) R_y(b) R_z(g))^{-1} = R_z(-g) R_y(-b) R_z(-a)
  //                             = R_z(pi - g) R_y(b) R_z(pi - a)   (mod 2pi)
  return normalize({kPi - a.gamma, a.beta, kPi - a.alpha});
}

Vector3 to_cartesian(const SpherePoint& x) {
  const double st = std::sin(x.theta);
  return {st * std::cos(x.phi), st * std::sin(x.phi), std::cos(x.theta)};
}

SpherePoint from_cartesian(const Vector3& v) {
  const double rho = std::hypot(v[0], v[1]);
  return {std::atan2(rho, v[2]), wrap_two_pi(std::atan2(v[1], v[0]))};
}

EulerAngles frame_of(const SpherePoint& x) { return {x.phi, x.theta, 0.0}; }

SpherePoint rotate_point(const EulerAngles& rot, const SpherePoint& x) {
  return from_cartesian(apply(to_matrix(rot), to_cartesian(x)));
}

EulerAngles pull_back_frame(const EulerAngles& rot, const SpherePoint& x) {
  return from_matrix(multiply(transpose(to_matrix(rot)), to_matrix(frame_of(x))));
}

double third_angle_kappa(const EulerAngles& rot, const SpherePoint& x) {
  return pull_back_frame(rot, x).gamma;
}

}  // namespace swcwt
