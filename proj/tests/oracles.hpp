#pragma once

// Independent reference formulas used only by the tests. Nothing here calls the
// library's Wigner, Jacobi, Legendre or harmonic code.

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

#include "swcwt/swsh.hpp"

namespace oracle {

using Complex = std::complex<double>;
using Mat = std::array<std::array<double, 3>, 3>;
inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline long double factorial(int n) {
  long double r = 1.0L;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline long double binom(int n, int k) {
  if (k < 0 || k > n || n < 0) return 0.0L;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

// Wigner's explicit sum for d^j_{m'm}(beta).
inline double wigner_d_sum(int j, int mp, int m, double beta) {
  const long double c = std::cos(static_cast<long double>(beta) / 2);
  const long double s = std::sin(static_cast<long double>(beta) / 2);
  const long double pre = std::sqrt(factorial(j + mp) * factorial(j - mp) * factorial(j + m) * factorial(j - m));
  long double sum = 0.0L;
  for (int k = 0; k <= 2 * j; ++k) {
    if (j + m - k < 0 || mp - m + k < 0 || j - mp - k < 0) continue;
    const long double den = factorial(j + m - k) * factorial(k) * factorial(mp - m + k) * factorial(j - mp - k);
    const long double sign = ((mp - m + k) % 2 == 0) ? 1.0L : -1.0L;
    sum += sign * std::pow(c, 2 * j + m - mp - 2 * k) * std::pow(s, mp - m + 2 * k) / den;
  }
  return static_cast<double>(pre * sum);
}

// Jacobi polynomial from its binomial expansion.
inline double jacobi_explicit(int n, int a, int b, double t) {
  long double sum = 0.0L;
  for (int s = 0; s <= n; ++s)
    sum += binom(n + a, n - s) * binom(n + b, s) * std::pow((t - 1.0L) / 2, s) * std::pow((t + 1.0L) / 2, n - s);
  return static_cast<double>(sum);
}

// P_l^m(t) without the Condon-Shortley phase, from the explicit Legendre coefficients.
inline double legendre_explicit(int l, int m, double t) {
  long double deriv = 0.0L;
  for (int k = 0; 2 * k <= l; ++k) {
    const int power = l - 2 * k;
    if (power < m) continue;
    long double c = ((k % 2) ? -1.0L : 1.0L) * binom(l, k) * binom(2 * l - 2 * k, l) / std::pow(2.0L, l);
    for (int i = 0; i < m; ++i) c *= power - i;
    deriv += c * std::pow(static_cast<long double>(t), power - m);
  }
  return static_cast<double>(std::pow(1.0L - static_cast<long double>(t) * t, m / 2.0L) * deriv);
}

// Goldberg's explicit formula for the spin-weighted harmonics.
inline Complex sy_goldberg(int s, int l, int m, double theta, double phi) {
  const long double half = static_cast<long double>(theta) / 2;
  const long double pre = ((m % 2) ? -1.0L : 1.0L) *
                          std::sqrt(factorial(l + m) * factorial(l - m) * (2 * l + 1) /
                                    (4 * kPi * factorial(l + s) * factorial(l - s))) *
                          std::pow(std::sin(half), 2 * l);
  long double sum = 0.0L;
  for (int r = 0; r <= l - s; ++r) {
    const long double c = binom(l - s, r) * binom(l + s, r + s - m);
    if (c == 0.0L) continue;
    sum += c * (((l - r - s) % 2) ? -1.0L : 1.0L) * std::pow(1.0L / std::tan(half), 2 * r + s - m);
  }
  return static_cast<double>(pre * sum) * std::polar(1.0, m * phi);
}

inline Complex field_goldberg(const swcwt::SpinField& f, double theta, double phi) {
  Complex v{};
  for (int l = f.lmin(); l <= f.lmax(); ++l)
    for (int m = -l; m <= l; ++m) v += f(l, m) * sy_goldberg(f.spin(), l, m, theta, phi);
  return v;
}

inline Mat rz(double a) { return {{{std::cos(a), -std::sin(a), 0}, {std::sin(a), std::cos(a), 0}, {0, 0, 1}}}; }
inline Mat ry(double b) { return {{{std::cos(b), 0, std::sin(b)}, {0, 1, 0}, {-std::sin(b), 0, std::cos(b)}}}; }

inline Mat mul(const Mat& a, const Mat& b) {
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) r[i][j] += a[i][k] * b[k][j];
  return r;
}

inline Mat tr(const Mat& a) {
  Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = a[j][i];
  return r;
}

inline Mat euler(double alpha, double beta, double gamma) { return mul(mul(rz(alpha), ry(beta)), rz(gamma)); }

inline double max_diff(const Mat& a, const Mat& b) {
  double d = 0.0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) d = std::max(d, std::abs(a[i][j] - b[i][j]));
  return d;
}

// Transform value by direct sphere quadrature: sum_x w(x) conj(e^{-is kappa} psi(U^-1 x)) f(x),
// with U^-1 x and kappa taken from explicit matrices and psi, f evaluated by Goldberg's formula.
inline Complex cwt_spatial(const swcwt::SpinField& f, const swcwt::SpinField& psi, double alpha, double beta,
                           double gamma, const swcwt::SphereGrid& grid) {
  const Mat uinv = tr(euler(alpha, beta, gamma));
  const int s = f.spin();
  Complex acc{};
  for (int i = 0; i < grid.n_theta(); ++i)
    for (int j = 0; j < grid.n_phi(); ++j) {
      const double th = grid.theta(i), ph = grid.phi(j);
      const Mat m = mul(uinv, euler(ph, th, 0.0));
      const double th2 = std::acos(std::clamp(m[2][2], -1.0, 1.0));
      const double ph2 = std::atan2(m[1][2], m[0][2]);
      const double kappa = std::atan2(m[2][1], -m[2][0]);
      const Complex rotated = std::polar(1.0, -s * kappa) * field_goldberg(psi, th2, ph2);
      acc += grid.theta_weight(i) * grid.phi_step() * std::conj(rotated) * field_goldberg(f, th, ph);
    }
  return acc;
}

// Seeded input generators for the property tests.
struct Gen {
  explicit Gen(std::uint64_t seed) : rng(seed) {}
  std::mt19937_64 rng;

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }
  swcwt::SpherePoint point() { return {std::acos(uniform(-1.0, 1.0)), uniform(0.0, 2 * kPi)}; }
  swcwt::EulerAngles rotation() {
    return {uniform(0.0, 2 * kPi), std::acos(uniform(-1.0, 1.0)), uniform(0.0, 2 * kPi)};
  }
  swcwt::SpinField field(int spin, int lmax) {
    swcwt::SpinField f(spin, lmax);
    for (auto& c : f.coeffs()) c = {uniform(-1.0, 1.0), uniform(-1.0, 1.0)};
    return f;
  }
};

inline double max_abs_diff(const swcwt::SpinField& a, const swcwt::SpinField& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a.coeffs()[i] - b.coeffs()[i]));
  return d;
}

}  // namespace oracle
