#pragma once

#include <cstdint>
#include <vector>

#include "swcwt/swsh.hpp"

namespace swcwt {

/// sK_l(x, y) = sum_m sY_l^m(x) conj(sY_l^m(y)).
Complex kernel_sum(int s, int l, const SpherePoint& x, const SpherePoint& y);

/// The same kernel through a single harmonic:
///   (-1)^{-s} sqrt((2l+1)/4pi) sY_l^{-s}(theta3, phi3) e^{-i s chi3},
/// (phi3, theta3, chi3) = compose((0, -theta_y, -phi_y), (phi_x, theta_x, 0)).
Complex kernel_closed(int s, int l, const SpherePoint& x, const SpherePoint& y);

/// Degree-l slice of f (the projection onto sH_l), in coefficient space.
SpinField project_degree(const SpinField& f, int l);
SpinField project_degree(const GridField& f, int lmax, int l);

/// Quadrature value of the convolution (sK_l * f)(x) = int sK_l(x, y) f(y) dsigma(y),
/// with the kernel taken from kernel_closed().
Complex kernel_convolve(const GridField& f, int l, const SpherePoint& x);

struct KernelBoundReport {
  int spin = 0;
  std::vector<int> degrees;
  std::vector<double> max_abs;  // max |sK_l| over the sampled pairs
  std::vector<double> ratio;    // max_abs / l^{2|s|+1}
  double tail_growth = 0.0;     // max over the tail of ratio / ratio at the tail start, minus 1
  bool bounded = true;          // tail_growth <= growth tolerance
};

inline constexpr double kKernelTailGrowthTolerance = 0.05;
inline constexpr int kKernelTailLength = 16;

/// Samples |sK_l| for |s| <= l <= lmax on `samples` point pairs (the
/// coincident pair first, then a seeded low-discrepancy sequence) and checks
/// that max|sK_l| / l^{2|s|+1} does not grow by more than 5% across the last
/// 16 degrees.
KernelBoundReport kernel_bound_scan(int s, int lmax, int samples, std::uint64_t seed = 0);

struct JacobiBoundReport {
  bool holds = true;
  double max_excess = 0.0;  // max of |(1+t)^k P_n^{(0,k)}(t)| - 2^k
  int worst_n = 0;
  int worst_k = 0;
  double worst_t = 0.0;
  std::size_t evaluations = 0;
};

inline constexpr double kJacobiBoundSlack = 1e-9;

/// Checks |(1+t)^k P_n^{(0,k)}(t)| <= 2^k for n <= nmax, k <= kmax on
/// `samples` equispaced t in [-1, 1] (endpoints included).
JacobiBoundReport jacobi_bound_check(int nmax, int kmax, int samples);

}  // namespace swcwt
