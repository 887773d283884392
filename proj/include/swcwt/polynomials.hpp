#pragma once

#include <span>
#include <vector>

namespace swcwt {

/// Jacobi polynomial P_n^{(a,b)}(t) by the three-term recurrence in n.
double jacobi_poly(int n, int a, int b, double t);

/// Writes P_0^{(a,b)}(t), ..., P_{out.size()-1}^{(a,b)}(t) into out.
void jacobi_sequence(int a, int b, double t, std::span<double> out);

/// Associated Legendre function P_l^m(t), m >= 0, without the Condon-Shortley
/// phase: P_1^1(t) = +sqrt(1 - t^2). The (-1)^m lives in the harmonic.
double legendre_assoc(int l, int m, double t);

struct GaussLegendreRule {
  std::vector<double> nodes;    // descending in (-1, 1)
  std::vector<double> weights;  // sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1]; exact for polynomials of degree 2n - 1.
GaussLegendreRule gauss_legendre(int n);

}  // namespace swcwt
