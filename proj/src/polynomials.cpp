#include "swcwt/polynomials.hpp"

#include <cmath>
#include <stdexcept>

#include "swcwt/geometry.hpp"

namespace swcwt {

void jacobi_sequence(int a, int b, double t, std::span<double> out) {
  if (out.empty()) return;
  out[0] = 1.0;
  if (out.size() == 1) return;
  out[1] = (a + 1) + 0.5 * (a + b + 2) * (t - 1.0);
  const double a2b2 = static_cast<double>(a) * a - static_cast<double>(b) * b;
  for (std::size_t k = 2; k < out.size(); ++k) {
    const double n = static_cast<double>(k);
    const double s = 2.0 * n + a + b;
    const double c0 = 2.0 * n * (n + a + b) * (s - 2.0);
    const double c1 = (s - 1.0) * (s * (s - 2.0) * t + a2b2);
    const double c2 = 2.0 * (n + a - 1.0) * (n + b - 1.0) * s;
    out[k] = (c1 * out[k - 1] - c2 * out[k - 2]) / c0;
  }
}

double jacobi_poly(int n, int a, int b, double t) {
  if (n < 0) throw std::invalid_argument("jacobi_poly: negative degree");
  if (a < 0 || b < 0) throw std::invalid_argument("jacobi_poly: negative parameter");
  std::vector<double> seq(static_cast<std::size_t>(n) + 1);
  jacobi_sequence(a, b, t, seq);
  return seq.back();
}

double legendre_assoc(int l, int m, double t) {
  if (m < 0 || m > l) throw std::invalid_argument("legendre_assoc: need 0 <= m <= l");
  const double st = std::sqrt(std::max(0.0, (1.0 - t) * (1.0 + t)));
  double pmm = 1.0;
  for (int i = 1; i <= m; ++i) pmm *= (2.0 * i - 1.0) * st;
  if (l == m) return pmm;
  double pm1 = t * (2.0 * m + 1.0) * pmm;
  if (l == m + 1) return pm1;
  double pl = 0.0;
  for (int k = m + 2; k <= l; ++k) {
    pl = ((2.0 * k - 1.0) * t * pm1 - (k + m - 1.0) * pmm) / (k - m);
    pmm = pm1;
    pm1 = pl;
  }
  return pl;
}

GaussLegendreRule gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  GaussLegendreRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = x;
    rule.nodes[n - 1 - i] = -x;
    rule.weights[i] = w;
    rule.weights[n - 1 - i] = w;
  }
  if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
  return rule;
}

}  // namespace swcwt
