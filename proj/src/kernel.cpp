#include "swcwt/kernel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <random>
#include <stdexcept>

#include "swcwt/polynomials.hpp"
#include "swcwt/wigner.hpp"

namespace swcwt {
namespace {

void check_degree(int s, int l) {
  if (l < std::abs(s)) throw std::out_of_range("kernel: degree below |spin|");
  if (l > kMaxDegree) throw std::out_of_range("kernel: degree above supported maximum");
}

// Point pairs from the two-dimensional additive recurrence with the plastic
// constant, shifted by a seeded offset, mapped to area-uniform points.
std::vector<std::pair<SpherePoint, SpherePoint>> sample_pairs(int samples, std::uint64_t seed) {
  constexpr double g = 1.32471795724474602596;
  const double step[4] = {1.0 / g, 1.0 / (g * g), 1.0 / (g * g * g), 1.0 / (g * g * g * g)};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, 1.0);
  double shift[4];
  for (double& v : shift) v = uniform(rng);

  auto to_point = [](double u, double v) {
    return SpherePoint{std::acos(1.0 - 2.0 * u), kTwoPi * v};
  };
  std::vector<std::pair<SpherePoint, SpherePoint>> pairs;
  pairs.reserve(static_cast<std::size_t>(samples));
  pairs.emplace_back(SpherePoint{0.5 * kPi, 0.0}, SpherePoint{0.5 * kPi, 0.0});
  for (int i = 1; i < samples; ++i) {
    double u[4];
    for (int d = 0; d < 4; ++d) u[d] = std::fmod(shift[d] + i * step[d], 1.0);
    pairs.emplace_back(to_point(u[0], u[1]), to_point(u[2], u[3]));
  }
  return pairs;
}

}  // namespace

Complex kernel_sum(int s, int l, const SpherePoint& x, const SpherePoint& y) {
  check_degree(s, l);
  Complex sum{};
  for (int m = -l; m <= l; ++m) sum += sy_eval(s, l, m, x) * std::conj(sy_eval(s, l, m, y));
  return sum;
}

Complex kernel_closed(int s, int l, const SpherePoint& x, const SpherePoint& y) {
  check_degree(s, l);
  const EulerAngles e = compose({0.0, -y.theta, -y.phi}, {x.phi, x.theta, 0.0});
  const double sign = (s % 2 == 0) ? 1.0 : -1.0;
  const double norm = std::sqrt((2.0 * l + 1.0) / (4.0 * kPi));
  return sign * norm * sy_eval(s, l, -s, {e.beta, e.alpha}) * std::polar(1.0, -s * e.gamma);
}

SpinField project_degree(const SpinField& f, int l) {
  if (l < f.lmin()) throw std::out_of_range("project_degree: degree below |spin|");
  SpinField out(f.spin(), f.lmax());
  if (l > f.lmax()) return out;
  for (int m = -l; m <= l; ++m) out(l, m) = f(l, m);
  return out;
}

SpinField project_degree(const GridField& f, int lmax, int l) {
  return project_degree(analyze(f, lmax), l);
}

Complex kernel_convolve(const GridField& f, int l, const SpherePoint& x) {
  check_degree(f.spin, l);
  const SphereGrid& grid = f.grid;
  Complex total{};
  for (int i = 0; i < grid.n_theta(); ++i) {
    Complex row{};
    for (int j = 0; j < grid.n_phi(); ++j) row += kernel_closed(f.spin, l, x, grid.point(i, j)) * f.at(i, j);
    total += grid.theta_weight(i) * row;
  }
  return total * grid.phi_step();
}

KernelBoundReport kernel_bound_scan(int s, int lmax, int samples, std::uint64_t seed) {
  const int lmin = std::abs(s);
  check_degree(s, lmin);
  check_degree(s, lmax);
  if (samples < 1) throw std::invalid_argument("kernel_bound_scan: need at least one sample");

  const auto pairs = sample_pairs(samples, seed);
  // |sK_l(x, y)| = (2l+1)/(4pi) |d^l_{s,s}(theta3)|, theta3 the angle between x and y
  std::vector<double> separation(pairs.size());
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const Vector3 a = to_cartesian(pairs[p].first);
    const Vector3 b = to_cartesian(pairs[p].second);
    const double c = std::clamp(a[0] * b[0] + a[1] * b[1] + a[2] * b[2], -1.0, 1.0);
    separation[p] = std::acos(c);
  }

  KernelBoundReport report;
  report.spin = s;
  const int count = lmax - lmin + 1;
  report.degrees.resize(count);
  report.max_abs.assign(count, 0.0);
  report.ratio.assign(count, 0.0);

  // one d^l_{s,s} column per pair, then an independent max per degree
  const auto width = static_cast<std::size_t>(count);
  std::vector<double> columns(pairs.size() * width);
#pragma omp parallel for schedule(static)
  for (std::size_t p = 0; p < pairs.size(); ++p)
    wigner_d_column(lmax, s, s, separation[p], std::span<double>(columns.data() + p * width, width));

  std::vector<double> best(width, 0.0);
#pragma omp parallel for schedule(static)
  for (int n = 0; n < count; ++n)
    for (std::size_t p = 0; p < pairs.size(); ++p) best[n] = std::max(best[n], std::abs(columns[p * width + n]));

  for (int n = 0; n < count; ++n) {
    const int l = lmin + n;
    report.degrees[n] = l;
    report.max_abs[n] = (2.0 * l + 1.0) / (4.0 * kPi) * best[n];
    report.ratio[n] = l == 0 ? report.max_abs[n] : report.max_abs[n] / std::pow(l, 2 * lmin + 1);
  }

  // l = 0 has no defined ratio, so it never enters the tail window
  const int first = lmin == 0 && count > 1 ? 1 : 0;
  const int start = std::max(first, count - kKernelTailLength);
  double growth = 0.0;
  for (int n = start; n < count; ++n) growth = std::max(growth, report.ratio[n] / report.ratio[start] - 1.0);
  report.tail_growth = growth;
  report.bounded = growth <= kKernelTailGrowthTolerance;
  return report;
}

JacobiBoundReport jacobi_bound_check(int nmax, int kmax, int samples) {
  if (nmax < 0 || kmax < 0 || samples < 2) throw std::invalid_argument("jacobi_bound_check: bad arguments");
  JacobiBoundReport report;
  report.max_excess = -std::numeric_limits<double>::infinity();
  std::vector<double> seq(static_cast<std::size_t>(nmax) + 1);
  for (int k = 0; k <= kmax; ++k) {
    const double bound = std::ldexp(1.0, k);
    for (int i = 0; i < samples; ++i) {
      const double t = i == samples - 1 ? 1.0 : -1.0 + 2.0 * i / (samples - 1);
      jacobi_sequence(0, k, t, seq);
      const double weight = std::pow(1.0 + t, k);
      for (int n = 0; n <= nmax; ++n) {
        const double excess = std::abs(weight * seq[n]) - bound;
        ++report.evaluations;
        if (excess > report.max_excess) {
          report.max_excess = excess;
          report.worst_n = n;
          report.worst_k = k;
          report.worst_t = t;
        }
      }
    }
  }
  report.holds = report.max_excess <= kJacobiBoundSlack;
  return report;
}

}  // namespace swcwt
