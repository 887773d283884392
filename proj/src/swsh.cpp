#include "swcwt/swsh.hpp"

#include <cmath>
#include <cstdlib>
#include <random>
#include <stdexcept>

#include "swcwt/polynomials.hpp"
#include "swcwt/wigner.hpp"

namespace swcwt {
namespace {

double harmonic_norm(int l) { return std::sqrt((2.0 * l + 1.0) / (4.0 * kPi)); }

double parity(int m) { return (m % 2 == 0) ? 1.0 : -1.0; }

// e^{2 pi i r / n} for r = 0, ..., n-1.
std::vector<Complex> phase_table(int n) {
  std::vector<Complex> table(static_cast<std::size_t>(n));
  for (int r = 0; r < n; ++r) table[r] = std::polar(1.0, kTwoPi * r / n);
  return table;
}

int phase_index(long long mj, int n) {
  const long long r = mj % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

void check_band_limit(int spin, int lmax) {
  if (lmax < std::abs(spin)) throw std::out_of_range("band limit below |spin|");
  if (lmax > kMaxDegree) throw std::out_of_range("band limit above supported maximum");
}

}  // namespace

SphereGrid::SphereGrid(int n_theta, int n_phi) : n_theta_(n_theta), n_phi_(n_phi) {
  if (n_theta < 1 || n_phi < 1) throw std::invalid_argument("SphereGrid: node counts must be positive");
  const GaussLegendreRule rule = gauss_legendre(n_theta);
  theta_.resize(n_theta);
  weight_.resize(n_theta);
  // nodes are descending in cos(theta), so theta ascends
  for (int i = 0; i < n_theta; ++i) {
    theta_[i] = std::acos(rule.nodes[i]);
    weight_[i] = rule.weights[i];
  }
}

SphereGrid SphereGrid::for_band_limit(int lmax) { return {2 * lmax + 1, 2 * lmax + 1}; }

SpinField::SpinField(int spin, int lmax) : spin_(spin), lmax_(lmax) {
  check_band_limit(spin, lmax);
  coeffs_.assign(size_for(spin, lmax), Complex{});
}

Complex SpinField::at(int l, int m) const {
  if (l < lmin() || l > lmax_ || std::abs(m) > l) throw std::out_of_range("SpinField: (l, m) out of range");
  return (*this)(l, m);
}

double SpinField::norm_squared() const {
  double sum = 0.0;
  for (const Complex& c : coeffs_) sum += std::norm(c);
  return sum;
}

Complex sy_eval(int s, int l, int m, const SpherePoint& x) {
  if (l < std::abs(s)) throw std::out_of_range("sy_eval: degree below |spin|");
  if (std::abs(m) > l) throw std::out_of_range("sy_eval: order exceeds degree");
  const double d = wigner_d(l, -m, s, x.theta);
  return std::polar(parity(m) * harmonic_norm(l) * d, m * x.phi);
}

Complex evaluate(const SpinField& f, const SpherePoint& x) {
  const int L = f.lmax();
  const int s = f.spin();
  std::vector<double> column(static_cast<std::size_t>(L) + 1);
  Complex total{};
  for (int m = -L; m <= L; ++m) {
    const int l0 = std::max(std::abs(m), f.lmin());
    wigner_d_column(L, -m, s, x.theta, column);
    Complex sum{};
    for (int l = l0; l <= L; ++l) sum += harmonic_norm(l) * column[l - l0] * f(l, m);
    total += parity(m) * sum * std::polar(1.0, m * x.phi);
  }
  return total;
}

GridField synthesize(const SpinField& c, const SphereGrid& grid) {
  const int L = c.lmax();
  const int s = c.spin();
  const int n_phi = grid.n_phi();
  const std::vector<Complex> phases = phase_table(n_phi);
  GridField out(s, grid);

#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid.n_theta(); ++i) {
    std::vector<double> column(static_cast<std::size_t>(L) + 1);
    std::vector<Complex> ring(static_cast<std::size_t>(2 * L + 1));
    const double theta = grid.theta(i);
    for (int m = -L; m <= L; ++m) {
      const int l0 = std::max(std::abs(m), c.lmin());
      wigner_d_column(L, -m, s, theta, column);
      Complex sum{};
      for (int l = l0; l <= L; ++l) sum += harmonic_norm(l) * column[l - l0] * c(l, m);
      ring[m + L] = parity(m) * sum;
    }
    for (int j = 0; j < n_phi; ++j) {
      Complex v{};
      for (int m = -L; m <= L; ++m)
        v += ring[m + L] * phases[phase_index(static_cast<long long>(m) * j, n_phi)];
      out.at(i, j) = v;
    }
  }
  return out;
}

SpinField analyze(const GridField& f, int lmax) {
  const int s = f.spin;
  check_band_limit(s, lmax);
  const SphereGrid& grid = f.grid;
  if (!grid.exact_for(lmax)) throw std::invalid_argument("analyze: grid too coarse for requested band limit");
  const int L = lmax;
  const int n_theta = grid.n_theta();
  const int n_phi = grid.n_phi();
  const std::vector<Complex> phases = phase_table(n_phi);

  // ring[i][m] = dphi * sum_j e^{-i m phi_j} f(theta_i, phi_j)
  const auto width = static_cast<std::size_t>(2 * L + 1);
  std::vector<Complex> ring(static_cast<std::size_t>(n_theta) * width);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n_theta; ++i) {
    for (int m = -L; m <= L; ++m) {
      Complex sum{};
      for (int j = 0; j < n_phi; ++j)
        sum += f.at(i, j) * std::conj(phases[phase_index(static_cast<long long>(m) * j, n_phi)]);
      ring[i * width + (m + L)] = sum * grid.phi_step();
    }
  }

  SpinField out(s, L);
#pragma omp parallel for schedule(static)
  for (int m = -L; m <= L; ++m) {
    const int l0 = std::max(std::abs(m), out.lmin());
    std::vector<double> column(static_cast<std::size_t>(L) + 1);
    std::vector<Complex> acc(static_cast<std::size_t>(L) + 1);
    for (int i = 0; i < n_theta; ++i) {
      wigner_d_column(L, -m, s, grid.theta(i), column);
      const Complex r = grid.theta_weight(i) * ring[i * width + (m + L)];
      for (int l = l0; l <= L; ++l) acc[l] += column[l - l0] * r;
    }
    for (int l = l0; l <= L; ++l) out(l, m) = parity(m) * harmonic_norm(l) * acc[l];
  }
  return out;
}

SpinField eth_raise(const SpinField& c) {
  const int s = c.spin();
  const int L = c.lmax();
  if (std::abs(s + 1) > L) throw std::out_of_range("eth_raise: output spin exceeds band limit");
  SpinField out(s + 1, L);
  for (int l = std::max(out.lmin(), c.lmin()); l <= L; ++l) {
    const double factor = std::sqrt(static_cast<double>(l - s) * (l + s + 1));
    for (int m = -l; m <= l; ++m) out(l, m) = factor * c(l, m);
  }
  return out;
}

SpinField eth_lower(const SpinField& c) {
  const int s = c.spin();
  const int L = c.lmax();
  if (std::abs(s - 1) > L) throw std::out_of_range("eth_lower: output spin exceeds band limit");
  SpinField out(s - 1, L);
  for (int l = std::max(out.lmin(), c.lmin()); l <= L; ++l) {
    const double factor = -std::sqrt(static_cast<double>(l + s) * (l - s + 1));
    for (int m = -l; m <= l; ++m) out(l, m) = factor * c(l, m);
  }
  return out;
}

Complex inner_product(const GridField& f, const GridField& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("inner_product: grid mismatch");
  if (f.spin != g.spin) throw std::invalid_argument("inner_product: spin mismatch");
  Complex total{};
  for (int i = 0; i < f.grid.n_theta(); ++i) {
    Complex row{};
    for (int j = 0; j < f.grid.n_phi(); ++j) row += std::conj(f.at(i, j)) * g.at(i, j);
    total += f.grid.theta_weight(i) * row;
  }
  return total * f.grid.phi_step();
}

Complex inner_product(const SpinField& f, const SpinField& g) {
  if (f.spin() != g.spin()) throw std::invalid_argument("inner_product: spin mismatch");
  const int L = std::min(f.lmax(), g.lmax());
  Complex total{};
  for (int l = f.lmin(); l <= L; ++l)
    for (int m = -l; m <= l; ++m) total += std::conj(f(l, m)) * g(l, m);
  return total;
}

SpinField conjugate(const SpinField& f) {
  const int s = f.spin();
  SpinField out(-s, f.lmax());
  for (int l = f.lmin(); l <= f.lmax(); ++l)
    for (int m = -l; m <= l; ++m) out(l, m) = parity(s + m) * std::conj(f(l, -m));
  return out;
}

SpinField random_field(int spin, int lmax, std::uint64_t seed) {
  SpinField out(spin, lmax);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (Complex& c : out.coeffs()) {
    const double re = dist(rng);
    const double im = dist(rng);
    c = {re, im};
  }
  return out;
}

}  // namespace swcwt
