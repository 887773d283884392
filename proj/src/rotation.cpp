#include "swcwt/rotation.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "swcwt/kernel.hpp"
#include "swcwt/polynomials.hpp"
#include "swcwt/wigner.hpp"

namespace swcwt {

SO3Grid::SO3Grid(int n_alpha, int n_beta, int n_gamma)
    : n_alpha_(n_alpha), n_beta_(n_beta), n_gamma_(n_gamma) {
  if (n_alpha < 1 || n_beta < 1 || n_gamma < 1) throw std::invalid_argument("SO3Grid: node counts must be positive");
  const GaussLegendreRule rule = gauss_legendre(n_beta);
  beta_.resize(n_beta);
  weight_.resize(n_beta);
  const double trapezoid = (kTwoPi / n_alpha) * (kTwoPi / n_gamma);
  for (int j = 0; j < n_beta; ++j) {
    beta_[j] = std::acos(rule.nodes[j]);
    weight_[j] = trapezoid * rule.weights[j];
  }
}

SO3Grid SO3Grid::for_band_limit(int lmax) { return {2 * lmax + 1, lmax + 1, 2 * lmax + 1}; }

EulerAngles SO3Grid::node(std::size_t idx) const {
  const int ig = static_cast<int>(idx % n_gamma_);
  const std::size_t rest = idx / n_gamma_;
  const int ia = static_cast<int>(rest % n_alpha_);
  const int ib = static_cast<int>(rest / n_alpha_);
  return {alpha(ia), beta(ib), gamma(ig)};
}

double SO3Grid::node_weight(std::size_t idx) const {
  return weight_[idx / (static_cast<std::size_t>(n_gamma_) * n_alpha_)];
}

SpinField rotate_field_harmonic(const SpinField& f, const EulerAngles& rot) {
  const int L = f.lmax();
  const WignerTable d(L, rot.beta);
  SpinField out(f.spin(), L);
  for (int l = f.lmin(); l <= L; ++l) {
    for (int k = -l; k <= l; ++k) {
      Complex sum{};
      for (int m = -l; m <= l; ++m) sum += d(l, k, m) * std::polar(1.0, -m * rot.gamma) * f(l, m);
      out(l, k) = std::polar(1.0, -k * rot.alpha) * sum;
    }
  }
  return out;
}

Complex rotated_value(const SpinField& f, const EulerAngles& rot, const SpherePoint& x) {
  const EulerAngles e = pull_back_frame(rot, x);
  return std::polar(1.0, -f.spin() * e.gamma) * evaluate(f, {e.beta, e.alpha});
}

GridField rotate_field_spatial(const SpinField& f, const SphereGrid& grid, const EulerAngles& rot) {
  GridField out(f.spin(), grid);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid.n_theta(); ++i)
    for (int j = 0; j < grid.n_phi(); ++j) out.at(i, j) = rotated_value(f, rot, grid.point(i, j));
  return out;
}

GridField rotate_field_spatial(const GridField& f, int lmax, const EulerAngles& rot) {
  return rotate_field_spatial(analyze(f, lmax), f.grid, rot);
}

Complex zonal_product_quadrature(const SpinField& f, const SpinField& g, const SpherePoint& x,
                                 const SpherePoint& y, const SO3Grid& grid) {
  if (!grid.exact_for(std::max(f.lmax(), g.lmax())))
    throw std::invalid_argument("zonal_product_quadrature: SO(3) grid too coarse");
  // one partial sum per beta slice, added in slice order
  std::vector<Complex> slice(static_cast<std::size_t>(grid.n_beta()));
#pragma omp parallel for schedule(static)
  for (int ib = 0; ib < grid.n_beta(); ++ib) {
    Complex sum{};
    for (int ia = 0; ia < grid.n_alpha(); ++ia)
      for (int ig = 0; ig < grid.n_gamma(); ++ig) {
        const EulerAngles rot{grid.alpha(ia), grid.beta(ib), grid.gamma(ig)};
        sum += rotated_value(f, rot, x) * rotated_value(g, rot, y);
      }
    slice[ib] = grid.weight(ib) * sum;
  }
  Complex total{};
  for (const Complex& v : slice) total += v;
  return total;
}

Complex zonal_product_series(const SpinField& f, const SpinField& g, const SpherePoint& x,
                             const SpherePoint& y) {
  if (f.spin() != g.spin()) throw std::invalid_argument("zonal_product_series: spin mismatch");
  const int s = f.spin();
  const int L = std::min(f.lmax(), g.lmax());
  Complex total{};
  for (int l = f.lmin(); l <= L; ++l) {
    Complex pairing{};
    for (int m = -l; m <= l; ++m) pairing += f(l, m) * std::conj(g(l, m));
    total += 8.0 * kPi * kPi / (2.0 * l + 1.0) * pairing * kernel_sum(s, l, x, y);
  }
  return total;
}

DOrthogonalityReport d_orthogonality_check(const SO3Grid& grid, int lmax) {
  if (lmax < 0 || lmax > kMaxDegree) throw std::out_of_range("d_orthogonality_check: lmax out of range");
  struct Index {
    int l, k, m;
  };
  std::vector<Index> functions;
  for (int l = 0; l <= lmax; ++l)
    for (int k = -l; k <= l; ++k)
      for (int m = -l; m <= l; ++m) functions.push_back({l, k, m});

  const std::size_t nodes = grid.size();
  const std::size_t count = functions.size();
  std::vector<Complex> samples(count * nodes);
  for (int ib = 0; ib < grid.n_beta(); ++ib) {
    const WignerTable d(lmax, grid.beta(ib));
    for (int ia = 0; ia < grid.n_alpha(); ++ia)
      for (int ig = 0; ig < grid.n_gamma(); ++ig) {
        const std::size_t node = grid.index(ia, ib, ig);
        for (std::size_t f = 0; f < count; ++f) {
          const auto [l, k, m] = functions[f];
          samples[f * nodes + node] = std::polar(d(l, k, m), -(k * grid.alpha(ia) + m * grid.gamma(ig)));
        }
      }
  }

  std::vector<double> row_error(count, 0.0);
#pragma omp parallel for schedule(dynamic)
  for (std::size_t a = 0; a < count; ++a) {
    for (std::size_t b = a; b < count; ++b) {
      Complex sum{};
      for (std::size_t n = 0; n < nodes; ++n)
        sum += grid.node_weight(n) * std::conj(samples[a * nodes + n]) * samples[b * nodes + n];
      const double expected = a == b ? 8.0 * kPi * kPi / (2.0 * functions[a].l + 1.0) : 0.0;
      row_error[a] = std::max(row_error[a], std::abs(sum - expected));
    }
  }

  DOrthogonalityReport report;
  report.lmax = lmax;
  report.functions = count;
  report.max_error = *std::max_element(row_error.begin(), row_error.end());
  return report;
}

}  // namespace swcwt
