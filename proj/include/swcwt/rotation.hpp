#pragma once

#include <vector>

#include "swcwt/swsh.hpp"

namespace swcwt {

/// Tensor-product quadrature on SO(3): trapezoid in alpha and gamma,
/// Gauss-Legendre in cos(beta). Weights sum to 8 pi^2 (Haar measure
/// sin(beta) dalpha dbeta dgamma). Nodes are ordered beta-major, then alpha,
/// then gamma.
class SO3Grid {
 public:
  SO3Grid(int n_alpha, int n_beta, int n_gamma);

  /// (2 lmax + 1, lmax + 1, 2 lmax + 1): exact for products of two degree-<=lmax D-functions.
  static SO3Grid for_band_limit(int lmax);

  int n_alpha() const { return n_alpha_; }
  int n_beta() const { return n_beta_; }
  int n_gamma() const { return n_gamma_; }
  std::size_t size() const { return static_cast<std::size_t>(n_alpha_) * n_beta_ * n_gamma_; }

  double alpha(int i) const { return kTwoPi * i / n_alpha_; }
  double beta(int j) const { return beta_[j]; }
  double gamma(int k) const { return kTwoPi * k / n_gamma_; }
  /// Weight of every node in beta-slice j.
  double weight(int j) const { return weight_[j]; }

  std::size_t index(int ia, int ib, int ig) const {
    return (static_cast<std::size_t>(ib) * n_alpha_ + ia) * n_gamma_ + ig;
  }
  EulerAngles node(std::size_t idx) const;
  double node_weight(std::size_t idx) const;

  bool exact_for(int lmax) const {
    return n_alpha_ >= 2 * lmax + 1 && n_gamma_ >= 2 * lmax + 1 && n_beta_ >= lmax + 1;
  }

  friend bool operator==(const SO3Grid& a, const SO3Grid& b) {
    return a.n_alpha_ == b.n_alpha_ && a.n_beta_ == b.n_beta_ && a.n_gamma_ == b.n_gamma_;
  }

 private:
  int n_alpha_;
  int n_beta_;
  int n_gamma_;
  std::vector<double> beta_;
  std::vector<double> weight_;
};

/// g_l^k = sum_m D_l^{km}(rot) f_l^m, degree by degree.
SpinField rotate_field_harmonic(const SpinField& f, const EulerAngles& rot);

/// (R f)(x) = exp(-i s kappa) f(rot^{-1} x), kappa the third Euler angle of rot^{-1} frame_of(x).
Complex rotated_value(const SpinField& f, const EulerAngles& rot, const SpherePoint& x);

/// Samples of the rotated field on a grid, through the point-rotation path.
GridField rotate_field_spatial(const SpinField& f, const SphereGrid& grid, const EulerAngles& rot);
/// Same, for sampled input: the samples are first analyzed up to lmax.
GridField rotate_field_spatial(const GridField& f, int lmax, const EulerAngles& rot);

/// Quadrature of int_{SO(3)} (R f)(x) (R g)(y) dnu, the zonal product as
/// defined (no conjugation). Throws if the grid is not exact for the inputs.
Complex zonal_product_quadrature(const SpinField& f, const SpinField& g, const SpherePoint& x,
                                 const SpherePoint& y, const SO3Grid& grid);

/// (f *^ conj(g))(x, y) = sum_l 8pi^2/(2l+1) sum_m f_l^m conj(g_l^m) sK_l(x, y).
Complex zonal_product_series(const SpinField& f, const SpinField& g, const SpherePoint& x,
                             const SpherePoint& y);

struct DOrthogonalityReport {
  int lmax = 0;
  std::size_t functions = 0;
  double max_error = 0.0;
};

/// Largest deviation of the quadrature Gram matrix of {D_l^{km}}, l <= lmax,
/// from 8 pi^2/(2l+1) delta delta delta.
DOrthogonalityReport d_orthogonality_check(const SO3Grid& grid, int lmax);

}  // namespace swcwt
