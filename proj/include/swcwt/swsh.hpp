#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "swcwt/geometry.hpp"

namespace swcwt {

using Complex = std::complex<double>;

/// Gauss-Legendre nodes in cos(theta) times equiangular nodes in phi.
class SphereGrid {
 public:
  SphereGrid(int n_theta, int n_phi);

  /// The default grid for a band limit: (2 lmax + 1) x (2 lmax + 1).
  static SphereGrid for_band_limit(int lmax);

  int n_theta() const { return n_theta_; }
  int n_phi() const { return n_phi_; }
  std::size_t size() const { return static_cast<std::size_t>(n_theta_) * n_phi_; }

  double theta(int i) const { return theta_[i]; }
  double phi(int j) const { return kTwoPi * j / n_phi_; }
  double theta_weight(int i) const { return weight_[i]; }
  double phi_step() const { return kTwoPi / n_phi_; }
  SpherePoint point(int i, int j) const { return {theta(i), phi(j)}; }

  /// True when products of two degree-<=lmax harmonics integrate exactly.
  bool exact_for(int lmax) const { return n_theta_ >= lmax + 1 && n_phi_ >= 2 * lmax + 1; }

  friend bool operator==(const SphereGrid& a, const SphereGrid& b) {
    return a.n_theta_ == b.n_theta_ && a.n_phi_ == b.n_phi_;
  }

 private:
  int n_theta_;
  int n_phi_;
  std::vector<double> theta_;
  std::vector<double> weight_;
};

/// Harmonic coefficients of a band-limited spin-s function, l-major with m
/// running from -l to l, starting at l = |s|.
class SpinField {
 public:
  SpinField(int spin, int lmax);

  static std::size_t size_for(int spin, int lmax) {
    return static_cast<std::size_t>((lmax + 1) * (lmax + 1) - spin * spin);
  }

  int spin() const { return spin_; }
  int lmax() const { return lmax_; }
  int lmin() const { return spin_ < 0 ? -spin_ : spin_; }
  std::size_t size() const { return coeffs_.size(); }

  std::size_t index(int l, int m) const {
    return static_cast<std::size_t>(l * l + l + m - spin_ * spin_);
  }
  Complex& operator()(int l, int m) { return coeffs_[index(l, m)]; }
  const Complex& operator()(int l, int m) const { return coeffs_[index(l, m)]; }
  /// Bounds-checked access; throws std::out_of_range.
  Complex at(int l, int m) const;

  std::span<Complex> coeffs() { return coeffs_; }
  std::span<const Complex> coeffs() const { return coeffs_; }

  double norm_squared() const;

 private:
  int spin_;
  int lmax_;
  std::vector<Complex> coeffs_;
};

/// Samples of a spin-s function on a SphereGrid, row-major in (theta, phi).
struct GridField {
  int spin = 0;
  SphereGrid grid;
  std::vector<Complex> values;

  GridField(int spin_weight, SphereGrid g)
      : spin(spin_weight), grid(std::move(g)), values(grid.size()) {}

  Complex& at(int i, int j) { return values[static_cast<std::size_t>(i) * grid.n_phi() + j]; }
  const Complex& at(int i, int j) const {
    return values[static_cast<std::size_t>(i) * grid.n_phi() + j];
  }
};

/// sY_l^m(theta, phi) = (-1)^m sqrt((2l+1)/4pi) d^l_{-m,s}(theta) e^{i m phi}.
Complex sy_eval(int s, int l, int m, const SpherePoint& x);

/// Pointwise value of the harmonic series at an arbitrary point.
Complex evaluate(const SpinField& f, const SpherePoint& x);

GridField synthesize(const SpinField& c, const SphereGrid& grid);
SpinField analyze(const GridField& f, int lmax);

/// Spin raising: coefficient at (l, m) becomes +sqrt((l-s)(l+s+1)) times the input.
SpinField eth_raise(const SpinField& c);
/// Spin lowering: coefficient at (l, m) becomes -sqrt((l+s)(l-s+1)) times the input.
SpinField eth_lower(const SpinField& c);

/// Integral of conj(f) g over the sphere by the grid quadrature.
Complex inner_product(const GridField& f, const GridField& g);
/// The same pairing on coefficients (Parseval).
Complex inner_product(const SpinField& f, const SpinField& g);

/// Coefficients of the pointwise conjugate, a spin -s field:
/// conj(sY_l^m) = (-1)^{s+m} (-s)Y_l^{-m}.
SpinField conjugate(const SpinField& f);

/// Seeded random band-limited field with coefficients uniform in the unit square.
SpinField random_field(int spin, int lmax, std::uint64_t seed);

}  // namespace swcwt
