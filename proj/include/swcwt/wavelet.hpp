#pragma once

#include <functional>
#include <string>
#include <vector>

#include "swcwt/rotation.hpp"
#include "swcwt/swsh.hpp"

namespace swcwt {

/// A scale-indexed family of band-limited spin-s wavelets together with the
/// weight alpha(rho) of the scale measure.
class WaveletFamily {
 public:
  using CoefficientFn = std::function<Complex(double rho, int l, int m)>;
  using WeightFn = std::function<double(double rho)>;

  WaveletFamily(int spin, int lmax, CoefficientFn coeff, WeightFn weight, std::string weight_name);

  int spin() const { return spin_; }
  int lmax() const { return lmax_; }
  int lmin() const { return spin_ < 0 ? -spin_ : spin_; }

  Complex coeff(double rho, int l, int m) const { return coeff_(rho, l, m); }
  double weight(double rho) const { return weight_(rho); }
  const WeightFn& weight_function() const { return weight_; }
  const std::string& weight_name() const { return weight_name_; }

  /// All harmonic coefficients of the wavelet at scale rho.
  SpinField at_scale(double rho) const;

  /// The family with every coefficient multiplied by gain.
  WaveletFamily scaled(Complex gain) const;

 private:
  int spin_;
  int lmax_;
  CoefficientFn coeff_;
  WeightFn weight_;
  std::string weight_name_;
};

struct ExampleFamilyParams {
  double a = 1.0;
  double b = 1.0;
  double c = 1.0;
  std::vector<double> q{1.0, 1.0};  // polynomial coefficients, ascending powers of l
};

double evaluate_polynomial(const std::vector<double>& ascending, double x);

/// Generating-function family with weight alpha(rho) = 1/rho:
///   Psi_l^0(rho) = (1/2pi) sqrt((2l+1)/2) sqrt(4^c a / Gamma(2c)) (rho^a q(l)^b)^c exp(-rho^a q(l)^b),
/// all other orders zero. Rejects a, b, c <= 0 and q(l) <= 0 for any |s| <= l <= lmax.
WaveletFamily example_family(const ExampleFamilyParams& params, int spin, int lmax);

/// Log-spaced scale nodes on [R, 1/R] with trapezoid weights in log(rho) that
/// already include alpha(rho) * rho, so sum_i w_i h(rho_i) ~ int_R^{1/R} h alpha drho.
class ScaleGrid {
 public:
  ScaleGrid(double cutoff, int n_scales, const WaveletFamily::WeightFn& weight, std::string weight_name);
  ScaleGrid(const WaveletFamily& family, double cutoff, int n_scales)
      : ScaleGrid(cutoff, n_scales, family.weight_function(), family.weight_name()) {}

  double cutoff() const { return cutoff_; }
  int size() const { return static_cast<int>(rho_.size()); }
  double rho(int i) const { return rho_[i]; }
  double weight(int i) const { return weight_[i]; }
  const std::string& weight_name() const { return weight_name_; }

  friend bool operator==(const ScaleGrid& a, const ScaleGrid& b) {
    return a.cutoff_ == b.cutoff_ && a.rho_.size() == b.rho_.size() && a.weight_name_ == b.weight_name_;
  }

 private:
  double cutoff_;
  std::vector<double> rho_;
  std::vector<double> weight_;
  std::string weight_name_;
};

inline constexpr double kDefaultAdmissibilityTolerance = 1e-4;

struct AdmissibilityReport {
  int spin = 0;
  std::vector<int> degrees;
  std::vector<double> integrals;      // I_l = sum_m int |Psi_l^m|^2 alpha drho
  std::vector<double> targets;        // (2l+1) / (8 pi^2)
  std::vector<double> rel_deviation;  // |I_l - target| / target
  std::vector<double> condition2;     // sum_l l^{2|s|} sum_m |Psi_l^m(rho_i)|^2 per scale node
  bool condition2_finite = true;
  double max_deviation = 0.0;
  double tolerance = kDefaultAdmissibilityTolerance;
  bool pass = false;
};

AdmissibilityReport admissibility_check(const WaveletFamily& family, double cutoff, int n_scales,
                                        double tolerance = kDefaultAdmissibilityTolerance);

/// Per-degree factor by which forward-then-inverse on these scales multiplies
/// the coefficients: 8pi^2/(2l+1) sum_m sum_i w_i |Psi_l^m(rho_i)|^2. Indexed by l.
std::vector<double> reconstruction_multipliers(const WaveletFamily& family, const ScaleGrid& scales);

/// Transform values on a scale grid x SO(3) grid, scale-major.
struct WaveletCoefficients {
  int spin = 0;
  int lmax = 0;
  ScaleGrid scales;
  SO3Grid rotations;
  std::vector<Complex> values;

  WaveletCoefficients(int spin_weight, int band_limit, ScaleGrid s, SO3Grid r)
      : spin(spin_weight), lmax(band_limit), scales(std::move(s)), rotations(std::move(r)),
        values(static_cast<std::size_t>(scales.size()) * rotations.size()) {}

  std::size_t index(int scale, std::size_t node) const {
    return static_cast<std::size_t>(scale) * rotations.size() + node;
  }
  Complex& at(int scale, std::size_t node) { return values[index(scale, node)]; }
  const Complex& at(int scale, std::size_t node) const { return values[index(scale, node)]; }
};

/// One transform value, sum_{l,k} conj(sum_m D_l^{km}(rot) Psi_l^m(rho)) f_l^k.
Complex cwt_value(const SpinField& f, const WaveletFamily& family, double rho, const EulerAngles& rot);

/// Transform at every (scale, rotation) node; OpenMP-parallel over (scale, beta) slices.
WaveletCoefficients cwt_forward(const SpinField& f, const WaveletFamily& family, const ScaleGrid& scales,
                                const SO3Grid& rotations);

/// Quadrature of int_R^{1/R} int_SO(3) (R Psi_rho) W dnu alpha drho, in harmonic space.
SpinField cwt_inverse(const WaveletCoefficients& w, const WaveletFamily& family, int lmax);

/// <F, G> = sum over scales and rotations of conj(F) G with both quadrature weights.
Complex phase_space_inner(const WaveletCoefficients& wf, const WaveletCoefficients& wg);

}  // namespace swcwt
