#pragma once

#include <complex>
#include <span>
#include <vector>

#include "swcwt/geometry.hpp"

namespace swcwt {

/// Largest band limit supported anywhere in the library.
inline constexpr int kMaxDegree = 128;

/// Wigner small-d element d^l_{m,k}(beta).
///
/// Evaluated from the Jacobi closed form on the region k >= |m|,
///   d^l_{m,k} = sqrt((l-k)!(l+k)! / ((l-m)!(l+m)!))
///               sin^{k-m}(beta/2) cos^{k+m}(beta/2) P_{l-k}^{(k-m,k+m)}(cos beta),
/// and mapped elsewhere with d_{m,k} = (-1)^{m-k} d_{-m,-k} = (-1)^{m-k} d_{k,m}.
double wigner_d(int l, int m, int k, double beta);

/// d^l_{m,k}(beta) for l = max(|m|,|k|), ..., lmax written to out[0], out[1], ...
/// out must hold lmax - max(|m|,|k|) + 1 values.
void wigner_d_column(int lmax, int m, int k, double beta, std::span<double> out);

/// Wigner D-function D_l^{km}(alpha, beta, gamma) = e^{-ik alpha} d^l_{k,m}(beta) e^{-im gamma}.
std::complex<double> wigner_D(int l, int k, int m, const EulerAngles& rot);

/// All d^l_{m,k}(beta) for 0 <= l <= lmax, |m|, |k| <= l at a single angle.
class WignerTable {
 public:
  WignerTable(int lmax, double beta);

  int lmax() const { return lmax_; }
  double beta() const { return beta_; }

  double operator()(int l, int m, int k) const {
    return entries_[offset(l) + static_cast<std::size_t>((m + l) * (2 * l + 1) + (k + l))];
  }

  /// Row-major (2l+1) x (2l+1) block of degree l, indexed [(m+l)*(2l+1) + (k+l)].
  std::span<const double> block(int l) const {
    const auto n = static_cast<std::size_t>(2 * l + 1);
    return {entries_.data() + offset(l), n * n};
  }

 private:
  static std::size_t offset(int l) {
    const auto ll = static_cast<std::size_t>(l);
    return ll * (2 * ll - 1) * (2 * ll + 1) / 3;
  }

  int lmax_;
  double beta_;
  std::vector<double> entries_;
};

}  // namespace swcwt
