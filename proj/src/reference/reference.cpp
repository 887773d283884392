#include "swcwt/reference.hpp"

#include <cstdlib>
#include <stdexcept>

#include "swcwt/wigner.hpp"

namespace swcwt::reference {

GridField synthesize(const SpinField& c, const SphereGrid& grid) {
  GridField out(c.spin(), grid);
  for (int i = 0; i < grid.n_theta(); ++i)
    for (int j = 0; j < grid.n_phi(); ++j) {
      const SpherePoint x = grid.point(i, j);
      Complex v{};
      for (int l = c.lmin(); l <= c.lmax(); ++l)
        for (int m = -l; m <= l; ++m) v += c(l, m) * sy_eval(c.spin(), l, m, x);
      out.at(i, j) = v;
    }
  return out;
}

SpinField analyze(const GridField& f, int lmax) {
  if (!f.grid.exact_for(lmax)) throw std::invalid_argument("analyze: grid too coarse for requested band limit");
  SpinField out(f.spin, lmax);
  const SphereGrid& grid = f.grid;
  for (int l = out.lmin(); l <= lmax; ++l)
    for (int m = -l; m <= l; ++m) {
      Complex sum{};
      for (int i = 0; i < grid.n_theta(); ++i)
        for (int j = 0; j < grid.n_phi(); ++j)
          sum += grid.theta_weight(i) * grid.phi_step() * std::conj(sy_eval(f.spin, l, m, grid.point(i, j))) *
                 f.at(i, j);
      out(l, m) = sum;
    }
  return out;
}

WaveletCoefficients cwt_forward(const SpinField& f, const WaveletFamily& family, const ScaleGrid& scales,
                                const SO3Grid& rotations) {
  if (f.spin() != family.spin()) throw std::invalid_argument("cwt_forward: spin mismatch");
  const int L = f.lmax();
  WaveletCoefficients out(f.spin(), L, scales, rotations);
  for (int is = 0; is < scales.size(); ++is) {
    const SpinField psi = family.at_scale(scales.rho(is));
    for (std::size_t n = 0; n < rotations.size(); ++n) {
      const EulerAngles rot = rotations.node(n);
      Complex value{};
      for (int l = f.lmin(); l <= L; ++l)
        for (int k = -l; k <= l; ++k) {
          Complex rotated{};
          for (int m = -l; m <= l; ++m) rotated += wigner_D(l, k, m, rot) * psi(l, m);
          value += std::conj(rotated) * f(l, k);
        }
      out.at(is, n) = value;
    }
  }
  return out;
}

SpinField cwt_inverse(const WaveletCoefficients& w, const WaveletFamily& family, int lmax) {
  if (w.spin != family.spin()) throw std::invalid_argument("cwt_inverse: spin mismatch");
  SpinField out(w.spin, lmax);
  for (int is = 0; is < w.scales.size(); ++is) {
    const SpinField psi = family.at_scale(w.scales.rho(is));
    for (std::size_t n = 0; n < w.rotations.size(); ++n) {
      const EulerAngles rot = w.rotations.node(n);
      const Complex weighted = w.scales.weight(is) * w.rotations.node_weight(n) * w.at(is, n);
      for (int l = out.lmin(); l <= lmax; ++l)
        for (int k = -l; k <= l; ++k) {
          Complex rotated{};
          for (int m = -l; m <= l; ++m) rotated += wigner_D(l, k, m, rot) * psi(l, m);
          out(l, k) += rotated * weighted;
        }
    }
  }
  return out;
}

}  // namespace swcwt::reference
