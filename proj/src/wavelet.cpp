#include "swcwt/wavelet.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "swcwt/wigner.hpp"

namespace swcwt {
namespace {

// Sums equal-length vectors pairwise in a fixed tree order.
std::vector<Complex> tree_sum(std::vector<std::vector<Complex>> parts) {
  if (parts.empty()) return {};
  for (std::size_t stride = 1; stride < parts.size(); stride *= 2)
    for (std::size_t i = 0; i + stride < parts.size(); i += 2 * stride)
      for (std::size_t n = 0; n < parts[i].size(); ++n) parts[i][n] += parts[i + stride][n];
  return std::move(parts.front());
}

Complex tree_sum(std::vector<Complex> values) {
  if (values.empty()) return {};
  for (std::size_t stride = 1; stride < values.size(); stride *= 2)
    for (std::size_t i = 0; i + stride < values.size(); i += 2 * stride) values[i] += values[i + stride];
  return values.front();
}

std::vector<WignerTable> beta_tables(const SO3Grid& grid, int lmax) {
  std::vector<WignerTable> tables;
  tables.reserve(static_cast<std::size_t>(grid.n_beta()));
  for (int ib = 0; ib < grid.n_beta(); ++ib) tables.emplace_back(lmax, grid.beta(ib));
  return tables;
}

// table[i * (2L+1) + (k+L)] = e^{i k x_i}, x_i = 2 pi i / n
std::vector<Complex> harmonic_phases(int n, int L) {
  const auto width = static_cast<std::size_t>(2 * L + 1);
  std::vector<Complex> table(static_cast<std::size_t>(n) * width);
  for (int i = 0; i < n; ++i)
    for (int k = -L; k <= L; ++k) table[i * width + (k + L)] = std::polar(1.0, kTwoPi * k * i / n);
  return table;
}

// Orders m carried by at least one scale of the family up to degree L.
std::vector<int> active_orders(const std::vector<SpinField>& psi, int L) {
  std::vector<int> orders;
  for (int m = -L; m <= L; ++m) {
    bool used = false;
    for (const SpinField& p : psi)
      for (int l = std::max(std::abs(m), p.lmin()); l <= L && !used; ++l) used = p(l, m) != Complex{};
    if (used) orders.push_back(m);
  }
  return orders;
}

}  // namespace

WaveletFamily::WaveletFamily(int spin, int lmax, CoefficientFn coeff, WeightFn weight, std::string weight_name)
    : spin_(spin), lmax_(lmax), coeff_(std::move(coeff)), weight_(std::move(weight)),
      weight_name_(std::move(weight_name)) {
  if (lmax < std::abs(spin)) throw std::out_of_range("WaveletFamily: band limit below |spin|");
  if (lmax > kMaxDegree) throw std::out_of_range("WaveletFamily: band limit above supported maximum");
  if (!coeff_ || !weight_) throw std::invalid_argument("WaveletFamily: missing coefficient or weight function");
}

SpinField WaveletFamily::at_scale(double rho) const {
  SpinField out(spin_, lmax_);
  for (int l = lmin(); l <= lmax_; ++l)
    for (int m = -l; m <= l; ++m) out(l, m) = coeff_(rho, l, m);
  return out;
}

WaveletFamily WaveletFamily::scaled(Complex gain) const {
  CoefficientFn inner = coeff_;
  return {spin_, lmax_, [inner, gain](double rho, int l, int m) { return gain * inner(rho, l, m); }, weight_,
          weight_name_};
}

double evaluate_polynomial(const std::vector<double>& ascending, double x) {
  double value = 0.0;
  for (auto it = ascending.rbegin(); it != ascending.rend(); ++it) value = value * x + *it;
  return value;
}

WaveletFamily example_family(const ExampleFamilyParams& p, int spin, int lmax) {
  if (!(p.a > 0.0 && p.b > 0.0 && p.c > 0.0)) throw std::invalid_argument("example_family: a, b, c must be positive");
  if (p.q.empty()) throw std::invalid_argument("example_family: empty polynomial q");
  if (lmax < std::abs(spin)) throw std::out_of_range("example_family: band limit below |spin|");
  for (int l = std::abs(spin); l <= lmax; ++l)
    if (!(evaluate_polynomial(p.q, l) > 0.0))
      throw std::invalid_argument("example_family: q(l) must be positive for every |s| <= l <= lmax");

  // log of sqrt(4^c a / Gamma(2c)) / (2 pi)
  const double log_amplitude = 0.5 * (p.c * std::log(4.0) + std::log(p.a) - std::lgamma(2.0 * p.c)) - std::log(kTwoPi);
  auto coeff = [p, log_amplitude](double rho, int l, int m) -> Complex {
    if (m != 0) return {};
    const double x = std::pow(rho, p.a) * std::pow(evaluate_polynomial(p.q, l), p.b);
    const double log_profile = p.c * std::log(x) - x;
    return std::sqrt((2.0 * l + 1.0) / 2.0) * std::exp(log_amplitude + log_profile);
  };
  return {spin, lmax, coeff, [](double rho) { return 1.0 / rho; }, "one_over_rho"};
}

ScaleGrid::ScaleGrid(double cutoff, int n_scales, const WaveletFamily::WeightFn& weight, std::string weight_name)
    : cutoff_(cutoff), weight_name_(std::move(weight_name)) {
  if (!(cutoff > 0.0 && cutoff < 1.0)) throw std::invalid_argument("ScaleGrid: cutoff must lie in (0, 1)");
  if (n_scales < 2) throw std::invalid_argument("ScaleGrid: need at least two scales");
  const double lo = std::log(cutoff);
  const double step = -2.0 * lo / (n_scales - 1);
  rho_.resize(n_scales);
  weight_.resize(n_scales);
  for (int i = 0; i < n_scales; ++i) {
    const double u = i == n_scales - 1 ? -lo : lo + step * i;
    const double rho = std::exp(u);
    const double trapezoid = (i == 0 || i == n_scales - 1) ? 0.5 * step : step;
    rho_[i] = rho;
    weight_[i] = trapezoid * weight(rho) * rho;
    if (!(weight_[i] > 0.0)) throw std::invalid_argument("ScaleGrid: weight must be positive");
  }
}

AdmissibilityReport admissibility_check(const WaveletFamily& family, double cutoff, int n_scales, double tolerance) {
  const ScaleGrid scales(family, cutoff, n_scales);
  const int lmin = family.lmin();
  const int L = family.lmax();
  AdmissibilityReport report;
  report.spin = family.spin();
  report.tolerance = tolerance;
  report.condition2.assign(static_cast<std::size_t>(scales.size()), 0.0);
  std::vector<double> integrals(static_cast<std::size_t>(L + 1), 0.0);

  for (int i = 0; i < scales.size(); ++i) {
    const SpinField psi = family.at_scale(scales.rho(i));
    double partial = 0.0;
    for (int l = lmin; l <= L; ++l) {
      double energy = 0.0;
      for (int m = -l; m <= l; ++m) energy += std::norm(psi(l, m));
      integrals[l] += scales.weight(i) * energy;
      partial += std::pow(static_cast<double>(l), 2 * lmin) * energy;
    }
    report.condition2[i] = partial;
    report.condition2_finite = report.condition2_finite && std::isfinite(partial);
  }

  for (int l = lmin; l <= L; ++l) {
    const double target = (2.0 * l + 1.0) / (8.0 * kPi * kPi);
    const double deviation = std::abs(integrals[l] - target) / target;
    report.degrees.push_back(l);
    report.integrals.push_back(integrals[l]);
    report.targets.push_back(target);
    report.rel_deviation.push_back(deviation);
    report.max_deviation = std::max(report.max_deviation, deviation);
  }
  report.pass = report.condition2_finite && report.max_deviation <= tolerance;
  return report;
}

std::vector<double> reconstruction_multipliers(const WaveletFamily& family, const ScaleGrid& scales) {
  const int L = family.lmax();
  std::vector<double> out(static_cast<std::size_t>(L + 1), 0.0);
  for (int i = 0; i < scales.size(); ++i) {
    const SpinField psi = family.at_scale(scales.rho(i));
    for (int l = family.lmin(); l <= L; ++l) {
      double energy = 0.0;
      for (int m = -l; m <= l; ++m) energy += std::norm(psi(l, m));
      out[l] += scales.weight(i) * energy;
    }
  }
  for (int l = family.lmin(); l <= L; ++l) out[l] *= 8.0 * kPi * kPi / (2.0 * l + 1.0);
  return out;
}

Complex cwt_value(const SpinField& f, const WaveletFamily& family, double rho, const EulerAngles& rot) {
  if (f.spin() != family.spin()) throw std::invalid_argument("cwt_value: spin mismatch");
  if (f.lmax() > family.lmax()) throw std::invalid_argument("cwt_value: field band limit exceeds the family's");
  const int L = f.lmax();
  const SpinField psi = family.at_scale(rho);
  const WignerTable d(L, rot.beta);
  Complex total{};
  for (int l = f.lmin(); l <= L; ++l)
    for (int k = -l; k <= l; ++k) {
      Complex rotated{};
      for (int m = -l; m <= l; ++m) rotated += d(l, k, m) * std::polar(1.0, -m * rot.gamma) * psi(l, m);
      rotated *= std::polar(1.0, -k * rot.alpha);
      total += std::conj(rotated) * f(l, k);
    }
  return total;
}

WaveletCoefficients cwt_forward(const SpinField& f, const WaveletFamily& family, const ScaleGrid& scales,
                                const SO3Grid& rotations) {
  if (f.spin() != family.spin()) throw std::invalid_argument("cwt_forward: spin mismatch");
  if (f.lmax() > family.lmax()) throw std::invalid_argument("cwt_forward: field band limit exceeds the family's");
  if (scales.weight_name() != family.weight_name())
    throw std::invalid_argument("cwt_forward: scale grid built for a different weight");
  const int L = f.lmax();
  const int lmin = f.lmin();
  const auto width = static_cast<std::size_t>(2 * L + 1);
  WaveletCoefficients out(f.spin(), L, scales, rotations);

  std::vector<SpinField> psi;
  psi.reserve(static_cast<std::size_t>(scales.size()));
  for (int i = 0; i < scales.size(); ++i) psi.push_back(family.at_scale(scales.rho(i)));
  const std::vector<int> orders = active_orders(psi, L);
  const std::vector<WignerTable> d = beta_tables(rotations, L);
  const std::vector<Complex> alpha_phase = harmonic_phases(rotations.n_alpha(), L);
  const std::vector<Complex> gamma_phase = harmonic_phases(rotations.n_gamma(), L);

  const int n_beta = rotations.n_beta();
  const int tasks = scales.size() * n_beta;
#pragma omp parallel for schedule(dynamic)
  for (int task = 0; task < tasks; ++task) {
    const int is = task / n_beta;
    const int ib = task % n_beta;
    const SpinField& p = psi[is];
    const WignerTable& table = d[ib];

    // A[k][m] = sum_l d^l_{km} conj(Psi_l^m) f_l^k
    std::vector<Complex> a(width * width);
    for (int k = -L; k <= L; ++k)
      for (const int m : orders)
        for (int l = std::max({std::abs(k), std::abs(m), lmin}); l <= L; ++l)
          a[(k + L) * width + (m + L)] += table(l, k, m) * std::conj(p(l, m)) * f(l, k);

    std::vector<Complex> b(width);
    for (int ig = 0; ig < rotations.n_gamma(); ++ig) {
      const Complex* eg = gamma_phase.data() + ig * width;
      for (int k = -L; k <= L; ++k) {
        Complex sum{};
        for (const int m : orders) sum += eg[m + L] * a[(k + L) * width + (m + L)];
        b[k + L] = sum;
      }
      for (int ia = 0; ia < rotations.n_alpha(); ++ia) {
        const Complex* ea = alpha_phase.data() + ia * width;
        Complex value{};
        for (int k = -L; k <= L; ++k) value += ea[k + L] * b[k + L];
        out.at(is, rotations.index(ia, ib, ig)) = value;
      }
    }
  }
  return out;
}

SpinField cwt_inverse(const WaveletCoefficients& w, const WaveletFamily& family, int lmax) {
  if (w.spin != family.spin()) throw std::invalid_argument("cwt_inverse: spin mismatch");
  if (lmax > family.lmax()) throw std::invalid_argument("cwt_inverse: band limit exceeds the family's");
  if (w.values.size() != static_cast<std::size_t>(w.scales.size()) * w.rotations.size())
    throw std::invalid_argument("cwt_inverse: coefficient count does not match the grids");
  if (!w.rotations.exact_for(std::max(lmax, w.lmax)))
    throw std::invalid_argument("cwt_inverse: SO(3) grid too coarse for the band limit");
  if (w.scales.weight_name() != family.weight_name())
    throw std::invalid_argument("cwt_inverse: scale grid built for a different weight");

  const SO3Grid& rotations = w.rotations;
  const ScaleGrid& scales = w.scales;
  const int L = lmax;
  const auto width = static_cast<std::size_t>(2 * L + 1);
  SpinField result(family.spin(), L);
  const int lmin = result.lmin();

  std::vector<SpinField> psi;
  psi.reserve(static_cast<std::size_t>(scales.size()));
  for (int i = 0; i < scales.size(); ++i) psi.push_back(family.at_scale(scales.rho(i)));
  const std::vector<int> orders = active_orders(psi, L);
  const std::vector<WignerTable> d = beta_tables(rotations, L);
  const std::vector<Complex> alpha_phase = harmonic_phases(rotations.n_alpha(), L);
  const std::vector<Complex> gamma_phase = harmonic_phases(rotations.n_gamma(), L);

  std::vector<std::vector<Complex>> partial(static_cast<std::size_t>(scales.size()));
#pragma omp parallel for schedule(dynamic)
  for (int is = 0; is < scales.size(); ++is) {
    const SpinField& p = psi[is];
    std::vector<Complex> acc(result.size());
    std::vector<Complex> h(width * static_cast<std::size_t>(rotations.n_gamma()));
    std::vector<Complex> g(width * width);
    for (int ib = 0; ib < rotations.n_beta(); ++ib) {
      // H[k][gamma] = sum_alpha e^{-ik alpha} W
      std::fill(h.begin(), h.end(), Complex{});
      for (int ia = 0; ia < rotations.n_alpha(); ++ia) {
        const Complex* ea = alpha_phase.data() + ia * width;
        for (int ig = 0; ig < rotations.n_gamma(); ++ig) {
          const Complex value = w.at(is, rotations.index(ia, ib, ig));
          for (int k = -L; k <= L; ++k) h[(k + L) * rotations.n_gamma() + ig] += std::conj(ea[k + L]) * value;
        }
      }
      // G[k][m] = sum_gamma e^{-im gamma} H[k][gamma]
      for (int k = -L; k <= L; ++k)
        for (const int m : orders) {
          Complex sum{};
          for (int ig = 0; ig < rotations.n_gamma(); ++ig)
            sum += std::conj(gamma_phase[ig * width + (m + L)]) * h[(k + L) * rotations.n_gamma() + ig];
          g[(k + L) * width + (m + L)] = sum;
        }
      const WignerTable& table = d[ib];
      const double weight = scales.weight(is) * rotations.weight(ib);
      for (int l = lmin; l <= L; ++l)
        for (int k = -l; k <= l; ++k) {
          Complex sum{};
          for (const int m : orders)
            if (std::abs(m) <= l) sum += table(l, k, m) * p(l, m) * g[(k + L) * width + (m + L)];
          acc[result.index(l, k)] += weight * sum;
        }
    }
    partial[is] = std::move(acc);
  }

  const std::vector<Complex> total = tree_sum(std::move(partial));
  std::copy(total.begin(), total.end(), result.coeffs().begin());
  return result;
}

Complex phase_space_inner(const WaveletCoefficients& wf, const WaveletCoefficients& wg) {
  if (!(wf.scales == wg.scales) || !(wf.rotations == wg.rotations) || wf.values.size() != wg.values.size())
    throw std::invalid_argument("phase_space_inner: grid mismatch");
  const ScaleGrid& scales = wf.scales;
  const SO3Grid& rotations = wf.rotations;
  std::vector<Complex> per_scale(static_cast<std::size_t>(scales.size()));
#pragma omp parallel for schedule(static)
  for (int is = 0; is < scales.size(); ++is) {
    Complex sum{};
    for (std::size_t n = 0; n < rotations.size(); ++n)
      sum += rotations.node_weight(n) * std::conj(wf.at(is, n)) * wg.at(is, n);
    per_scale[is] = scales.weight(is) * sum;
  }
  return tree_sum(std::move(per_scale));
}

}  // namespace swcwt
