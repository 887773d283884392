#include "swcwt/wigner.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "swcwt/polynomials.hpp"

namespace swcwt {
namespace {

struct CanonicalIndex {
  int m;
  int k;
  double sign;
};

// Maps (m, k) onto the region k >= |m| of the closed form.
CanonicalIndex canonical(int m, int k) {
  const double parity = ((m - k) % 2 == 0) ? 1.0 : -1.0;
  if (k >= std::abs(m)) return {m, k, 1.0};
  if (m >= std::abs(k)) return {k, m, parity};
  if (-k >= std::abs(m)) return {-m, -k, parity};
  return {-k, -m, 1.0};
}

double int_pow(double x, int n) {
  double r = 1.0;
  while (n > 0) {
    if (n & 1) r *= x;
    x *= x;
    n >>= 1;
  }
  return r;
}

void check_indices(int l, int m, int k) {
  if (l < 0 || l > kMaxDegree) throw std::out_of_range("wigner: degree out of range");
  if (std::abs(m) > l || std::abs(k) > l) throw std::out_of_range("wigner: order exceeds degree");
}

}  // namespace

void wigner_d_column(int lmax, int m, int k, double beta, std::span<double> out) {
  const CanonicalIndex c = canonical(m, k);
  const int lmin = c.k;
  if (lmax < lmin) return;
  check_indices(lmax, m, k);
  const auto count = static_cast<std::size_t>(lmax - lmin + 1);
  if (out.size() < count) throw std::invalid_argument("wigner_d_column: output too small");

  const int a = c.k - c.m;
  const int b = c.k + c.m;
  const double half_sin = std::sin(0.5 * beta);
  const double half_cos = std::cos(0.5 * beta);
  const double angular = int_pow(half_sin, a) * int_pow(half_cos, b);

  // sqrt((l-k)!(l+k)!/((l-m)!(l+m)!)) at l = k is sqrt(binomial(2k, k-m)).
  double binom = 1.0;
  for (int i = 1; i <= a; ++i) binom = binom * (2 * c.k - a + i) / i;
  double root = std::sqrt(binom);

  std::vector<double> jacobi(count);
  jacobi_sequence(a, b, std::cos(beta), jacobi);
  for (std::size_t n = 0; n < count; ++n) {
    out[n] = c.sign * root * angular * jacobi[n];
    const double l1 = static_cast<double>(lmin + n + 1);
    root *= std::sqrt((l1 - c.k) * (l1 + c.k) / ((l1 - c.m) * (l1 + c.m)));
  }
}

double wigner_d(int l, int m, int k, double beta) {
  check_indices(l, m, k);
  const int lmin = std::max(std::abs(m), std::abs(k));
  std::vector<double> column(static_cast<std::size_t>(l - lmin + 1));
  wigner_d_column(l, m, k, beta, column);
  return column.back();
}

std::complex<double> wigner_D(int l, int k, int m, const EulerAngles& rot) {
  const double d = wigner_d(l, k, m, rot.beta);
  return std::polar(d, -(k * rot.alpha + m * rot.gamma));
}

WignerTable::WignerTable(int lmax, double beta) : lmax_(lmax), beta_(beta) {
  if (lmax < 0 || lmax > kMaxDegree) throw std::out_of_range("WignerTable: lmax out of range");
  entries_.assign(offset(lmax + 1), 0.0);
  std::vector<double> column(static_cast<std::size_t>(lmax) + 1);
  for (int m = -lmax; m <= lmax; ++m) {
    for (int k = -lmax; k <= lmax; ++k) {
      const int lmin = std::max(std::abs(m), std::abs(k));
      wigner_d_column(lmax, m, k, beta, column);
      for (int l = lmin; l <= lmax; ++l)
        entries_[offset(l) + static_cast<std::size_t>((m + l) * (2 * l + 1) + (k + l))] =
            column[static_cast<std::size_t>(l - lmin)];
    }
  }
}

}  // namespace swcwt
