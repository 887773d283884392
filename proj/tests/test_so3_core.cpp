#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "swcwt/geometry.hpp"
#include "swcwt/polynomials.hpp"
#include "swcwt/rotation.hpp"
#include "swcwt/wigner.hpp"

using namespace swcwt;

namespace {

oracle::Mat as_mat(const Matrix3& m) {
  oracle::Mat r{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = m[i][j];
  return r;
}

double matrix_gap(const EulerAngles& a, const EulerAngles& b) {
  return oracle::max_diff(as_mat(to_matrix(a)), as_mat(to_matrix(b)));
}

}  // namespace

TEST_CASE("to_matrix matches the explicit zyz product") {
  oracle::Gen gen(11);
  for (int i = 0; i < 50; ++i) {
    const EulerAngles a = gen.rotation();
    CHECK(oracle::max_diff(as_mat(to_matrix(a)), oracle::euler(a.alpha, a.beta, a.gamma)) < 1e-14);
  }
}

TEST_CASE("from_matrix recovers the rotation") {
  oracle::Gen gen(12);
  for (int i = 0; i < 200; ++i) {
    const EulerAngles a = gen.rotation();
    const EulerAngles b = from_matrix(to_matrix(a));
    CHECK(matrix_gap(a, b) < 1e-12);
    CHECK(b.beta >= 0.0);
    CHECK(b.beta <= kPi);
  }
  // both gimbal cases put the whole z-rotation into the third angle
  const EulerAngles up = from_matrix(to_matrix({0.4, 0.0, 0.9}));
  CHECK(up.alpha == 0.0);
  CHECK(up.gamma == doctest::Approx(1.3).epsilon(1e-12));
  const EulerAngles down = from_matrix(to_matrix({0.4, kPi, 0.9}));
  CHECK(down.alpha == 0.0);
  CHECK(matrix_gap(down, {0.4, kPi, 0.9}) < 1e-12);
}

TEST_CASE("compose agrees with the matrix product") {
  oracle::Gen gen(13);
  for (int i = 0; i < 100; ++i) {
    const EulerAngles a = gen.rotation(), b = gen.rotation();
    const auto expect = oracle::mul(oracle::euler(a.alpha, a.beta, a.gamma), oracle::euler(b.alpha, b.beta, b.gamma));
    CHECK(oracle::max_diff(as_mat(to_matrix(compose(a, b))), expect) < 1e-12);
  }
}

TEST_CASE("compose special cases") {
  const EulerAngles b{1.1, 0.7, 2.3};
  const EulerAngles c = compose({0, 0, 0}, b);
  CHECK(c.alpha == doctest::Approx(b.alpha));
  CHECK(c.beta == doctest::Approx(b.beta));
  CHECK(c.gamma == doctest::Approx(b.gamma));

  const SpherePoint x{0.8, 2.1};
  const EulerAngles z = compose({0, -x.theta, -x.phi}, {x.phi, x.theta, 0});
  CHECK(z.beta == doctest::Approx(0.0).epsilon(1e-12));

  // the quarter turns add up to a half turn about z, stored in the third angle
  const EulerAngles half = compose({kPi / 2, 0, 0}, {0, 0, kPi / 2});
  CHECK(matrix_gap(half, {kPi, 0, 0}) < 1e-14);
  CHECK(half.alpha == 0.0);
  CHECK(half.beta == 0.0);
  CHECK(half.gamma == doctest::Approx(kPi));
}

TEST_CASE("inverse") {
  const EulerAngles zero = inverse({0, 0, 0});
  CHECK(zero.alpha == doctest::Approx(0.0));
  CHECK(zero.beta == doctest::Approx(0.0));
  CHECK(zero.gamma == doctest::Approx(0.0));

  oracle::Gen gen(14);
  for (int i = 0; i < 100; ++i) {
    const EulerAngles a = gen.rotation();
    const auto t = oracle::tr(oracle::euler(a.alpha, a.beta, a.gamma));
    CHECK(oracle::max_diff(as_mat(to_matrix(inverse(a))), t) < 1e-12);
    CHECK(matrix_gap(compose(a, inverse(a)), {0, 0, 0}) < 1e-12);
    CHECK(matrix_gap(inverse(inverse(a)), a) < 1e-12);
  }
}

TEST_CASE("third_angle_kappa") {
  oracle::Gen gen(15);
  for (int i = 0; i < 20; ++i) CHECK(third_angle_kappa({0, 0, 0}, gen.point()) == doctest::Approx(0.0));
  const double g0 = 0.9;
  const EulerAngles p = pull_back_frame({0, 0, g0}, {kPi / 2, 0.0});
  CHECK(third_angle_kappa({0, 0, g0}, {kPi / 2, 0.0}) == doctest::Approx(0.0));
  CHECK(wrap_two_pi(p.alpha) == doctest::Approx(wrap_two_pi(-g0)));
  CHECK(p.beta == doctest::Approx(kPi / 2));
  // against the explicit matrix extraction
  for (int i = 0; i < 50; ++i) {
    const EulerAngles u = gen.rotation();
    const SpherePoint x = gen.point();
    const auto m = oracle::mul(oracle::tr(oracle::euler(u.alpha, u.beta, u.gamma)), oracle::euler(x.phi, x.theta, 0));
    const double kappa = std::atan2(m[2][1], -m[2][0]);
    CHECK(std::abs(std::polar(1.0, third_angle_kappa(u, x)) - std::polar(1.0, kappa)) < 1e-10);
  }
}

TEST_CASE("wigner_d matches the explicit sum") {
  oracle::Gen gen(21);
  for (int trial = 0; trial < 6; ++trial) {
    const double beta = gen.uniform(0.0, kPi);
    for (int l = 0; l <= 12; ++l)
      for (int m = -l; m <= l; ++m)
        for (int k = -l; k <= l; ++k) CHECK(wigner_d(l, m, k, beta) == doctest::Approx(oracle::wigner_d_sum(l, m, k, beta)).epsilon(1e-11).scale(1.0));
  }
}

TEST_CASE("wigner_d closed values and symmetry") {
  oracle::Gen gen(22);
  for (int l = 0; l <= 10; ++l)
    for (int m = -l; m <= l; ++m)
      for (int k = -l; k <= l; ++k) CHECK(wigner_d(l, m, k, 0.0) == doctest::Approx(m == k ? 1.0 : 0.0));
  for (int i = 0; i < 200; ++i) {
    const double beta = gen.uniform(0.0, kPi);
    const int l = gen.integer(0, 40);
    const int m = gen.integer(-l, l), k = gen.integer(-l, l);
    const double sign = ((m - k) % 2 == 0) ? 1.0 : -1.0;
    CHECK(wigner_d(l, m, k, beta) == doctest::Approx(sign * wigner_d(l, -m, -k, beta)).scale(1.0).epsilon(1e-12));
    CHECK(wigner_d(1, 0, 0, beta) == doctest::Approx(std::cos(beta)));
  }
  CHECK_THROWS_AS(wigner_d(2, 3, 0, 0.1), std::out_of_range);
  CHECK_THROWS_AS(wigner_d(kMaxDegree + 1, 0, 0, 0.1), std::out_of_range);
}

TEST_CASE("d columns are orthonormal rows of a rotation") {
  // sum_k d_{mk} d_{m'k} = delta at high degree checks stability of the recurrence
  const double beta = 1.234;
  for (int l : {32, 64, 128}) {
    double worst = 0.0;
    for (int m : {-l, -l / 2, 0, 3, l}) {
      double norm = 0.0;
      for (int k = -l; k <= l; ++k) norm += wigner_d(l, m, k, beta) * wigner_d(l, m, k, beta);
      worst = std::max(worst, std::abs(norm - 1.0));
    }
    CHECK(worst < 1e-11);
  }
}

TEST_CASE("d matrices are orthogonal for l <= 16") {
  oracle::Gen gen(24);
  double worst = 0.0;
  for (int trial = 0; trial < 64; ++trial) {
    const WignerTable table(16, gen.uniform(0.0, kPi));
    for (int l = 0; l <= 16; ++l)
      for (int a = -l; a <= l; ++a)
        for (int b = -l; b <= l; ++b) {
          double dot = 0.0;
          for (int k = -l; k <= l; ++k) dot += table(l, k, a) * table(l, k, b);
          worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
        }
  }
  CHECK(worst < 1e-10);
}

TEST_CASE("wigner_d_column and WignerTable agree with wigner_d") {
  const double beta = 2.1;
  const int lmax = 20;
  for (int m = -3; m <= 3; ++m)
    for (int k = -4; k <= 4; ++k) {
      const int l0 = std::max(std::abs(m), std::abs(k));
      std::vector<double> col(lmax - l0 + 1);
      wigner_d_column(lmax, m, k, beta, col);
      for (int l = l0; l <= lmax; ++l) CHECK(col[l - l0] == doctest::Approx(wigner_d(l, m, k, beta)).scale(1.0).epsilon(1e-13));
    }
  const WignerTable table(lmax, beta);
  for (int l = 0; l <= lmax; ++l)
    for (int m = -l; m <= l; ++m)
      for (int k = -l; k <= l; ++k) CHECK(table(l, m, k) == doctest::Approx(wigner_d(l, m, k, beta)).scale(1.0).epsilon(1e-13));
}

TEST_CASE("wigner_D identity and homomorphism") {
  for (int l = 0; l <= 4; ++l)
    for (int k = -l; k <= l; ++k)
      for (int m = -l; m <= l; ++m) CHECK(std::abs(wigner_D(l, k, m, {0, 0, 0}) - Complex(k == m ? 1.0 : 0.0)) < 1e-14);

  oracle::Gen gen(23);
  for (int trial = 0; trial < 50; ++trial) {
    const int l = trial % 5;
    const EulerAngles a = gen.rotation(), b = gen.rotation(), ab = compose(a, b);
    double worst = 0.0;
    for (int k = -l; k <= l; ++k)
      for (int m = -l; m <= l; ++m) {
        Complex prod{};
        for (int j = -l; j <= l; ++j) prod += wigner_D(l, k, j, a) * wigner_D(l, j, m, b);
        worst = std::max(worst, std::abs(prod - wigner_D(l, k, m, ab)));
      }
    CHECK(worst < 1e-12);
  }
}

TEST_CASE("jacobi polynomials") {
  CHECK(jacobi_poly(0, 3, 5, 0.3) == 1.0);
  CHECK(jacobi_poly(2, 0, 2, 0.0) == doctest::Approx(-0.25));
  oracle::Gen gen(31);
  for (int i = 0; i < 300; ++i) {
    const int n = gen.integer(0, 20), a = gen.integer(0, 8), b = gen.integer(0, 8);
    const double t = gen.uniform(-1.0, 1.0);
    const double expect = oracle::jacobi_explicit(n, a, b, t);
    CHECK(jacobi_poly(n, a, b, t) == doctest::Approx(expect).scale(1.0).epsilon(1e-10));
  }
  std::vector<double> seq(11);
  jacobi_sequence(1, 2, 0.4, seq);
  for (int n = 0; n <= 10; ++n) CHECK(seq[n] == doctest::Approx(jacobi_poly(n, 1, 2, 0.4)));
  for (int n = 0; n <= 30; ++n) CHECK(std::abs(jacobi_poly(n, 0, 0, gen.uniform(-1.0, 1.0))) <= 1.0 + 1e-12);
}

TEST_CASE("associated legendre without the Condon-Shortley phase") {
  CHECK(legendre_assoc(0, 0, 0.37) == 1.0);
  CHECK(legendre_assoc(1, 1, 0.6) == doctest::Approx(0.8));
  CHECK(legendre_assoc(2, 0, 0.6) == doctest::Approx((3 * 0.36 - 1) / 2));
  oracle::Gen gen(32);
  for (int i = 0; i < 300; ++i) {
    const int l = gen.integer(0, 14), m = gen.integer(0, l);
    const double t = gen.uniform(-1.0, 1.0);
    const double expect = oracle::legendre_explicit(l, m, t);
    CHECK(legendre_assoc(l, m, t) == doctest::Approx(expect).scale(1.0).epsilon(1e-9));
  }
}

TEST_CASE("gauss-legendre rule") {
  for (int n : {1, 2, 5, 17, 65}) {
    const GaussLegendreRule rule = gauss_legendre(n);
    REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
    double total = 0.0;
    for (double w : rule.weights) total += w;
    CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
    for (int i = 1; i < n; ++i) CHECK(rule.nodes[i] < rule.nodes[i - 1]);
    for (int p = 0; p <= 2 * n - 1; ++p) {
      double integral = 0.0;
      for (int i = 0; i < n; ++i) integral += rule.weights[i] * std::pow(rule.nodes[i], p);
      const double exact = p % 2 ? 0.0 : 2.0 / (p + 1);
      CHECK(integral == doctest::Approx(exact).scale(1.0).epsilon(1e-13));
    }
  }
}

TEST_CASE("D-orthogonality by SO(3) quadrature") {
  const SO3Grid small = SO3Grid::for_band_limit(0);
  const DOrthogonalityReport r0 = d_orthogonality_check(small, 0);
  CHECK(r0.max_error < 1e-12);
  double total = 0.0;
  for (std::size_t i = 0; i < small.size(); ++i) total += small.node_weight(i);
  CHECK(total == doctest::Approx(8 * kPi * kPi));

  const DOrthogonalityReport r4 = d_orthogonality_check(SO3Grid::for_band_limit(4), 4);
  CHECK(r4.max_error < 1e-10);
  const DOrthogonalityReport r8 = d_orthogonality_check(SO3Grid::for_band_limit(8), 8);
  CHECK(r8.max_error < 1e-10);
  const DOrthogonalityReport coarse = d_orthogonality_check(SO3Grid(5, 3, 5), 4);
  CHECK(coarse.max_error > 1.0);
}
