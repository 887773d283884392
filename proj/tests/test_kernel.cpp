#include <doctest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "swcwt/geometry.hpp"
#include "swcwt/kernel.hpp"

using namespace swcwt;

namespace {

double separation(const SpherePoint& x, const SpherePoint& y) {
  const Vector3 a = to_cartesian(x), b = to_cartesian(y);
  return std::acos(std::clamp(a[0] * b[0] + a[1] * b[1] + a[2] * b[2], -1.0, 1.0));
}

}  // namespace

TEST_CASE("kernel at coincident points") {
  oracle::Gen gen(51);
  CHECK(kernel_sum(1, 2, {0.3, 0.4}, {0.3, 0.4}).real() == doctest::Approx(0.3978873577297384));
  for (int i = 0; i < 20; ++i) {
    const SpherePoint x = gen.point();
    const int s = gen.integer(-2, 2), l = gen.integer(std::abs(s), 12);
    const Complex a = kernel_sum(s, l, x, x), b = kernel_closed(s, l, x, x);
    CHECK(a.real() == doctest::Approx((2 * l + 1) / (4 * kPi)));
    CHECK(std::abs(a.imag()) < 1e-13);
    CHECK(std::abs(b) == doctest::Approx((2 * l + 1) / (4 * kPi)));
  }
  CHECK_THROWS_AS(kernel_sum(2, 1, {0.1, 0.1}, {0.2, 0.2}), std::out_of_range);
  CHECK_THROWS_AS(kernel_closed(-2, 1, {0.1, 0.1}, {0.2, 0.2}), std::out_of_range);
}

TEST_CASE("kernel is Hermitian and obeys Cauchy-Schwarz") {
  oracle::Gen gen(52);
  for (int i = 0; i < 100; ++i) {
    const SpherePoint x = gen.point(), y = gen.point();
    const int s = gen.integer(-2, 2), l = gen.integer(std::abs(s), 10);
    const Complex xy = kernel_sum(s, l, x, y);
    CHECK(std::abs(xy - std::conj(kernel_sum(s, l, y, x))) < 1e-12);
    const double bound = std::sqrt(kernel_sum(s, l, x, x).real() * kernel_sum(s, l, y, y).real());
    CHECK(std::abs(xy) <= bound * (1 + 1e-12));
  }
}

TEST_CASE("closed form agrees with the defining sum") {
  oracle::Gen gen(53);
  for (int s = -2; s <= 2; ++s)
    for (int i = 0; i < 60; ++i) {
      const SpherePoint x = gen.point(), y = gen.point();
      const int l = gen.integer(std::abs(s), 16);
      CHECK(std::abs(kernel_sum(s, l, x, y) - kernel_closed(s, l, x, y)) < 1e-10);
    }
}

TEST_CASE("spin zero kernel is the Legendre addition kernel") {
  oracle::Gen gen(54);
  for (int i = 0; i < 40; ++i) {
    const SpherePoint x = gen.point(), y = gen.point();
    const int l = gen.integer(0, 14);
    const double expect = (2 * l + 1) / (4 * kPi) * oracle::legendre_explicit(l, 0, std::cos(separation(x, y)));
    CHECK(std::abs(kernel_sum(0, l, x, y) - Complex(expect)) < 1e-11);
    CHECK(std::abs(kernel_closed(0, l, x, y) - Complex(expect)) < 1e-11);
    // only the separation matters: rotate both points together
    const EulerAngles r = gen.rotation();
    CHECK(std::abs(kernel_sum(0, l, rotate_point(r, x), rotate_point(r, y)) - kernel_sum(0, l, x, y)) < 1e-11);
  }
}

TEST_CASE("projection onto a degree") {
  oracle::Gen gen(55);
  const int L = 6;
  SpinField single(1, L);
  for (int m = -3; m <= 3; ++m) single(3, m) = {gen.uniform(-1, 1), gen.uniform(-1, 1)};
  CHECK(oracle::max_abs_diff(project_degree(single, 3), single) == 0.0);
  CHECK(project_degree(single, 4).norm_squared() == 0.0);
  CHECK_THROWS_AS(project_degree(single, 0), std::out_of_range);
  CHECK(project_degree(single, L + 1).norm_squared() == 0.0);

  const SpinField f = gen.field(-2, L), g = gen.field(-2, L);
  SpinField total(-2, L);
  for (int l = 2; l <= L; ++l) {
    const SpinField p = project_degree(f, l);
    for (std::size_t i = 0; i < total.size(); ++i) total.coeffs()[i] += p.coeffs()[i];
    CHECK(oracle::max_abs_diff(project_degree(p, l), p) == 0.0);
    CHECK(std::abs(inner_product(p, g) - inner_product(f, project_degree(g, l))) < 1e-10);
  }
  CHECK(oracle::max_abs_diff(total, f) < 1e-15);
}

TEST_CASE("quadrature projection reproduces the degree slice") {
  oracle::Gen gen(56);
  const int L = 8;
  const SpinField f = gen.field(2, L);
  const GridField samples = synthesize(f, SphereGrid::for_band_limit(L));
  for (int l : {2, 5, 8}) {
    const SpinField slice = project_degree(f, l);
    CHECK(oracle::max_abs_diff(project_degree(samples, L, l), slice) < 1e-10);
    for (int i = 0; i < 5; ++i) {
      const SpherePoint x = gen.point();
      const Complex expect = evaluate(slice, x);
      CHECK(std::abs(kernel_convolve(samples, l, x) - expect) < 1e-8 * std::max(1.0, std::abs(expect)));
    }
  }
}

TEST_CASE("kernel bound scan") {
  const KernelBoundReport zero = kernel_bound_scan(0, 24, 64, 3);
  REQUIRE(zero.degrees.size() == 25u);
  for (std::size_t i = 1; i < zero.degrees.size(); ++i) {
    const int l = zero.degrees[i];
    CHECK(zero.max_abs[i] == doctest::Approx((2 * l + 1) / (4 * kPi)));
    CHECK(zero.ratio[i] == doctest::Approx((2 * l + 1) / (4 * kPi * l)));
  }
  CHECK(zero.bounded);

  const KernelBoundReport single = kernel_bound_scan(2, 2, 8);
  CHECK(single.degrees.size() == 1u);
  CHECK(single.bounded);

  const KernelBoundReport a = kernel_bound_scan(1, 20, 50, 9), b = kernel_bound_scan(1, 20, 50, 9);
  CHECK(a.max_abs == b.max_abs);
  // the sampled maximum can never exceed the coincident-point value
  for (std::size_t i = 0; i < a.degrees.size(); ++i) CHECK(a.max_abs[i] <= (2 * a.degrees[i] + 1) / (4 * kPi) * (1 + 1e-12));
}

TEST_CASE("jacobi bound check") {
  const JacobiBoundReport small = jacobi_bound_check(12, 6, 101);
  CHECK(small.holds);
  // t = 1 attains the bound, so the excess is zero up to rounding
  CHECK(std::abs(small.max_excess) < 1e-9);
  CHECK(jacobi_bound_check(20, 0, 51).holds);
  CHECK(small.evaluations == 13u * 7u * 101u);
}
