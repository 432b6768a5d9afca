#include <doctest.h>

#include <cmath>
#include <numbers>

#include "numrad/error.hpp"
#include "numrad/hermitian.hpp"
#include "numrad/radii.hpp"
#include "numrad/random.hpp"
#include "numrad/verify.hpp"
#include "oracles.hpp"

using namespace numrad;

namespace {

const cplx I(0.0, 1.0);
const double kSqrt2 = std::numbers::sqrt2;
const ComplexMatrix J{{0, 1}, {0, 0}};

void check_estimate(const RadiusEstimate& r) {
  CHECK(r.lower_cert <= r.value);
  if (r.upper_cert) CHECK(r.value <= *r.upper_cert);
  if (!r.witness.empty()) CHECK(std::abs(vec_norm(r.witness) - 1.0) <= 1e-12);
}

ComplexMatrix scaled(const ComplexMatrix& a, cplx c) { return c * a; }

}  // namespace

TEST_CASE("num_radius examples") {
  const RadiusEstimate r = num_radius(J);
  check_estimate(r);
  CHECK(std::abs(r.value - 0.5) <= 1e-9);
  CHECK(std::abs(w_functional(J, r.witness) - r.lower_cert) <= 1e-10);
  CHECK(std::abs(num_radius(ComplexMatrix{{1, 0}, {0, I}}).value - 1.0) <= 1e-12);
  CHECK(std::abs(num_radius(ComplexMatrix::identity(3)).value - 1.0) <= 1e-12);
}

TEST_CASE("num_radius agrees with the sphere oracle") {
  Rng rng(21);
  for (int k = 0; k < 6; ++k) {
    const ComplexMatrix a = rng.ginibre(3);
    const RadiusEstimate fast = num_radius(a);
    const RadiusEstimate grid = sphere_oracle(SphereObjective::w(a), 3, 20);
    CHECK(fast.lower_cert <= *grid.upper_cert + 1e-12);
    CHECK(grid.lower_cert <= *fast.upper_cert + 1e-12);
    CHECK(std::abs(fast.value - grid.value) <= std::max(1e-4, *grid.upper_cert - grid.lower_cert));
    CHECK(std::abs(w_functional(a, fast.witness) - fast.lower_cert) <= 1e-10);
  }
}

TEST_CASE("num_radius enclosures are tight on generic matrices") {
  Rng rng(22);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = rng.ginibre(2 + k % 6);
    const RadiusEstimate r = num_radius(a);
    check_estimate(r);
    CHECK(r.width() <= 1e-9 * r.value);
  }
}

TEST_CASE("numerical radius invariants") {
  Rng rng(23);
  for (int k = 0; k < 25; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 5);
    const ComplexMatrix a = rng.ginibre(n);
    const double w = num_radius(a).value;
    const ComplexMatrix u = random_unitary(rng, n);
    CHECK(std::abs(num_radius(adjoint(u) * a * u).value - w) <= 1e-8);
    const double theta = 6.0 * rng.uniform();
    CHECK(std::abs(num_radius(scaled(a, std::polar(1.0, theta))).value - w) <= 1e-9);
    const cplx c = rng.complex_normal();
    CHECK(std::abs(num_radius(scaled(a, c)).value - std::abs(c) * w) <= 1e-8 * std::max(1.0, std::abs(c) * w));
    const double na = op_norm(a);
    CHECK(0.5 * na <= w + 1e-9);
    CHECK(w <= na + 1e-9);
    CHECK(num_radius(a * a).value <= w * w + 1e-8);
    const ComplexMatrix b = rng.ginibre(n);
    const double we = euclid_radius(a, b).value;
    CHECK(std::abs(euclid_radius(scaled(a, c), scaled(b, c)).value - std::abs(c) * we) <=
          1e-8 * std::max(1.0, std::abs(c) * we));
    CHECK(std::abs(euclid_radius(b, a).value - we) <= 1e-8 * std::max(1.0, we));
  }
}

TEST_CASE("spectral_radius") {
  CHECK(spectral_radius(J).value == 0.0);
  CHECK(spectral_radius(ComplexMatrix(3)).value == 0.0);
  const ComplexMatrix t{{2, 1, 7}, {0, 5, -2}, {0, 0, cplx(-3, 4)}};
  CHECK(spectral_radius(t).value == 5.0);
  Rng rng(24);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 2 + static_cast<std::size_t>(k % 4);
    std::vector<cplx> lam(n);
    for (auto& z : lam) z = rng.complex_normal();
    ComplexMatrix p = rng.ginibre(n);
    for (std::size_t i = 0; i < n; ++i) p(i, i) += 3.0;
    const ComplexMatrix d = oracle::mul(oracle::mul(p, ComplexMatrix::diagonal(lam)), oracle::inverse(p));
    double expected = 0.0;
    for (const cplx& z : lam) expected = std::max(expected, std::abs(z));
    const RadiusEstimate r = spectral_radius(d);
    CHECK(std::abs(r.value - expected) <= 1e-5);
    if (r.upper_cert) CHECK(r.value <= *r.upper_cert);
  }
}

TEST_CASE("euclid_radius examples") {
  const RadiusEstimate r = euclid_radius(J, adjoint(J));
  check_estimate(r);
  CHECK(std::abs(r.value - 1.0 / kSqrt2) <= 1e-9);
  // Analytic: sup 2|x1|^2|x2|^2 over the unit sphere, square-rooted.
  const RadiusEstimate grid = sphere_oracle(SphereObjective::we(J, adjoint(J)), 2, 64);
  CHECK(std::abs(grid.value - 1.0 / kSqrt2) <= 5e-3);

  Rng rng(25);
  const ComplexMatrix a = rng.ginibre(3);
  CHECK(std::abs(euclid_radius(a, ComplexMatrix(3)).value - num_radius(a).value) <= 1e-9);
  const ComplexMatrix h = hermitian_part(rng.ginibre(3));
  CHECK(std::abs(euclid_radius(h, h).value - kSqrt2 * op_norm(h)) <= 1e-9);
  CHECK_THROWS_AS(euclid_radius(a, ComplexMatrix(2)), Error);
}

TEST_CASE("euclid_radius on the general path") {
  RadiusOptions opt;
  opt.structure_shortcuts = false;
  Rng rng(26);
  for (int k = 0; k < 4; ++k) {
    const ComplexMatrix a = rng.ginibre(2);
    const RadiusEstimate fast = euclid_radius(a, adjoint(a), opt);
    check_estimate(fast);
    CHECK(std::abs(fast.value - kSqrt2 * num_radius(a).value) <= 1e-7);
  }
}

TEST_CASE("euclid_norm examples") {
  Rng rng(27);
  const ComplexMatrix a = rng.ginibre(3);
  CHECK(std::abs(euclid_norm(a, ComplexMatrix(3)).value - op_norm(a)) <= 1e-9);
  CHECK(std::abs(euclid_norm(ComplexMatrix::identity(2), ComplexMatrix::identity(2)).value - kSqrt2) <= 1e-9);
  const RadiusEstimate j = euclid_norm(J, adjoint(J));
  check_estimate(j);
  CHECK(j.value >= 1.0 - 1e-12);
  CHECK(j.value <= kSqrt2 + 1e-12);
  CHECK(std::abs(j.value - oracle::alternating_euclid_norm(J, adjoint(J))) <= 1e-7);
  for (int k = 0; k < 6; ++k) {
    const ComplexMatrix x = rng.ginibre(2 + k % 3);
    const ComplexMatrix y = rng.ginibre(2 + k % 3);
    const RadiusEstimate r = euclid_norm(x, y);
    check_estimate(r);
    CHECK(std::abs(r.value - oracle::alternating_euclid_norm(x, y)) <= 1e-6 * r.value);
  }
  CHECK_THROWS_AS(euclid_norm(a, ComplexMatrix(2)), Error);
}

TEST_CASE("euclidean radius and norm relations") {
  Rng rng(28);
  for (int k = 0; k < 15; ++k) {
    const ComplexMatrix a = rng.ginibre(2 + k % 4);
    const ComplexMatrix as = adjoint(a);
    const double we = euclid_radius(a, as).value;
    const double en = euclid_norm(a, as).value;
    CHECK(we <= en + 1e-9);
    CHECK(en * en <= op_norm(a * as + as * a) + 1e-8);
  }
  for (int k = 0; k < 10; ++k) {
    const ComplexMatrix a = generate_one(MatrixFamily{FamilyKind::normal, 2 + static_cast<std::size_t>(k % 4), 5, 10},
                                         static_cast<std::size_t>(k));
    CHECK(std::abs(op_norm(a) - euclid_norm(a, adjoint(a)).value / kSqrt2) <= 1e-6);
  }
}

TEST_CASE("p_num_radius") {
  Rng rng(29);
  CHECK_THROWS_AS(p_num_radius(J, J, 0.5), Error);
  for (int k = 0; k < 6; ++k) {
    const ComplexMatrix a = rng.ginibre(3);
    const ComplexMatrix b = rng.ginibre(3);
    CHECK(std::abs(p_num_radius(a, b, 2.0).value - euclid_radius(a, b).value) <= 1e-6);
    for (double p : {1.0, 1.5, 3.0}) {
      CHECK(std::abs(p_num_radius(a, ComplexMatrix(3), p).value - num_radius(a).value) <= 1e-8);
    }
    double prev = INFINITY;
    for (double p : {1.0, 2.0, 3.0, 5.0, 8.0}) {
      const double v = p_num_radius(a, b, p).value;
      CHECK(v <= prev + 1e-6);
      prev = v;
    }
  }
  const ComplexMatrix abs_j = abs_op(J);
  const ComplexMatrix abs_js = abs_op(adjoint(J));
  const double big = p_num_radius(abs_j, abs_js, 64.0).value;
  const RadiusEstimate grid = sphere_oracle(SphereObjective::wp(abs_j, abs_js, 64.0), 2, 64);
  CHECK(std::abs(big - grid.value) <= 1e-4);
  CHECK(std::abs(big - 1.0) <= 1e-9);
}

TEST_CASE("radii agree with the sphere oracle for n = 2, 3") {
  Rng rng(30);
  for (std::size_t n : {2u, 3u}) {
    const std::size_t res = n == 2 ? 48 : 16;
    for (int k = 0; k < 3; ++k) {
      const ComplexMatrix a = rng.ginibre(n);
      const ComplexMatrix b = rng.ginibre(n);
      const RadiusEstimate gw = sphere_oracle(SphereObjective::w(a), n, res);
      CHECK(std::abs(num_radius(a).value - gw.value) <= std::max(1e-4, *gw.upper_cert - gw.lower_cert));
      const RadiusEstimate ge = sphere_oracle(SphereObjective::we(a, b), n, res);
      CHECK(std::abs(euclid_radius(a, b).value - ge.value) <= std::max(1e-4, *ge.upper_cert - ge.lower_cert));
      for (double p : {1.0, 3.0}) {
        const RadiusEstimate gp = sphere_oracle(SphereObjective::wp(a, b, p), n, res);
        CHECK(std::abs(p_num_radius(a, b, p).value - gp.value) <= std::max(1e-4, *gp.upper_cert - gp.lower_cert));
      }
    }
  }
}

TEST_CASE("sphere_oracle") {
  const RadiusEstimate w = sphere_oracle(SphereObjective::w(J), 2, 200);
  CHECK(std::abs(w.value - 0.5) <= 2e-3);
  CHECK(w.lower_cert <= 0.5 + 1e-12);
  CHECK(*w.upper_cert >= 0.5);
  const RadiusEstimate c = sphere_oracle(SphereObjective::constant_value(2.5), 2, 10);
  CHECK(c.value == 2.5);
  CHECK_THROWS_AS(sphere_oracle(SphereObjective::w(ComplexMatrix(4)), 4, 10), Error);
}

TEST_CASE("range hull gauges on the unit disk") {
  const ComplexMatrix x = ComplexMatrix::diagonal(std::vector<double>{1.0, -1.0});
  const ComplexMatrix y{{0, 1}, {1, 0}};
  RangeHull hull(x, y);
  // Joint range of (X, Y) is the unit disk.
  for (double p : {1.0, 2.0, 3.0}) {
    const auto e = hull.maximize(Gauge{p, 1.0, 1.0}, 1e-11, 8192);
    const double expected = p == 1.0 ? kSqrt2 : 1.0;
    CHECK(e.lower <= expected + 1e-12);
    CHECK(e.upper >= expected - 1e-12);
    CHECK(e.upper - e.lower <= 1e-6);
  }
}
