#include <doctest.h>

#include <cmath>
#include <numbers>

#include "numrad/error.hpp"
#include "numrad/hermitian.hpp"
#include "numrad/random.hpp"
#include "oracles.hpp"

using namespace numrad;

namespace {

const cplx I(0.0, 1.0);

ComplexMatrix random_hermitian(Rng& rng, std::size_t n) { return hermitian_part(rng.ginibre(n)); }

}  // namespace

TEST_CASE("construction enforces the invariants") {
  CHECK_THROWS_AS(ComplexMatrix(0), Error);
  CHECK_THROWS_AS(ComplexMatrix(kMaxDimension + 1), Error);
  CHECK_THROWS_AS(ComplexMatrix(2, std::vector<cplx>(3)), Error);
  CHECK_THROWS_AS(ComplexMatrix(1, {cplx(std::nan(""), 0.0)}), Error);
  CHECK_THROWS_AS(ComplexMatrix(1, {cplx(0.0, INFINITY)}), Error);
  CHECK_NOTHROW((void)ComplexMatrix(kMaxDimension));
}

TEST_CASE("adjoint") {
  const ComplexMatrix j{{0, 1}, {0, 0}};
  CHECK(adjoint(j) == ComplexMatrix{{0, 0}, {1, 0}});
  CHECK(adjoint(ComplexMatrix{{1, 0}, {0, I}}) == ComplexMatrix{{1, 0}, {0, -I}});
  Rng rng(1);
  const ComplexMatrix h = random_hermitian(rng, 4);
  CHECK(adjoint(h) == h);
  for (int k = 0; k < 20; ++k) {
    const ComplexMatrix a = rng.ginibre(1 + k % 6);
    CHECK(adjoint(adjoint(a)) == a);
  }
}

TEST_CASE("cartesian decomposition") {
  {
    const auto p = cartesian(ComplexMatrix{{1, 0}, {0, I}});
    CHECK(oracle::max_abs_diff(p.re, ComplexMatrix{{1, 0}, {0, 0}}) <= 1e-15);
    CHECK(oracle::max_abs_diff(p.im, ComplexMatrix{{0, 0}, {0, 1}}) <= 1e-15);
  }
  {
    const auto p = cartesian(ComplexMatrix{{1.0 + 2.0 * I, 0}, {0, 0}});
    CHECK(oracle::max_abs_diff(p.re, ComplexMatrix{{1, 0}, {0, 0}}) <= 1e-15);
    CHECK(oracle::max_abs_diff(p.im, ComplexMatrix{{2, 0}, {0, 0}}) <= 1e-15);
  }
  Rng rng(2);
  const ComplexMatrix h = random_hermitian(rng, 3);
  const auto ph = cartesian(h);
  CHECK(oracle::max_abs_diff(ph.re, h) <= 1e-15);
  CHECK(frobenius_norm(ph.im) <= 1e-15);
  for (int k = 0; k < 50; ++k) {
    const ComplexMatrix a = rng.ginibre(1 + k % 7);
    const auto p = cartesian(a);
    CHECK(hermitian_defect(p.re) <= 1e-14);
    CHECK(hermitian_defect(p.im) <= 1e-14);
    CHECK(oracle::max_abs_diff(p.re + I * p.im, a) <= 1e-14 * std::max(1.0, frobenius_norm(a)));
  }
}

TEST_CASE("herm_eig") {
  {
    const auto e = herm_eig(ComplexMatrix::diagonal(std::vector<double>{3.0, -1.0}));
    CHECK(e.values[0] == doctest::Approx(-1.0).epsilon(1e-15));
    CHECK(e.values[1] == doctest::Approx(3.0).epsilon(1e-15));
  }
  {
    const auto e = herm_eig(ComplexMatrix{{2, 1}, {1, 2}});
    CHECK(std::abs(e.values[0] - 1.0) <= 1e-14);
    CHECK(std::abs(e.values[1] - 3.0) <= 1e-14);
  }
  CHECK_THROWS_AS(herm_eig(ComplexMatrix{{0, 1}, {0, 0}}), Error);

  Rng rng(4);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 12);
    const ComplexMatrix h = random_hermitian(rng, n);
    const auto e = herm_eig(h);
    const ComplexMatrix& v = e.vectors;
    const ComplexMatrix recon = oracle::mul(oracle::mul(v, ComplexMatrix::diagonal(e.values)), oracle::adj(v));
    const double scale = std::max(1.0, frobenius_norm(h));
    CHECK(frobenius_norm(recon - h) <= 1e-11 * scale);
    CHECK(frobenius_norm(oracle::mul(oracle::adj(v), v) - ComplexMatrix::identity(n)) <= 1e-11);
    CHECK(std::is_sorted(e.values.begin(), e.values.end()));
    double sum = 0.0;
    for (double l : e.values) sum += l;
    CHECK(std::abs(sum - trace(h).real()) <= 1e-10 * static_cast<double>(n) * frobenius_norm(h));
  }
}

TEST_CASE("herm_eig on clustered and degenerate spectra") {
  Rng rng(5);
  for (std::size_t n : {3u, 6u, 10u}) {
    std::vector<double> d(n, 1.0);
    d[0] = 1.0 + 1e-13;
    const ComplexMatrix u = [&] {
      // Unitary from the eigenvectors of a random Hermitian matrix.
      return herm_eig(random_hermitian(rng, n)).vectors;
    }();
    const ComplexMatrix h = hermitian_part(oracle::mul(oracle::mul(u, ComplexMatrix::diagonal(d)), oracle::adj(u)));
    const auto e = herm_eig(h);
    for (double l : e.values) CHECK(std::abs(l - 1.0) <= 1e-12);
  }
}

TEST_CASE("herm_fn and psd_power") {
  const ComplexMatrix j{{0, 1}, {0, 0}};
  const ComplexMatrix abs_j = herm_fn(hermitian_part(adjoint(j) * j), [](double t) { return std::sqrt(t); },
                                      SpectrumDomain::NonNegative);
  CHECK(oracle::max_abs_diff(abs_j, ComplexMatrix::diagonal(std::vector<double>{0, 1})) <= 1e-15);
  const ComplexMatrix p = ComplexMatrix::diagonal(std::vector<double>{0, 1});
  CHECK(oracle::max_abs_diff(herm_fn(p, [](double t) { return t * t; }), p) <= 1e-15);
  CHECK(oracle::max_abs_diff(psd_power(ComplexMatrix::diagonal(std::vector<double>{4, 9}), 0.5),
                             ComplexMatrix::diagonal(std::vector<double>{2, 3})) <= 1e-14);
  CHECK_THROWS_AS(psd_power(ComplexMatrix::diagonal(std::vector<double>{1, -1e-3}), 0.5), Error);
  CHECK_NOTHROW(psd_power(ComplexMatrix::diagonal(std::vector<double>{1, -1e-12}), 0.5));
  CHECK_THROWS_AS(herm_fn(ComplexMatrix::diagonal(std::vector<double>{1, -1}), [](double t) { return std::sqrt(t); },
                          SpectrumDomain::NonNegative),
                  Error);
}

TEST_CASE("abs_op") {
  const ComplexMatrix j{{0, 1}, {0, 0}};
  CHECK(oracle::max_abs_diff(abs_op(j), ComplexMatrix::diagonal(std::vector<double>{0, 1})) <= 1e-15);
  CHECK(oracle::max_abs_diff(abs_op(adjoint(j)), ComplexMatrix::diagonal(std::vector<double>{1, 0})) <= 1e-15);
  const ComplexMatrix s{{0, 2, 0}, {0, 0, 3}, {0, 0, 0}};
  CHECK(oracle::max_abs_diff(abs_op(s), ComplexMatrix::diagonal(std::vector<double>{0, 2, 3})) <= 1e-14);

  Rng rng(6);
  const ComplexMatrix u = herm_eig(random_hermitian(rng, 4)).vectors;
  CHECK(oracle::max_abs_diff(abs_op(u), ComplexMatrix::identity(4)) <= 1e-12);

  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 6);
    const ComplexMatrix a = rng.ginibre(n);
    const ComplexMatrix m = abs_op(a);
    CHECK(hermitian_defect(m) == 0.0);
    CHECK(is_psd(m, 1e-12));
    const double fa = frobenius_norm(a);
    CHECK(frobenius_norm(oracle::mul(m, m) - oracle::mul(oracle::adj(a), a)) <= 1e-10 * std::max(1.0, fa * fa));
    const auto ev = herm_eig(m).values;
    const auto ev_star = herm_eig(abs_op(adjoint(a))).values;
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(ev[i] - ev_star[i]) <= 1e-9);
  }
}

TEST_CASE("op_norm") {
  CHECK(op_norm(ComplexMatrix{{0, 2}, {0, 0}}) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(op_norm(ComplexMatrix::identity(3)) == doctest::Approx(1.0).epsilon(1e-15));
  const ComplexMatrix s{{0, 1, 0, 0}, {0, 0, 0, 1}, {0, 0, 0, 0}, {0, 0, 1, 0}};
  CHECK(std::abs(op_norm(s) - oracle::power_norm(s)) <= 1e-10 * std::max(1.0, frobenius_norm(s)));

  Rng rng(7);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 6);
    const ComplexMatrix a = rng.ginibre(n);
    const ComplexMatrix b = rng.ginibre(n);
    CHECK(std::abs(op_norm(a) - oracle::power_norm(a, 20000)) <= 1e-8 * std::max(1.0, frobenius_norm(a)));
    CHECK(op_norm(a * b) <= op_norm(a) * op_norm(b) + 1e-9);
    CHECK(op_norm(a + b) <= op_norm(a) + op_norm(b) + 1e-9);
  }
}

TEST_CASE("is_psd") {
  CHECK(is_psd(ComplexMatrix::diagonal(std::vector<double>{1, 0}), 1e-10));
  CHECK_FALSE(is_psd(ComplexMatrix::diagonal(std::vector<double>{1, -1}), 1e-10));
  CHECK_THROWS_AS(is_psd(ComplexMatrix{{0, 1}, {0, 0}}, 1e-10), Error);
  Rng rng(8);
  for (int k = 0; k < 20; ++k) {
    const std::size_t n = 1 + static_cast<std::size_t>(k % 5);
    const ComplexMatrix b = rng.ginibre(n);
    const ComplexMatrix c = rng.ginibre(n);
    const ComplexMatrix bc = b * c;
    const ComplexMatrix tl = b * adjoint(b);
    const ComplexMatrix br = adjoint(c) * c;
    ComplexMatrix block(2 * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        block(i, j) = tl(i, j);
        block(i, j + n) = bc(i, j);
        block(i + n, j) = std::conj(bc(j, i));
        block(i + n, j + n) = br(i, j);
      }
    block = hermitian_part(block);
    CHECK(is_psd(block, 1e-10 * std::max(1.0, frobenius_norm(block))));
  }
}
