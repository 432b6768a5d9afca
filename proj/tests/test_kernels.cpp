#include <doctest.h>

#include <cmath>
#include <vector>

#include "numrad/hermitian.hpp"
#include "numrad/kernels.hpp"
#include "numrad/random.hpp"

using numrad::cplx;
namespace k = numrad::kernels;

namespace {

std::vector<cplx> random_vec(numrad::Rng& rng, std::size_t len) {
  std::vector<cplx> v(len);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

double max_diff(const std::vector<cplx>& a, const std::vector<cplx>& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
  return m;
}

class Selected {
 public:
  explicit Selected(const char* name) { ok_ = k::select(name); }
  ~Selected() { k::select(k::avx2_table() ? "avx2" : "scalar"); }
  bool ok() const { return ok_; }

 private:
  bool ok_;
};

}  // namespace

TEST_CASE("avx2 kernels match the scalar reference") {
  const k::KernelTable* fast = k::avx2_table();
  if (!fast) {
    MESSAGE("AVX2 kernels unavailable on this machine");
    return;
  }
  const k::KernelTable& ref = k::scalar_table();
  numrad::Rng rng(3);
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 7u, 8u, 13u, 16u}) {
    CAPTURE(n);
    const auto a = random_vec(rng, n * n);
    const auto b = random_vec(rng, n * n);
    const auto x = random_vec(rng, n);
    const auto y = random_vec(rng, n);

    std::vector<cplx> c1(n * n), c2(n * n);
    ref.gemm(n, a.data(), b.data(), c1.data());
    fast->gemm(n, a.data(), b.data(), c2.data());
    CHECK(max_diff(c1, c2) <= 1e-13 * static_cast<double>(n));

    std::vector<cplx> v1(n), v2(n);
    ref.gemv(n, a.data(), x.data(), v1.data());
    fast->gemv(n, a.data(), x.data(), v2.data());
    CHECK(max_diff(v1, v2) <= 1e-13 * static_cast<double>(n));

    CHECK(std::abs(ref.dot(n, x.data(), y.data()) - fast->dot(n, x.data(), y.data())) <=
          1e-13 * static_cast<double>(n));

    ref.axpby(n, 0.3, x.data(), -1.7, y.data(), v1.data());
    fast->axpby(n, 0.3, x.data(), -1.7, y.data(), v2.data());
    CHECK(max_diff(v1, v2) <= 1e-14);

    auto r1x = x, r1y = y, r2x = x, r2y = y;
    const double c = std::cos(0.4);
    const cplx s = std::sin(0.4) * std::polar(1.0, 1.1);
    ref.rotate_pair(n, r1x.data(), r1y.data(), c, s);
    fast->rotate_pair(n, r2x.data(), r2y.data(), c, s);
    CHECK(max_diff(r1x, r2x) <= 1e-14);
    CHECK(max_diff(r1y, r2y) <= 1e-14);
  }
}

TEST_CASE("axpby may write over its input") {
  for (const char* name : {"scalar", "avx2"}) {
    Selected sel(name);
    if (!sel.ok()) continue;
    std::vector<cplx> x{{1, 2}, {3, 4}, {5, 6}};
    const std::vector<cplx> y{{1, 0}, {0, 1}, {1, 1}};
    k::active().axpby(3, 2.0, x.data(), 1.0, y.data(), x.data());
    CHECK(x[0] == cplx(3, 4));
    CHECK(x[2] == cplx(11, 13));
  }
}

TEST_CASE("eigensolver agrees across kernel tables") {
  numrad::Rng rng(9);
  for (std::size_t n : {2u, 5u, 9u}) {
    const numrad::ComplexMatrix h = numrad::hermitian_part(rng.ginibre(n));
    std::vector<double> v_scalar, v_fast;
    {
      Selected sel("scalar");
      REQUIRE(sel.ok());
      v_scalar = numrad::herm_eig(h).values;
    }
    {
      Selected sel("avx2");
      if (!sel.ok()) continue;
      v_fast = numrad::herm_eig(h).values;
    }
    for (std::size_t i = 0; i < n; ++i) CHECK(std::abs(v_scalar[i] - v_fast[i]) <= 1e-12 * (1.0 + std::abs(v_scalar[i])));
  }
}
