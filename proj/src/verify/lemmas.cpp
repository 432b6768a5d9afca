#include <algorithm>
#include <cmath>

#include "numrad/hermitian.hpp"
#include "numrad/verify.hpp"

namespace numrad {
namespace {

constexpr double kSlack = 1e-9;

class Tally {
 public:
  explicit Tally(std::string name) { out_.name = std::move(name); }

  /// Records lhs <= rhs with a relative slack.
  void check(double lhs, double rhs) {
    ++out_.trials;
    const double gap = lhs - rhs;
    const double rel = gap / std::max(1.0, std::abs(rhs));
    out_.worst = std::max(out_.worst, rel);
    if (!(rel <= kSlack)) ++out_.failures;
  }
  void fail() {
    ++out_.trials;
    ++out_.failures;
  }
  void pass() { ++out_.trials; }

  LemmaOutcome result() const { return out_; }

 private:
  LemmaOutcome out_;
};

std::vector<cplx> random_vector(Rng& rng, std::size_t n) {
  std::vector<cplx> v(n);
  for (auto& z : v) z = rng.complex_normal();
  return v;
}

std::size_t random_dim(Rng& rng) { return 2 + static_cast<std::size_t>(rng.uniform() * 5.0) % 5; }

ComplexMatrix psd_matrix(Rng& rng, std::size_t n) {
  const ComplexMatrix g = rng.ginibre(n);
  return hermitian_part(g * adjoint(g));
}

double rayleigh(const ComplexMatrix& h, std::span<const cplx> x) { return quadratic_form(h, x).real(); }

double norm_of_vec_image(const ComplexMatrix& m, std::span<const cplx> x) { return vec_norm(matvec(m, x)); }

ComplexMatrix scaled(const ComplexMatrix& m, double s) {
  ComplexMatrix r = m;
  r *= s;
  return r;
}

}  // namespace

bool LemmaReport::passed() const {
  return std::all_of(lemmas.begin(), lemmas.end(), [](const LemmaOutcome& l) { return l.failures == 0; });
}

LemmaReport lemma_property_suite(std::uint64_t seed, std::size_t trials) {
  LemmaReport rep;
  Rng rng(hash_combine(seed, hash_string("lemmas")));

  {
    Tally t("buzano");
    for (std::size_t k = 0; k < trials; ++k) {
      const std::size_t n = random_dim(rng);
      const auto x = random_vector(rng, n);
      const auto y = random_vector(rng, n);
      // Every eighth trial aligns e with x, the equality case.
      std::vector<cplx> e = (k % 8 == 0) ? x : rng.unit_vector(n);
      const double ne = vec_norm(e);
      for (auto& z : e) z /= ne;
      const double lhs = std::abs(inner(x, e) * inner(e, y));
      const double rhs = 0.5 * (vec_norm(x) * vec_norm(y) + std::abs(inner(x, y)));
      t.check(lhs, rhs);
    }
    rep.lemmas.push_back(t.result());
  }

  {
    Tally t("mixed_schwarz");
    for (std::size_t k = 0; k < trials; ++k) {
      const std::size_t n = random_dim(rng);
      const ComplexMatrix a = rng.ginibre(n);
      const auto x = random_vector(rng, n);
      const auto y = random_vector(rng, n);
      const double lhs = std::norm(inner(matvec(a, x), y));
      const double rhs = rayleigh(abs_op(a), x) * rayleigh(abs_op(adjoint(a)), y);
      t.check(lhs, rhs);
    }
    rep.lemmas.push_back(t.result());
  }

  {
    // |<ABx,y>| <= r(B) |f(|A|)x| |g(|A*|)y| with f = t^a, g = t^(1-a) and
    // B = V diag(z) V*, V the eigenvectors of |A|: normal and commuting with
    // |A|. B = I every fourth trial.
    Tally t("generalized_mixed_schwarz");
    for (std::size_t k = 0; k < trials; ++k) {
      const std::size_t n = random_dim(rng);
      const ComplexMatrix a = rng.ginibre(n);
      const double alpha = rng.uniform();
      const HermitianEigen abs_eig = herm_eig(hermitian_part(adjoint(a) * a));
      const HermitianEigen abs_star_eig = herm_eig(hermitian_part(a * adjoint(a)));
      ComplexMatrix b = ComplexMatrix::identity(n);
      double rb = 1.0;
      if (k % 4 != 0) {
        ComplexMatrix d(n);
        rb = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          d(i, i) = rng.complex_normal();
          rb = std::max(rb, std::abs(d(i, i)));
        }
        b = abs_eig.vectors * d * adjoint(abs_eig.vectors);
      }
      const auto x = random_vector(rng, n);
      const auto y = random_vector(rng, n);
      const double lhs = std::abs(inner(matvec(a * b, x), y));
      // f(|A|) = (A*A)^(a/2), g(|A*|) = (AA*)^((1-a)/2).
      const double rhs = rb * norm_of_vec_image(psd_power(abs_eig, 0.5 * alpha), x) *
                         norm_of_vec_image(psd_power(abs_star_eig, 0.5 * (1.0 - alpha)), y);
      t.check(lhs, rhs);
    }
    rep.lemmas.push_back(t.result());
  }

  {
    Tally t("mccarthy");
    const double ps[] = {1.0, 2.0, 3.0, 5.0};
    for (std::size_t k = 0; k < trials; ++k) {
      const std::size_t n = random_dim(rng);
      const double p = ps[k % 4];
      ComplexMatrix h = psd_matrix(rng, n);
      if (k % 16 == 1) {
        // Orthogonal projection onto a random line.
        const auto u = rng.unit_vector(n);
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t j = 0; j < n; ++j) h(i, j) = u[i] * std::conj(u[j]);
        }
        h = hermitian_part(h);
      }
      const auto x = rng.unit_vector(n);
      const double lhs = std::pow(std::max(0.0, rayleigh(h, x)), p);
      const double rhs = rayleigh(psd_power(h, p), x);
      t.check(lhs, rhs);
    }
    rep.lemmas.push_back(t.result());
  }

  {
    Tally t("bohr");
    for (std::size_t k = 0; k < trials; ++k) {
      const std::size_t n = 1 + static_cast<std::size_t>(rng.uniform() * 8.0);
      const double r = (k % 10 == 0) ? 1.0 : 1.0 + 5.0 * rng.uniform();
      double sum = 0.0;
      double sum_pow = 0.0;
      for (std::size_t i = 0; i < n; ++i) {
        const double a = (k % 10 == 5) ? 1.0 : -std::log(1.0 - rng.uniform()) + 1e-12;
        sum += a;
        sum_pow += std::pow(a, r);
      }
      t.check(std::pow(sum, r), std::pow(static_cast<double>(n), r - 1.0) * sum_pow);
    }
    rep.lemmas.push_back(t.result());
  }

  {
    // [[P, C*], [C, Q]] >= 0 iff |<Cx,y>|^2 <= <Px,x><Qy,y>. Gram blocks of
    // (B, C) are positive; scaling their corner by 1 + s makes them indefinite,
    // and the negative eigenvector then violates the inner product inequality.
    Tally t("positive_block");
    for (std::size_t k = 0; k < trials; ++k) {
      const std::size_t n = random_dim(rng);
      const ComplexMatrix b = rng.ginibre(n);
      const ComplexMatrix c = rng.ginibre(n);
      const ComplexMatrix p = hermitian_part(b * adjoint(b));
      const ComplexMatrix q = hermitian_part(adjoint(c) * c);
      ComplexMatrix corner = adjoint(c) * adjoint(b);
      const bool perturb = k % 2 == 1;
      if (perturb) corner = scaled(corner, 1.0 + 0.05 + rng.uniform());

      ComplexMatrix big(2 * n);
      const ComplexMatrix cs = adjoint(corner);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          big(i, j) = p(i, j);
          big(i, j + n) = cs(i, j);
          big(i + n, j) = corner(i, j);
          big(i + n, j + n) = q(i, j);
        }
      }
      big = hermitian_part(big);
      const HermitianEigen eig = herm_eig(big);
      const double scale = std::max(1.0, std::abs(eig.values.back()));

      if (!perturb) {
        if (eig.values.front() < -1e-9 * scale) {
          t.fail();
          continue;
        }
        const auto x = random_vector(rng, n);
        const auto y = random_vector(rng, n);
        t.check(std::norm(inner(matvec(corner, x), y)), rayleigh(p, x) * rayleigh(q, y));
      } else {
        if (eig.values.front() >= 0.0) {
          t.fail();
          continue;
        }
        const auto v = eig.vector(0);
        const std::vector<cplx> x(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n));
        const std::vector<cplx> y(v.begin() + static_cast<std::ptrdiff_t>(n), v.end());
        // The converse must fail here: the left side exceeds the right.
        t.check(rayleigh(p, x) * rayleigh(q, y), std::norm(inner(matvec(corner, x), y)));
      }
    }
    rep.lemmas.push_back(t.result());
  }

  {
    Tally t("maligranda");
    for (std::size_t k = 0; k < trials; ++k) {
      const std::size_t n = random_dim(rng);
      const ComplexMatrix x = rng.ginibre(n);
      ComplexMatrix y = rng.ginibre(n);
      if (k % 8 == 0) y = scaled(x, 0.1 + rng.uniform());
      const double nx = op_norm(x);
      const double ny = op_norm(y);
      const double dev = op_norm(scaled(x, 1.0 / nx) + scaled(y, 1.0 / ny));
      const double rhs = nx + ny - (2.0 - dev) * std::min(nx, ny);
      t.check(op_norm(x + y), rhs);
    }
    rep.lemmas.push_back(t.result());
  }
  return rep;
}

}  // namespace numrad
