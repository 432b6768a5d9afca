#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>

#include "numrad/error.hpp"
#include "numrad/hermitian.hpp"
#include "numrad/radii.hpp"
#include "numrad/random.hpp"
#include "radii_internal.hpp"

namespace numrad {
namespace detail {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();

struct Cell {
  double t0, t1, s0, s1;
  double bound;
};

struct CellOrder {
  bool operator()(const Cell& a, const Cell& b) const {
    if (a.bound != b.bound) return a.bound < b.bound;
    if (a.t0 != b.t0) return a.t0 > b.t0;
    return a.s0 > b.s0;
  }
};

}  // namespace

bool lexicographically_less(const std::vector<cplx>& x, const std::vector<cplx>& y) {
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(), [](const cplx& u, const cplx& v) {
    return u.real() < v.real() || (u.real() == v.real() && u.imag() < v.imag());
  });
}

std::uint64_t restart_seed(const ComplexMatrix& a, const ComplexMatrix& b, std::string_view tag, int index) {
  std::uint64_t h = hash_combine(matrix_hash(a), matrix_hash(b));
  h = hash_combine(h, hash_string(tag));
  return hash_combine(h, static_cast<std::uint64_t>(index));
}

bool is_zero(const ComplexMatrix& a) {
  for (const cplx& z : a.data()) {
    if (z != cplx(0.0, 0.0)) return false;
  }
  return true;
}

std::optional<std::pair<double, double>> near_hermitian_pair(const ComplexMatrix& a, const ComplexMatrix& b) {
  const double da = hermitian_defect(a);
  const double db = hermitian_defect(b);
  if (da > 1e-9 * std::max(1.0, frobenius_norm(a)) || db > 1e-9 * std::max(1.0, frobenius_norm(b))) {
    return std::nullopt;
  }
  // |<(A - Re A)x, x>| <= ||A - A*|| / 2 <= ||A - A*||_F / 2
  return std::make_pair(0.5 * da, 0.5 * db);
}

Candidate pair_ascent(const ComplexMatrix& a, const ComplexMatrix& b, double p, std::vector<cplx> x) {
  constexpr double kSmooth = 1e-12;
  const std::size_t n = a.n();
  const ComplexMatrix as = adjoint(a);
  const ComplexMatrix bs = adjoint(b);
  const Gauge g{p, 1.0, 1.0};

  auto value = [&](std::span<const cplx> v) {
    return g(std::abs(quadratic_form(a, v)), std::abs(quadratic_form(b, v)));
  };
  auto normalize = [](std::vector<cplx>& v) {
    const double s = vec_norm(v);
    for (auto& z : v) z /= s;
  };

  normalize(x);
  double f = value(x);
  double step = 1.0;
  for (int it = 0; it < 400; ++it) {
    const cplx qa = quadratic_form(a, x);
    const cplx qb = quadratic_form(b, x);
    const double ma = std::sqrt(std::norm(qa) + kSmooth);
    const double mb = std::sqrt(std::norm(qb) + kSmooth);

    // Hoelder dual weights: F >= Re(wa <Ax,x> + wb <Bx,x>) with equality at x.
    const double fs = std::max(f, 1e-300);
    const cplx wa = std::conj(qa) / ma * std::pow(ma / fs, p - 1.0);
    const cplx wb = std::conj(qb) / mb * std::pow(mb / fs, p - 1.0);
    ComplexMatrix h = a * wa + b * wb;
    TopEigenpair top = top_eigenpair(hermitian_part(h));
    std::vector<cplx> best_x = std::move(top.vector);
    double best_f = value(best_x);

    // Wirtinger gradient of |a|^p + |b|^p, then a step-halving search on the sphere.
    const auto ax = matvec(a, x), asx = matvec(as, x), bx = matvec(b, x), bsx = matvec(bs, x);
    const double ka = 0.5 * p * std::pow(ma, p - 2.0);
    const double kb = 0.5 * p * std::pow(mb, p - 2.0);
    std::vector<cplx> grad(n);
    for (std::size_t i = 0; i < n; ++i) {
      grad[i] = ka * (std::conj(qa) * ax[i] + qa * asx[i]) + kb * (std::conj(qb) * bx[i] + qb * bsx[i]);
    }
    const double gn = vec_norm(grad);
    if (gn > 0.0) {
      double eta = step;
      for (int k = 0; k < 30; ++k, eta *= 0.5) {
        std::vector<cplx> y(n);
        for (std::size_t i = 0; i < n; ++i) y[i] = x[i] + (eta / gn) * grad[i];
        normalize(y);
        const double fy = value(y);
        if (fy > f) {
          step = std::min(2.0 * eta, 4.0);
          if (fy > best_f) {
            best_f = fy;
            best_x = std::move(y);
          }
          break;
        }
      }
    }

    if (!(best_f > f)) break;
    const double gain = best_f - f;
    x = std::move(best_x);
    f = best_f;
    if (gain <= 1e-11 * f) break;
  }
  return {f, std::move(x)};
}

Candidate pair_ascent_multistart(const ComplexMatrix& a, const ComplexMatrix& b, double p, int restarts,
                                 std::string_view tag, const std::vector<std::vector<cplx>>& extra) {
  Candidate best{-1.0, {}};
  auto consider = [&](Candidate c) {
    if (c.value > best.value || (c.value == best.value && lexicographically_less(c.x, best.x))) best = std::move(c);
  };
  for (const auto& x0 : extra) consider(pair_ascent(a, b, p, x0));
  for (int r = 0; r < restarts; ++r) {
    Rng rng(restart_seed(a, b, tag, r));
    consider(pair_ascent(a, b, p, rng.unit_vector(a.n())));
  }
  return best;
}

RadiusEstimate bloch_search(const std::function<InnerEval(cplx, cplx)>& inner,
                            const std::function<double(std::span<const cplx>)>& functional, double rel_tol,
                            std::size_t max_cells) {
  double best_lower = -1.0;
  std::vector<cplx> best_x;
  std::size_t evaluations = 0;

  auto evaluate = [&](double t0, double t1, double s0, double s1) {
    const double tc = 0.5 * (t0 + t1);
    const double sc = 0.5 * (s0 + s1);
    const cplx c1(std::cos(0.5 * tc), 0.0);
    const cplx c2 = std::polar(std::sin(0.5 * tc), sc);
    InnerEval e = inner(c1, c2);
    ++evaluations;
    const double lo = functional(e.witness);
    if (lo > best_lower) {
      best_lower = lo;
      best_x = e.witness;
    }
    // Largest geodesic distance from the center to a point of the cell.
    double max_sin = std::max(std::sin(t0), std::sin(t1));
    if (t0 <= 0.5 * kPi && t1 >= 0.5 * kPi) max_sin = 1.0;
    const double r = 0.5 * (t1 - t0) + 0.5 * (s1 - s0) * max_sin;
    double bound = std::numeric_limits<double>::infinity();
    if (r < kPi) bound = e.upper / std::cos(0.5 * r) * (1.0 + 4.0 * kEps);
    return Cell{t0, t1, s0, s1, bound};
  };

  std::priority_queue<Cell, std::vector<Cell>, CellOrder> queue;
  constexpr int kT = 8, kS = 16;
  for (int i = 0; i < kT; ++i) {
    for (int j = 0; j < kS; ++j) {
      queue.push(evaluate(kPi * i / kT, kPi * (i + 1) / kT, 2.0 * kPi * j / kS, 2.0 * kPi * (j + 1) / kS));
    }
  }
  while (!queue.empty()) {
    const Cell top = queue.top();
    if (top.bound <= best_lower * (1.0 + rel_tol) || evaluations + 4 > max_cells) break;
    queue.pop();
    const double tm = 0.5 * (top.t0 + top.t1);
    const double sm = 0.5 * (top.s0 + top.s1);
    queue.push(evaluate(top.t0, tm, top.s0, sm));
    queue.push(evaluate(top.t0, tm, sm, top.s1));
    queue.push(evaluate(tm, top.t1, top.s0, sm));
    queue.push(evaluate(tm, top.t1, sm, top.s1));
  }

  RadiusEstimate out;
  out.value = best_lower;
  out.lower_cert = best_lower;
  out.upper_cert = queue.empty() ? best_lower : std::max(best_lower, queue.top().bound);
  out.witness = std::move(best_x);
  out.method = RadiusMethod::reduction;
  return out;
}

}  // namespace detail

namespace {

void absorb(RadiusEstimate& est, const detail::Candidate& c) {
  if (c.value > est.lower_cert) {
    est.lower_cert = c.value;
    est.value = c.value;
    est.witness = c.x;
  }
  if (est.upper_cert && *est.upper_cert < est.lower_cert) est.upper_cert = est.lower_cert;
}

RadiusEstimate relabel(RadiusEstimate r, RadiusMethod m) {
  r.method = m;
  return r;
}

// Radius of a Hermitian (up to roundoff) pair from its range hull; the exact
// functional at the witness gives the lower value.
RadiusEstimate near_hermitian_estimate(const ComplexMatrix& a, const ComplexMatrix& b, std::pair<double, double> skew,
                                       const Gauge& g, const RadiusOptions& opt) {
  RangeHull hull(a, b);
  RadiusEstimate r = hull_radius(hull, g, opt);
  const double exact = g(std::abs(quadratic_form(a, r.witness)), std::abs(quadratic_form(b, r.witness)));
  const double widen = g(skew.first, skew.second);
  r.lower_cert = std::min(r.lower_cert, exact);
  r.value = r.lower_cert;
  r.upper_cert = std::max(*r.upper_cert + widen, r.lower_cert);
  return r;
}

}  // namespace

RadiusEstimate euclid_radius(const ComplexMatrix& a, const ComplexMatrix& b, const RadiusOptions& opt) {
  require_same_dimension(a, b, "euclid_radius");
  if (opt.structure_shortcuts) {
    if (detail::is_zero(b)) return relabel(num_radius(a, opt), RadiusMethod::reduction);
    if (detail::is_zero(a)) return relabel(num_radius(b, opt), RadiusMethod::reduction);
    // |<A*x,x>| = |<Ax,x>| and likewise for B = A.
    if (b == adjoint(a) || b == a) {
      RadiusEstimate r = num_radius(a, opt);
      const double s = std::numbers::sqrt2;
      r.lower_cert = std::min(s * r.lower_cert, we_functional(a, b, r.witness));
      r.value = r.lower_cert;
      r.upper_cert = std::max(s * *r.upper_cert * (1.0 + 2.0 * std::numeric_limits<double>::epsilon()),
                              r.lower_cert);
      r.method = RadiusMethod::reduction;
      return r;
    }
  }
  if (auto skew = detail::near_hermitian_pair(a, b)) {
    return relabel(near_hermitian_estimate(a, b, *skew, Gauge{}, opt), RadiusMethod::reduction);
  }

  RadiusOptions inner_opt = opt;
  inner_opt.rel_tol = std::max(opt.rel_tol, 1e-12);
  auto inner = [&](cplx c1, cplx c2) {
    RadiusEstimate w = num_radius(a * c1 + b * c2, inner_opt);
    return detail::InnerEval{*w.upper_cert, std::move(w.witness)};
  };
  auto functional = [&](std::span<const cplx> x) { return we_functional(a, b, x); };
  RadiusEstimate r = detail::bloch_search(inner, functional, std::max(opt.rel_tol, 1e-9), opt.max_cells);
  absorb(r, detail::pair_ascent_multistart(a, b, 2.0, opt.restarts, "euclid_radius", {r.witness}));
  return r;
}

RadiusEstimate euclid_norm(const ComplexMatrix& a, const ComplexMatrix& b, const RadiusOptions& opt) {
  require_same_dimension(a, b, "euclid_norm");
  const double n = static_cast<double>(a.n());
  auto inner = [&](cplx c1, cplx c2) {
    const ComplexMatrix m = a * c1 + b * c2;
    const ComplexMatrix g = hermitian_part(adjoint(m) * m);
    TopEigenpair top = top_eigenpair(g);
    const double pad = (2e-13 + 64.0 * n * std::numeric_limits<double>::epsilon()) * frobenius_norm(g);
    return detail::InnerEval{std::sqrt(std::max(0.0, top.value + pad)), std::move(top.vector)};
  };
  auto functional = [&](std::span<const cplx> x) { return euclid_norm_functional(a, b, x); };
  RadiusEstimate r = detail::bloch_search(inner, functional, std::max(opt.rel_tol, 1e-9), opt.max_cells);
  return r;
}

}  // namespace numrad
