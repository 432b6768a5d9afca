#include <algorithm>
#include <cmath>
#include <numbers>

#include "numrad/error.hpp"
#include "numrad/hermitian.hpp"
#include "numrad/radii.hpp"

namespace numrad {

SphereObjective SphereObjective::w(const ComplexMatrix& a) {
  SphereObjective f;
  f.kind = Kind::numerical_radius;
  f.a = a;
  return f;
}

SphereObjective SphereObjective::we(const ComplexMatrix& a, const ComplexMatrix& b) {
  require_same_dimension(a, b, "SphereObjective::we");
  SphereObjective f;
  f.kind = Kind::euclid_radius;
  f.a = a;
  f.b = b;
  return f;
}

SphereObjective SphereObjective::wp(const ComplexMatrix& a, const ComplexMatrix& b, double p) {
  require_same_dimension(a, b, "SphereObjective::wp");
  if (!(p >= 1.0)) throw Error(ErrorCode::InvalidP, "p must be >= 1");
  SphereObjective f;
  f.kind = Kind::p_radius;
  f.a = a;
  f.b = b;
  f.p = p;
  return f;
}

SphereObjective SphereObjective::constant_value(double c) {
  SphereObjective f;
  f.kind = Kind::constant;
  f.constant = c;
  return f;
}

double SphereObjective::operator()(std::span<const cplx> x) const {
  switch (kind) {
    case Kind::numerical_radius: return w_functional(*a, x);
    case Kind::euclid_radius: return we_functional(*a, *b, x);
    case Kind::p_radius: return wp_functional(*a, *b, p, x);
    case Kind::constant: return constant;
  }
  return 0.0;
}

double SphereObjective::lipschitz() const {
  switch (kind) {
    case Kind::numerical_radius: return 2.0 * op_norm(*a);
    case Kind::euclid_radius: return 2.0 * std::hypot(op_norm(*a), op_norm(*b));
    case Kind::p_radius: return 2.0 * (op_norm(*a) + op_norm(*b));
    case Kind::constant: return 0.0;
  }
  return 0.0;
}

namespace {

// Unit vector from k polar angles followed by k phases; the first entry is real.
void point(std::span<const double> angles, std::size_t k, std::vector<cplx>& x) {
  double tail = 1.0;
  for (std::size_t i = 0; i < k; ++i) {
    const cplx phase = i == 0 ? cplx(1.0, 0.0) : std::polar(1.0, angles[k + i - 1]);
    x[i] = phase * (tail * std::cos(angles[i]));
    tail *= std::sin(angles[i]);
  }
  x[k] = (k == 0 ? cplx(1.0, 0.0) : std::polar(1.0, angles[2 * k - 1])) * tail;
}

}  // namespace

RadiusEstimate sphere_oracle(const SphereObjective& f, std::size_t n, std::size_t resolution) {
  if (n > 3) throw Error(ErrorCode::DimensionTooLarge, "sphere oracle supports n <= 3");
  if (n == 0) throw Error(ErrorCode::InvalidArgument, "n must be positive");
  if (f.a && f.a->n() != n) throw Error(ErrorCode::DimensionMismatch, "objective dimension differs from n");
  if (resolution < 2) throw Error(ErrorCode::InvalidArgument, "resolution must be >= 2");

  constexpr double kPi = std::numbers::pi;
  const std::size_t k = n - 1;
  const std::size_t dims = 2 * k;
  const double ha = 0.5 * kPi / static_cast<double>(resolution - 1);
  const double hp = 2.0 * kPi / static_cast<double>(resolution);

  std::vector<std::size_t> idx(dims, 0);
  std::vector<double> angles(dims, 0.0), best_angles(dims, 0.0);
  std::vector<cplx> x(n);
  double best = -1.0;
  for (;;) {
    for (std::size_t d = 0; d < dims; ++d) angles[d] = (d < k ? ha : hp) * static_cast<double>(idx[d]);
    point(angles, k, x);
    const double v = f(x);
    if (v > best) {
      best = v;
      best_angles = angles;
    }
    std::size_t d = 0;
    for (; d < dims; ++d) {
      if (++idx[d] < resolution) break;
      idx[d] = 0;
    }
    if (d == dims) break;
  }
  const double grid_best = best;

  // Pattern search from the best node. Only raises the reported value; the
  // certificate is still taken from the grid.
  if (dims > 0) {
    std::vector<double> step(dims);
    for (std::size_t d = 0; d < dims; ++d) step[d] = 0.5 * (d < k ? ha : hp);
    std::size_t combos = 1;
    for (std::size_t d = 0; d < dims; ++d) combos *= 3;
    while (step[0] > 1e-10) {
      bool moved = false;
      std::vector<double> centre = best_angles;
      for (std::size_t c = 0; c < combos; ++c) {
        std::size_t code = c;
        for (std::size_t d = 0; d < dims; ++d) {
          angles[d] = centre[d] + (static_cast<double>(code % 3) - 1.0) * step[d];
          code /= 3;
        }
        point(angles, k, x);
        const double v = f(x);
        if (v > best) {
          best = v;
          best_angles = angles;
          moved = true;
        }
      }
      if (!moved) {
        for (double& s : step) s *= 0.5;
      }
    }
  }

  point(best_angles, k, x);
  const double reach = 0.5 * static_cast<double>(k) * (ha + hp);
  RadiusEstimate r;
  r.value = best;
  r.lower_cert = best;
  r.upper_cert = std::max(best, grid_best + f.lipschitz() * reach);
  r.witness = x;
  r.method = RadiusMethod::sphere_grid;
  return r;
}

}  // namespace numrad
