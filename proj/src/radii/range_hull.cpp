#include "numrad/range_hull.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "numrad/hermitian.hpp"

namespace numrad {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Pt {
  double x;
  double y;
};

}  // namespace

double Gauge::operator()(double x, double y) const noexcept {
  const double a = std::abs(x) / sx;
  const double b = std::abs(y) / sy;
  if (p == 2.0) return std::hypot(a, b);
  if (p == 1.0) return a + b;
  const double m = std::max(a, b);
  if (m == 0.0) return 0.0;
  return m * std::pow(std::pow(a / m, p) + std::pow(b / m, p), 1.0 / p);
}

RangeHull::RangeHull(const ComplexMatrix& x, const ComplexMatrix& y, std::size_t initial_directions)
    : x_(hermitian_part(x)), y_(hermitian_part(y)) {
  require_same_dimension(x, y, "RangeHull");
  const double scale = frobenius_norm(x_) + frobenius_norm(y_);
  const double n = static_cast<double>(x_.n());
  pad_ = (2e-13 + 64.0 * n * std::numeric_limits<double>::epsilon()) * scale;

  const std::size_t k = std::max<std::size_t>(initial_directions, 8);
  std::vector<Sample> fresh;
  fresh.reserve(k);
  for (std::size_t i = 0; i < k; ++i) fresh.push_back(probe(kTwoPi * static_cast<double>(i) / static_cast<double>(k)));
  insert_sorted(std::move(fresh));
}

RangeHull::Sample RangeHull::probe(double angle) const {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  ComplexMatrix h(x_.n());
  const auto xd = x_.data();
  const auto yd = y_.data();
  auto hd = h.data();
  for (std::size_t k = 0; k < xd.size(); ++k) hd[k] = c * xd[k] + s * yd[k];
  TopEigenpair top = top_eigenpair(h);
  const double px = quadratic_form(x_, top.vector).real();
  const double py = quadratic_form(y_, top.vector).real();
  // The Rayleigh quotient is itself a valid support lower estimate; keep the
  // larger of the two so the padding always dominates the eigenvalue error.
  const double support = std::max(top.value, c * px + s * py) + pad_;
  return {angle, c, s, support, px, py, std::move(top.vector)};
}

void RangeHull::insert_sorted(std::vector<Sample> fresh) {
  auto by_angle = [](const Sample& a, const Sample& b) { return a.angle < b.angle; };
  std::sort(fresh.begin(), fresh.end(), by_angle);
  const auto mid = static_cast<std::ptrdiff_t>(samples_.size());
  for (auto& s : fresh) samples_.push_back(std::move(s));
  std::inplace_merge(samples_.begin(), samples_.begin() + mid, samples_.end(), by_angle);
  polygon_valid_ = false;
}

void RangeHull::build_polygon() {
  // Outer polygon as the intersection of the sampled halfplanes. The normals
  // are sorted by angle, so a single deque pass suffices.
  const std::size_t m = samples_.size();
  auto outside = [&](std::size_t k, const Pt& v) {
    const Sample& s = samples_[k];
    return s.cos_a * v.x + s.sin_a * v.y > s.support;
  };
  auto meet = [&](std::size_t i, std::size_t j) {
    const Sample& a = samples_[i];
    const Sample& b = samples_[j];
    const double det = std::sin(b.angle - a.angle);
    return Pt{(a.support * b.sin_a - b.support * a.sin_a) / det, (b.support * a.cos_a - a.support * b.cos_a) / det};
  };
  auto parallel = [&](std::size_t i, std::size_t j) {
    double d = std::remainder(samples_[j].angle - samples_[i].angle, kTwoPi);
    return std::abs(d) < 1e-12;
  };

  std::vector<std::size_t> dq(2 * m + 2);
  std::size_t head = 0;
  std::size_t tail = 0;  // one past the back
  for (std::size_t k = 0; k < m; ++k) {
    if (tail > head && parallel(dq[tail - 1], k)) {
      if (samples_[k].support < samples_[dq[tail - 1]].support) --tail;
      else continue;
    }
    while (tail - head >= 2 && outside(k, meet(dq[tail - 2], dq[tail - 1]))) --tail;
    while (tail - head >= 2 && outside(k, meet(dq[head], dq[head + 1]))) ++head;
    dq[tail++] = k;
  }
  if (tail - head >= 2 && parallel(dq[tail - 1], dq[head])) {
    if (samples_[dq[head]].support <= samples_[dq[tail - 1]].support) --tail;
    else ++head;
  }
  while (tail - head >= 3 && outside(dq[head], meet(dq[tail - 2], dq[tail - 1]))) --tail;
  while (tail - head >= 3 && outside(dq[tail - 1], meet(dq[head], dq[head + 1]))) ++head;

  polygon_.clear();
  const std::size_t count = tail - head;
  for (std::size_t r = 0; r < count; ++r) {
    const std::size_t i = dq[head + r];
    const std::size_t j = dq[head + (r + 1) % count];
    const Pt v = meet(i, j);
    polygon_.push_back({v.x, v.y, i, j});
  }
  polygon_valid_ = true;
}

std::vector<double> RangeHull::gap_bounds(const Gauge& g) {
  if (!polygon_valid_) build_polygon();
  const std::size_t m = samples_.size();
  std::vector<double> bound(m, 0.0);
  for (const Vertex& v : polygon_) {
    const double value = g(v.x, v.y) * (1.0 + 1e-12);
    // The vertex covers every sampling gap between the two lines.
    for (std::size_t k = v.i;; k = (k + 1) % m) {
      bound[k] = std::max(bound[k], value);
      if ((k + 1) % m == v.j) break;
    }
  }
  return bound;
}

RangeHull::Enclosure RangeHull::maximize(const Gauge& g, double rel_tol, std::size_t max_directions) {
  Enclosure out;
  for (;;) {
    const std::size_t m = samples_.size();
    std::size_t best_k = 0;
    double lower = -1.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double v = g(samples_[k].px, samples_[k].py);
      if (v > lower) {
        lower = v;
        best_k = k;
      }
    }
    const std::vector<double> bound = gap_bounds(g);
    const double upper = std::max(*std::max_element(bound.begin(), bound.end()), lower);
    const double threshold = lower + rel_tol * std::max(lower, 1e-300);

    out.lower = lower;
    out.upper = upper;
    out.witness = samples_[best_k].witness;
    out.px = samples_[best_k].px;
    out.py = samples_[best_k].py;
    if (upper <= threshold || m >= max_directions) return out;

    std::vector<Sample> fresh;
    for (std::size_t k = 0; k < m && m + fresh.size() < max_directions; ++k) {
      if (bound[k] <= threshold) continue;
      double span = samples_[(k + 1) % m].angle - samples_[k].angle;
      if (span <= 0.0) span += kTwoPi;
      if (span < 1e-12) continue;
      double mid = samples_[k].angle + 0.5 * span;
      if (mid >= kTwoPi) mid -= kTwoPi;
      fresh.push_back(probe(mid));
    }
    if (fresh.empty()) return out;
    insert_sorted(std::move(fresh));
  }
}

}  // namespace numrad
