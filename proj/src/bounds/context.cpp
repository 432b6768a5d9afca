#include <algorithm>
#include <cmath>
#include <limits>
#include <unordered_map>

#include "numrad/bounds.hpp"
#include "numrad/error.hpp"
#include "numrad/hermitian.hpp"

namespace numrad {

std::string_view to_string(BoundSide s) noexcept {
  switch (s) {
    case BoundSide::lower_w: return "lower_w";
    case BoundSide::upper_w: return "upper_w";
    case BoundSide::lower_w2: return "lower_w2";
    case BoundSide::upper_w2: return "upper_w2";
    case BoundSide::upper_product: return "upper_product";
    case BoundSide::upper_commutator: return "upper_commutator";
  }
  return "unknown";
}

bool is_lower(BoundSide s) noexcept { return s == BoundSide::lower_w || s == BoundSide::lower_w2; }

Quantity Quantity::rounded(double x, double rel) {
  const double d = rel * std::abs(x) + 1e-300;
  return {x, x - d, x + d};
}

Quantity Quantity::of(const RadiusEstimate& r) {
  return {r.value, r.lower_cert, r.upper_cert.value_or(std::numeric_limits<double>::infinity())};
}

Quantity operator+(const Quantity& a, const Quantity& b) { return {a.v + b.v, a.lo + b.lo, a.hi + b.hi}; }
Quantity operator-(const Quantity& a, const Quantity& b) { return {a.v - b.v, a.lo - b.hi, a.hi - b.lo}; }
Quantity operator*(double s, const Quantity& a) { return {s * a.v, s * a.lo, s * a.hi}; }
Quantity operator*(const Quantity& a, const Quantity& b) {
  return {a.v * b.v, std::max(0.0, a.lo) * std::max(0.0, b.lo), a.hi * b.hi};
}
Quantity qmin(const Quantity& a, const Quantity& b) {
  return {std::min(a.v, b.v), std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}
Quantity qmax(const Quantity& a, const Quantity& b) {
  return {std::max(a.v, b.v), std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}
Quantity qsqrt(const Quantity& a) {
  return {std::sqrt(std::max(0.0, a.v)), std::sqrt(std::max(0.0, a.lo)), std::sqrt(std::max(0.0, a.hi))};
}
Quantity qpow(const Quantity& a, double p) {
  return {std::pow(std::max(0.0, a.v), p), std::pow(std::max(0.0, a.lo), p), std::pow(std::max(0.0, a.hi), p)};
}

struct EvalContext::Cache {
  std::optional<HermitianEigen> eig_ata;
  std::optional<HermitianEigen> eig_aat;
  std::map<double, ComplexMatrix> abs_pow;
  std::map<double, ComplexMatrix> abs_star_pow;
  std::optional<Quantity> norm_a;
  std::optional<Quantity> norm_s;
  std::optional<RefinementTerms> terms;
  std::optional<RadiusEstimate> w;
  std::unordered_map<std::string, RadiusEstimate> radii;
  std::unordered_map<std::string, Quantity> norms;
  std::unordered_map<std::string, std::unique_ptr<RangeHull>> hulls;
};

EvalContext::EvalContext(Operands ops, RadiusOptions opt)
    : ops_(std::move(ops)), a_star_(adjoint(ops_.a)), opt_(opt), cache_(std::make_unique<Cache>()) {
  const std::size_t n = ops_.a.n();
  for (const auto* m : {&ops_.b, &ops_.c, &ops_.x, &ops_.y}) {
    if (*m && (*m)->n() != n) throw Error(ErrorCode::DimensionMismatch, "operands must share the dimension of A");
  }
  if (ops_.block && (ops_.block->p.n() != n || ops_.block->q.n() != n || ops_.block->c.n() != n)) {
    throw Error(ErrorCode::DimensionMismatch, "block operands must share the dimension of A");
  }
  for (const auto& t : ops_.terms) {
    if (t.a.n() != n || t.x.n() != n || t.b.n() != n) {
      throw Error(ErrorCode::DimensionMismatch, "product terms must share the dimension of A");
    }
  }
}

EvalContext::~EvalContext() = default;

const ComplexMatrix& EvalContext::abs_pow(double s) {
  auto it = cache_->abs_pow.find(s);
  if (it != cache_->abs_pow.end()) return it->second;
  if (!cache_->eig_ata) cache_->eig_ata = herm_eig(hermitian_part(a_star_ * ops_.a));
  // |A|^s = (A*A)^(s/2)
  return cache_->abs_pow.emplace(s, psd_power(*cache_->eig_ata, 0.5 * s)).first->second;
}

const ComplexMatrix& EvalContext::abs_star_pow(double s) {
  auto it = cache_->abs_star_pow.find(s);
  if (it != cache_->abs_star_pow.end()) return it->second;
  if (!cache_->eig_aat) cache_->eig_aat = herm_eig(hermitian_part(ops_.a * a_star_));
  return cache_->abs_star_pow.emplace(s, psd_power(*cache_->eig_aat, 0.5 * s)).first->second;
}

Quantity EvalContext::norm_a() {
  if (!cache_->norm_a) cache_->norm_a = Quantity::rounded(op_norm(ops_.a));
  return *cache_->norm_a;
}

Quantity EvalContext::norm_s() {
  if (!cache_->norm_s) cache_->norm_s = Quantity::rounded(op_norm(hermitian_part(a_star_ * ops_.a + ops_.a * a_star_)));
  return *cache_->norm_s;
}

const RefinementTerms& EvalContext::terms() {
  if (!cache_->terms) cache_->terms = refinement_terms(ops_.a);
  return *cache_->terms;
}

const RadiusEstimate& EvalContext::w() {
  if (!cache_->w) cache_->w = num_radius(ops_.a, opt_);
  return *cache_->w;
}

const RadiusEstimate& EvalContext::w_of(const std::string& key, const std::function<ComplexMatrix()>& make) {
  auto it = cache_->radii.find("w:" + key);
  if (it != cache_->radii.end()) return it->second;
  return cache_->radii.emplace("w:" + key, num_radius(make(), opt_)).first->second;
}

Quantity EvalContext::norm_of(const std::string& key, const std::function<ComplexMatrix()>& make) {
  auto it = cache_->norms.find(key);
  if (it != cache_->norms.end()) return it->second;
  return cache_->norms.emplace(key, Quantity::rounded(op_norm(make()))).first->second;
}

RangeHull& EvalContext::hull(const std::string& key,
                             const std::function<std::pair<ComplexMatrix, ComplexMatrix>()>& make) {
  auto it = cache_->hulls.find(key);
  if (it != cache_->hulls.end()) return *it->second;
  auto pair = make();
  auto h = std::make_unique<RangeHull>(pair.first, pair.second);
  return *cache_->hulls.emplace(key, std::move(h)).first->second;
}

const RadiusEstimate& EvalContext::radius(const std::string& key, const std::function<RadiusEstimate()>& compute) {
  auto it = cache_->radii.find(key);
  if (it != cache_->radii.end()) return it->second;
  return cache_->radii.emplace(key, compute()).first->second;
}

}  // namespace numrad
