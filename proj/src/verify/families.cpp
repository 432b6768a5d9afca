#include <cmath>
#include <cstdio>

#include "numrad/error.hpp"
#include "numrad/hermitian.hpp"
#include "numrad/verify.hpp"

namespace numrad {
namespace {

struct FamilyName {
  FamilyKind kind;
  std::string_view name;
};

constexpr FamilyName kNames[] = {
    {FamilyKind::ginibre, "ginibre"},   {FamilyKind::nilpotent, "nilpotent"},
    {FamilyKind::normal, "normal"},     {FamilyKind::unitary, "unitary"},
    {FamilyKind::rank_one, "rank_one"}, {FamilyKind::hermitian, "hermitian"},
    {FamilyKind::shifted_ginibre, "shifted_ginibre"}, {FamilyKind::triangular, "triangular"},
};

}  // namespace

std::string_view to_string(FamilyKind k) noexcept {
  for (const auto& e : kNames) {
    if (e.kind == k) return e.name;
  }
  return "unknown";
}

FamilyKind parse_family(std::string_view name) {
  for (const auto& e : kNames) {
    if (e.name == name) return e.kind;
  }
  throw Error(ErrorCode::UnknownFamily, std::string(name));
}

const std::vector<FamilyKind>& all_families() {
  static const std::vector<FamilyKind> v = [] {
    std::vector<FamilyKind> out;
    for (const auto& e : kNames) out.push_back(e.kind);
    return out;
  }();
  return v;
}

std::uint64_t sample_seed(std::uint64_t master, FamilyKind kind, std::size_t n, std::size_t index) noexcept {
  std::uint64_t h = splitmix64(master);
  h = hash_combine(h, hash_string(to_string(kind)));
  h = hash_combine(h, n);
  return hash_combine(h, index);
}

// Gram-Schmidt run twice, then the phases of R's diagonal are moved into Q so
// the result is Haar distributed.
ComplexMatrix random_unitary(Rng& rng, std::size_t n) {
  ComplexMatrix g = rng.ginibre(n);
  std::vector<std::vector<cplx>> cols(n, std::vector<cplx>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<cplx>& v = cols[j];
    for (std::size_t i = 0; i < n; ++i) v[i] = g(i, j);
    const double original = vec_norm(v);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        const cplx r = inner(v, cols[k]);
        for (std::size_t i = 0; i < n; ++i) v[i] -= r * cols[k][i];
      }
    }
    const double nv = vec_norm(v);
    if (nv < 1e-8 * original) throw Error(ErrorCode::InvalidMatrix, "degenerate Gaussian draw");
    for (auto& z : v) z /= nv;
  }
  // R_jj = <g_j, q_j>; multiply q_j by R_jj/|R_jj|.
  ComplexMatrix q(n);
  for (std::size_t j = 0; j < n; ++j) {
    cplx r = 0.0;
    for (std::size_t i = 0; i < n; ++i) r += std::conj(cols[j][i]) * g(i, j);
    const cplx phase = std::abs(r) > 0.0 ? r / std::abs(r) : cplx(1.0);
    for (std::size_t i = 0; i < n; ++i) q(i, j) = cols[j][i] * phase;
  }
  return q;
}

ComplexMatrix sample_matrix(FamilyKind kind, std::size_t n, Rng& rng) {
  switch (kind) {
    case FamilyKind::ginibre:
      return rng.ginibre(n);
    case FamilyKind::nilpotent:
    case FamilyKind::triangular: {
      ComplexMatrix a = rng.ginibre(n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < i; ++j) a(i, j) = 0.0;
        if (kind == FamilyKind::nilpotent) a(i, i) = 0.0;
      }
      return a;
    }
    case FamilyKind::normal: {
      const ComplexMatrix u = random_unitary(rng, n);
      std::vector<cplx> d(n);
      for (auto& z : d) z = rng.complex_normal();
      ComplexMatrix ud = u;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) ud(i, j) *= d[j];
      }
      return ud * adjoint(u);
    }
    case FamilyKind::unitary:
      return random_unitary(rng, n);
    case FamilyKind::rank_one: {
      ComplexMatrix a(n);
      std::vector<cplx> u(n), v(n);
      for (auto& z : u) z = rng.complex_normal();
      for (auto& z : v) z = rng.complex_normal();
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = u[i] * std::conj(v[j]);
      }
      return a;
    }
    case FamilyKind::hermitian:
      return hermitian_part(rng.ginibre(n));
    case FamilyKind::shifted_ginibre: {
      ComplexMatrix a = rng.ginibre(n);
      const cplx c = 2.0 * rng.complex_normal();
      for (std::size_t i = 0; i < n; ++i) a(i, i) += c;
      return a;
    }
  }
  throw Error(ErrorCode::UnknownFamily, "unhandled family");
}

std::string matrix_id(FamilyKind kind, std::size_t n, std::uint64_t seed, std::size_t index) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "%s-n%zu-s%llu-i%zu", std::string(to_string(kind)).c_str(), n,
                static_cast<unsigned long long>(seed), index);
  return buf;
}

ComplexMatrix generate_one(const MatrixFamily& family, std::size_t index) {
  if (family.n == 0) throw Error(ErrorCode::InvalidArgument, "dimension must be positive");
  Rng rng(sample_seed(family.seed, family.kind, family.n, index));
  return sample_matrix(family.kind, family.n, rng);
}

std::vector<ComplexMatrix> generate(const MatrixFamily& family) {
  std::vector<ComplexMatrix> out;
  out.reserve(family.count);
  for (std::size_t i = 0; i < family.count; ++i) out.push_back(generate_one(family, i));
  return out;
}

}  // namespace numrad
