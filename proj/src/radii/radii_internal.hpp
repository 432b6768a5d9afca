#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "numrad/radii.hpp"

namespace numrad::detail {

struct Candidate {
  double value = 0.0;
  std::vector<cplx> x;
};

/// Tie-break for equal objective values.
bool lexicographically_less(const std::vector<cplx>& x, const std::vector<cplx>& y);

/// Seed for restart `index` of operation `tag` on the given operands.
std::uint64_t restart_seed(const ComplexMatrix& a, const ComplexMatrix& b, std::string_view tag, int index);

/// Local maximization of (|<Ax,x>|^p + |<Bx,x>|^p)^(1/p) from x0.
Candidate pair_ascent(const ComplexMatrix& a, const ComplexMatrix& b, double p, std::vector<cplx> x0);

/// Seeded multi-start version; `extra` starts are tried first.
Candidate pair_ascent_multistart(const ComplexMatrix& a, const ComplexMatrix& b, double p, int restarts,
                                 std::string_view tag, const std::vector<std::vector<cplx>>& extra);

/// If both operands are Hermitian up to 1e-9 relative, the size of their
/// skew parts: max |<(A - Re A)x, x>| for each operand.
std::optional<std::pair<double, double>> near_hermitian_pair(const ComplexMatrix& a, const ComplexMatrix& b);

bool is_zero(const ComplexMatrix& a);

struct InnerEval {
  double upper = 0.0;
  std::vector<cplx> witness;
};

/// Branch and bound over unit c in C^2 modulo phase, parametrized on the
/// Bloch sphere as c = (cos(t/2), e^{i s} sin(t/2)). The target is
/// sup_c f(c) where f is phase invariant and satisfies the cone property
/// sup over the cell <= f(center) / cos(r/2) with r the angular cell radius.
/// `inner` returns a certified upper value of f and a witness vector that
/// `functional` evaluates to a certified lower value of the target.
RadiusEstimate bloch_search(const std::function<InnerEval(cplx, cplx)>& inner,
                            const std::function<double(std::span<const cplx>)>& functional, double rel_tol,
                            std::size_t max_cells);

}  // namespace numrad::detail
