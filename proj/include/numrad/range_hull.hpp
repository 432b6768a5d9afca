#pragma once

#include <cstddef>
#include <vector>

#include "numrad/complex_matrix.hpp"

namespace numrad {

/// g(z) = (|z1/sx|^p + |z2/sy|^p)^(1/p), a norm on the plane.
struct Gauge {
  double p = 2.0;
  double sx = 1.0;
  double sy = 1.0;

  double operator()(double x, double y) const noexcept;
};

/// Outer and inner polygonal description of the joint numerical range
/// { (<Xx,x>, <Yx,x>) : |x| = 1 } of a Hermitian pair, i.e. the numerical
/// range of X + iY.
///
/// Each sampled direction u = (cos a, sin a) stores the support value
/// h(a) = lambda_max(cos a X + sin a Y), padded by the eigensolver error, and
/// the boundary point reached by the top eigenvector. Maximizing a gauge over
/// the range yields a lower value from the boundary points and an upper value
/// from the circumscribed polygon; sectors are split until the two meet.
class RangeHull {
 public:
  struct Sample {
    double angle;
    double cos_a;
    double sin_a;
    double support;
    double px;
    double py;
    std::vector<cplx> witness;
  };

  struct Enclosure {
    double lower = 0.0;
    double upper = 0.0;
    std::vector<cplx> witness;
    double px = 0.0;
    double py = 0.0;
  };

  /// x and y must be Hermitian up to roundoff; only their Hermitian parts are used.
  RangeHull(const ComplexMatrix& x, const ComplexMatrix& y, std::size_t initial_directions = 32);

  Enclosure maximize(const Gauge& g, double rel_tol = 1e-11, std::size_t max_directions = 4096);

  std::size_t n() const noexcept { return x_.n(); }
  std::size_t direction_count() const noexcept { return samples_.size(); }
  const std::vector<Sample>& samples() const noexcept { return samples_; }

 private:
  Sample probe(double angle) const;
  /// Upper bound of the gauge over the outer polygon, per gap between
  /// consecutive samples.
  std::vector<double> gap_bounds(const Gauge& g);
  void build_polygon();
  void insert_sorted(std::vector<Sample> fresh);

  /// Vertex where the lines of samples i and j meet.
  struct Vertex {
    double x;
    double y;
    std::size_t i;
    std::size_t j;
  };

  ComplexMatrix x_;
  ComplexMatrix y_;
  double pad_ = 0.0;
  std::vector<Sample> samples_;
  std::vector<Vertex> polygon_;
  bool polygon_valid_ = false;
};

}  // namespace numrad
