#pragma once

// Boundary-integral machinery: the Cauchy kernel, boundary quadratures for
// balls and boxes, reconstruction of monogenic fields from boundary traces,
// and recovery of their power-series coefficients.

#include <span>
#include <stdexcept>
#include <vector>

#include "monogenica/dirac.hpp"
#include "monogenica/monogenic.hpp"
#include "monogenica/multivector.hpp"

namespace monogenica {

// Evaluation point too close to the boundary for the quadrature to resolve.
class margin_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class RegionKind { ball, box };

// Axis-aligned region of R^n whose boundary carries the quadrature.
struct RegionSpec {
  RegionKind kind = RegionKind::ball;
  int n = 0;
  std::vector<double> center;
  double radius = 0.0;               // ball
  std::vector<double> half_widths;   // box

  // Negative inside, zero on the boundary. For boxes this is the max-metric
  // gap, which inside equals the true distance to the nearest face.
  double signed_distance(std::span<const double> x) const;
  bool contains(std::span<const double> x) const;
  // Characteristic length used for margins: ball radius or largest half width.
  double scale() const;

  void validate() const;
};

RegionSpec make_ball(int n, std::vector<double> center, double radius);
RegionSpec make_box(int n, std::vector<double> center, std::vector<double> half_widths);

// Surface area of the unit sphere in R^n: 2 pi^{n/2} / Gamma(n/2).
double sphere_area(int n);

// Cauchy kernel G(x) = x / (omega_n |x|^n), a grade-1 field on R^n minus 0.
Multivector greens(std::span<const double> x);

// Nodes, outward unit normals and positive weights for the boundary of a
// region; weights sum to the boundary measure.
struct BoundaryQuadrature {
  RegionSpec region;
  std::vector<std::vector<double>> nodes;
  std::vector<std::vector<double>> normals;
  std::vector<double> weights;

  std::size_t size() const { return nodes.size(); }
};

// Supported: balls in R^2 (uniform circle) and R^3 (uniform longitude times
// Gauss-Legendre in the cosine of the colatitude), boxes in R^2 and R^3
// (per-face tensor Gauss-Legendre). node_budget is a target, the actual
// count is the nearest grid shape.
BoundaryQuadrature make_quadrature(const RegionSpec& region, int node_budget);

// A field sampled on a boundary quadrature.
struct TraceSamples {
  BoundaryQuadrature quadrature;
  std::vector<Multivector> values;
};

TraceSamples sample_trace(const Field& f, const BoundaryQuadrature& quadrature);

// Orientation of the discrete Cauchy sum with outward normals, fixed once by
// reconstructing the constant field at the region center. +1 for every
// supported region.
inline constexpr int kCauchyOrientation = 1;
int calibrate_orientation(const BoundaryQuadrature& quadrature);

// Raw discrete Cauchy sum, no domain guards. Exposed for diagnostics such as
// exterior-point checks; reconstruction applies the guards below.
Multivector cauchy_sum(const TraceSamples& trace, std::span<const double> x, int sign);

// Reconstructs the field value at an interior point from its boundary trace.
// Throws std::domain_error outside the region and margin_error within
// margin_factor * scale of the boundary.
Multivector cauchy_reconstruct(const TraceSamples& trace, std::span<const double> x,
                               int sign = kCauchyOrientation,
                               double margin_factor = 0.1);

// Power-series coefficients about the origin from a trace on a ball centered
// at the origin: for each |mi| <= K the quadrature of (D^mi G) nu f against
// the boundary measure, scaled by the calibrated per-degree constant. Mixed
// derivatives of G use nested central differences with step
// fd_step * 10^{|mi|/2}. K <= 4.
CoefficientMap series_coefficients(const TraceSamples& trace, int K,
                                   double fd_step = 1e-5);

// Per-degree constant relating the raw derivative quadratures to series
// coefficients; calibrated once against the degree-one round trip: (-1)^k.
double series_norm_constant(int degree);

}  // namespace monogenica
