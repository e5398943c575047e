#include "monogenica/cauchy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "monogenica/parallel.hpp"

namespace monogenica {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSingularTol = 1e-12;

// Gauss-Legendre nodes and weights on [-1, 1] by Newton iteration on the
// Legendre recurrence.
void gauss_legendre(int m, std::vector<double>& x, std::vector<double>& w) {
  x.assign(static_cast<std::size_t>(m), 0.0);
  w.assign(static_cast<std::size_t>(m), 0.0);
  for (int i = 0; i < (m + 1) / 2; ++i) {
    double t = std::cos(kPi * (i + 0.75) / (m + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * t * p1 - j * p2) / (j + 1.0);
      }
      dp = m * (t * p0 - p1) / (t * t - 1.0);
      const double step = p0 / dp;
      t -= step;
      if (std::abs(step) < 1e-15) break;
    }
    x[static_cast<std::size_t>(i)] = -t;
    x[static_cast<std::size_t>(m - 1 - i)] = t;
    const double weight = 2.0 / ((1.0 - t * t) * dp * dp);
    w[static_cast<std::size_t>(i)] = weight;
    w[static_cast<std::size_t>(m - 1 - i)] = weight;
  }
}

std::vector<double> diff(std::span<const double> a, std::span<const double> b) {
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

void RegionSpec::validate() const {
  if (n < 2 || n > kMaxDimension) {
    throw std::invalid_argument("region dimension must be in [2, 12]");
  }
  if (static_cast<int>(center.size()) != n) {
    throw std::invalid_argument("region center must have n coordinates");
  }
  if (kind == RegionKind::ball) {
    if (!(radius > 0.0)) throw std::invalid_argument("ball radius must be positive");
  } else {
    if (static_cast<int>(half_widths.size()) != n) {
      throw std::invalid_argument("box needs n half widths");
    }
    for (double h : half_widths) {
      if (!(h > 0.0)) throw std::invalid_argument("box half widths must be positive");
    }
  }
}

double RegionSpec::signed_distance(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("point dimension must match the region");
  }
  if (kind == RegionKind::ball) {
    double sq = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = x[static_cast<std::size_t>(i)] - center[static_cast<std::size_t>(i)];
      sq += d * d;
    }
    return std::sqrt(sq) - radius;
  }
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n; ++i) {
    const double gap = std::abs(x[static_cast<std::size_t>(i)] -
                                center[static_cast<std::size_t>(i)]) -
                       half_widths[static_cast<std::size_t>(i)];
    worst = std::max(worst, gap);
  }
  return worst;
}

bool RegionSpec::contains(std::span<const double> x) const {
  return signed_distance(x) <= 0.0;
}

double RegionSpec::scale() const {
  if (kind == RegionKind::ball) return radius;
  double m = 0.0;
  for (double h : half_widths) m = std::max(m, h);
  return m;
}

RegionSpec make_ball(int n, std::vector<double> center, double radius) {
  RegionSpec spec;
  spec.kind = RegionKind::ball;
  spec.n = n;
  spec.center = std::move(center);
  spec.radius = radius;
  spec.validate();
  return spec;
}

RegionSpec make_box(int n, std::vector<double> center, std::vector<double> half_widths) {
  RegionSpec spec;
  spec.kind = RegionKind::box;
  spec.n = n;
  spec.center = std::move(center);
  spec.half_widths = std::move(half_widths);
  spec.validate();
  return spec;
}

double sphere_area(int n) {
  if (n < 1) throw std::invalid_argument("sphere area needs n >= 1");
  return 2.0 * std::pow(kPi, 0.5 * n) / std::tgamma(0.5 * n);
}

Multivector greens(std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  if (n < 2) throw std::invalid_argument("kernel needs n >= 2");
  double sq = 0.0;
  for (double c : x) sq += c * c;
  const double r = std::sqrt(sq);
  if (r < kSingularTol) throw std::domain_error("kernel evaluated at its singularity");
  const double scale = 1.0 / (sphere_area(n) * std::pow(r, n));
  Multivector out(euclidean(n));
  for (int i = 0; i < n; ++i) {
    out[BladeBits{1} << i] = x[static_cast<std::size_t>(i)] * scale;
  }
  return out;
}

namespace {

BoundaryQuadrature circle_quadrature(const RegionSpec& region, int budget) {
  const int count = std::max(budget, 8);
  BoundaryQuadrature quad;
  quad.region = region;
  quad.nodes.reserve(static_cast<std::size_t>(count));
  quad.normals.reserve(static_cast<std::size_t>(count));
  quad.weights.reserve(static_cast<std::size_t>(count));
  const double w = 2.0 * kPi * region.radius / count;
  for (int k = 0; k < count; ++k) {
    const double theta = 2.0 * kPi * k / count;
    const std::vector<double> normal{std::cos(theta), std::sin(theta)};
    quad.nodes.push_back({region.center[0] + region.radius * normal[0],
                          region.center[1] + region.radius * normal[1]});
    quad.normals.push_back(normal);
    quad.weights.push_back(w);
  }
  return quad;
}

BoundaryQuadrature sphere_quadrature(const RegionSpec& region, int budget) {
  // nodes = n_theta * n_phi with n_theta = 2 n_phi, so n_phi = sqrt(budget/2).
  const int n_phi = std::max(4, static_cast<int>(std::lround(std::sqrt(budget / 2.0))));
  const int n_theta = 2 * n_phi;
  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(n_phi, gl_nodes, gl_weights);

  BoundaryQuadrature quad;
  quad.region = region;
  const double r = region.radius;
  const double theta_weight = 2.0 * kPi / n_theta;
  for (int a = 0; a < n_phi; ++a) {
    const double t = gl_nodes[static_cast<std::size_t>(a)];  // cos(colatitude)
    const double s = std::sqrt(std::max(0.0, 1.0 - t * t));
    const double w = r * r * gl_weights[static_cast<std::size_t>(a)] * theta_weight;
    for (int b = 0; b < n_theta; ++b) {
      const double theta = 2.0 * kPi * b / n_theta;
      const std::vector<double> normal{s * std::cos(theta), s * std::sin(theta), t};
      quad.nodes.push_back({region.center[0] + r * normal[0],
                            region.center[1] + r * normal[1],
                            region.center[2] + r * normal[2]});
      quad.normals.push_back(normal);
      quad.weights.push_back(w);
    }
  }
  return quad;
}

BoundaryQuadrature box_quadrature(const RegionSpec& region, int budget) {
  const int n = region.n;
  const int faces = 2 * n;
  BoundaryQuadrature quad;
  quad.region = region;

  // Per-face tensor rule with the same point count along each tangent axis.
  const int tangent_axes = n - 1;
  int m = 2;
  if (tangent_axes == 1) {
    m = std::max(2, budget / faces);
  } else {
    m = std::max(2, static_cast<int>(std::lround(std::sqrt(
                        static_cast<double>(budget) / faces))));
  }
  std::vector<double> gl_nodes, gl_weights;
  gauss_legendre(m, gl_nodes, gl_weights);

  for (int axis = 0; axis < n; ++axis) {
    for (int side = -1; side <= 1; side += 2) {
      std::vector<int> tangents;
      for (int i = 0; i < n; ++i) {
        if (i != axis) tangents.push_back(i);
      }
      std::vector<double> normal(static_cast<std::size_t>(n), 0.0);
      normal[static_cast<std::size_t>(axis)] = side;

      // Walk the tensor grid over the tangent axes.
      std::vector<int> idx(tangents.size(), 0);
      while (true) {
        std::vector<double> node = region.center;
        node[static_cast<std::size_t>(axis)] +=
            side * region.half_widths[static_cast<std::size_t>(axis)];
        double w = 1.0;
        for (std::size_t t = 0; t < tangents.size(); ++t) {
          const int ax = tangents[t];
          const double half = region.half_widths[static_cast<std::size_t>(ax)];
          node[static_cast<std::size_t>(ax)] +=
              half * gl_nodes[static_cast<std::size_t>(idx[t])];
          w *= half * gl_weights[static_cast<std::size_t>(idx[t])];
        }
        quad.nodes.push_back(std::move(node));
        quad.normals.push_back(normal);
        quad.weights.push_back(w);

        std::size_t t = 0;
        for (; t < idx.size(); ++t) {
          if (++idx[t] < m) break;
          idx[t] = 0;
        }
        if (t == idx.size()) break;
      }
    }
  }
  return quad;
}

}  // namespace

BoundaryQuadrature make_quadrature(const RegionSpec& region, int node_budget) {
  region.validate();
  if (node_budget < 1) throw std::invalid_argument("node budget must be positive");
  if (region.kind == RegionKind::ball && region.n == 2) {
    if (node_budget < 8) throw std::invalid_argument("circle rule needs at least 8 nodes");
    return circle_quadrature(region, node_budget);
  }
  if (region.kind == RegionKind::ball && region.n == 3) {
    if (node_budget < 32) throw std::invalid_argument("sphere rule needs at least 32 nodes");
    return sphere_quadrature(region, node_budget);
  }
  if (region.kind == RegionKind::box && (region.n == 2 || region.n == 3)) {
    const int min_budget = 2 * region.n * (region.n == 2 ? 2 : 4);
    if (node_budget < min_budget) {
      throw std::invalid_argument("box rule needs at least two points per face axis");
    }
    return box_quadrature(region, node_budget);
  }
  throw std::invalid_argument("unsupported region kind/dimension for quadrature");
}

TraceSamples sample_trace(const Field& f, const BoundaryQuadrature& quadrature) {
  if (!f.eval) throw std::invalid_argument("field has no evaluator");
  if (f.n != quadrature.region.n) {
    throw std::invalid_argument("field dimension must match the quadrature");
  }
  TraceSamples trace;
  trace.quadrature = quadrature;
  trace.values.assign(quadrature.size(), Multivector(euclidean(f.n)));
  parallel_for(quadrature.size(), [&](std::size_t k) {
    trace.values[k] = f.eval(quadrature.nodes[k]);
  });
  return trace;
}

Multivector cauchy_sum(const TraceSamples& trace, std::span<const double> x, int sign) {
  const BoundaryQuadrature& quad = trace.quadrature;
  if (trace.values.size() != quad.size() || quad.size() == 0) {
    throw std::invalid_argument("trace and quadrature sizes disagree");
  }
  if (sign != 1 && sign != -1) throw std::invalid_argument("orientation must be +1 or -1");
  const Signature sig = euclidean(quad.region.n);
  const std::vector<double> probe(x.begin(), x.end());

  std::vector<Multivector> terms(quad.size(), Multivector(sig));
  parallel_for(quad.size(), [&](std::size_t k) {
    const Multivector kernel = greens(diff(quad.nodes[k], probe));
    const Multivector nu = Multivector::vector(sig, quad.normals[k]);
    terms[k] = (kernel * nu * trace.values[k]) * (sign * quad.weights[k]);
  });
  return pairwise_sum(std::span<const Multivector>(terms));
}

int calibrate_orientation(const BoundaryQuadrature& quadrature) {
  Field one;
  one.n = quadrature.region.n;
  const Signature sig = euclidean(one.n);
  one.eval = [sig](std::span<const double>) { return Multivector::scalar(sig, 1.0); };
  const TraceSamples trace = sample_trace(one, quadrature);
  const Multivector recon = cauchy_sum(trace, quadrature.region.center, 1);
  const double value = recon[0];
  if (std::abs(std::abs(value) - 1.0) > 0.1) {
    throw std::runtime_error("orientation calibration did not reproduce the constant");
  }
  return value > 0.0 ? 1 : -1;
}

Multivector cauchy_reconstruct(const TraceSamples& trace, std::span<const double> x,
                               int sign, double margin_factor) {
  const RegionSpec& region = trace.quadrature.region;
  if (!(margin_factor >= 0.0)) throw std::invalid_argument("margin factor must be >= 0");
  const double sd = region.signed_distance(x);
  if (sd > 0.0) throw std::domain_error("evaluation point lies outside the region");
  if (-sd < margin_factor * region.scale()) {
    throw margin_error("evaluation point is inside the boundary margin");
  }
  return cauchy_sum(trace, x, sign);
}

double series_norm_constant(int degree) {
  if (degree < 0) throw std::invalid_argument("degree must be nonnegative");
  return (degree % 2 == 0) ? 1.0 : -1.0;
}

namespace {

// D^mi G by nested central differences, one step size per total order.
Multivector kernel_derivative(const std::vector<int>& exponents,
                              std::vector<double>& point, double h) {
  int slot = -1;
  for (std::size_t j = 0; j < exponents.size(); ++j) {
    if (exponents[j] > 0) {
      slot = static_cast<int>(j);
      break;
    }
  }
  if (slot == -1) return greens(point);

  std::vector<int> rest = exponents;
  --rest[static_cast<std::size_t>(slot)];
  // Exponent slot j differentiates along axis j+2, coordinate index j+1.
  const std::size_t coord = static_cast<std::size_t>(slot) + 1;
  const double saved = point[coord];
  point[coord] = saved + h;
  const Multivector plus = kernel_derivative(rest, point, h);
  point[coord] = saved - h;
  const Multivector minus = kernel_derivative(rest, point, h);
  point[coord] = saved;
  return (plus - minus) * (1.0 / (2.0 * h));
}

}  // namespace

CoefficientMap series_coefficients(const TraceSamples& trace, int K, double fd_step) {
  const BoundaryQuadrature& quad = trace.quadrature;
  const RegionSpec& region = quad.region;
  if (region.kind != RegionKind::ball) {
    throw std::invalid_argument("series recovery needs a ball region");
  }
  for (double c : region.center) {
    if (std::abs(c) > kSingularTol) {
      throw std::invalid_argument("series recovery needs the ball centered at the origin");
    }
  }
  if (K < 0 || K > 4) {
    throw std::invalid_argument("series degree must be in [0, 4]");
  }
  if (!(fd_step > 0.0)) throw std::invalid_argument("fd step must be positive");
  if (trace.values.size() != quad.size() || quad.size() == 0) {
    throw std::invalid_argument("trace and quadrature sizes disagree");
  }

  const int n = region.n;
  const Signature sig = euclidean(n);
  CoefficientMap out;
  for (int k = 0; k <= K; ++k) {
    const double h = fd_step * std::pow(10.0, 0.5 * k);
    const double norm = series_norm_constant(k);
    for (const MultiIndex& mi : multi_indices(n, k)) {
      std::vector<Multivector> terms(quad.size(), Multivector(sig));
      parallel_for(quad.size(), [&](std::size_t node) {
        std::vector<double> point = quad.nodes[node];
        const Multivector dG = kernel_derivative(mi.ks, point, h);
        const Multivector nu = Multivector::vector(sig, quad.normals[node]);
        terms[node] = (dG * nu * trace.values[node]) * quad.weights[node];
      });
      out.emplace(mi, pairwise_sum(std::span<const Multivector>(terms)) * norm);
    }
  }
  return out;
}

}  // namespace monogenica
