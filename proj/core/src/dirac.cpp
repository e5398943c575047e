#include "monogenica/dirac.hpp"

#include <stdexcept>

namespace monogenica {

namespace {

void check_stencil_point(const Field& f, std::span<const double> x) {
  if (f.domain && !f.domain(x)) {
    throw std::domain_error("finite-difference stencil leaves the declared domain");
  }
}

}  // namespace

Multivector dirac(const Field& f, std::span<const double> x, double h) {
  if (!f.eval) throw std::invalid_argument("field has no evaluator");
  if (f.n < 1) throw std::invalid_argument("field dimension must be positive");
  if (static_cast<int>(x.size()) != f.n) {
    throw std::invalid_argument("point dimension must match the field");
  }
  if (!(h > 0.0)) throw std::invalid_argument("step must be positive");

  std::vector<double> probe(x.begin(), x.end());
  Multivector acc(euclidean(f.n));
  const double inv = 1.0 / (2.0 * h);
  for (int i = 0; i < f.n; ++i) {
    const double xi = probe[static_cast<std::size_t>(i)];
    probe[static_cast<std::size_t>(i)] = xi + h;
    check_stencil_point(f, probe);
    const Multivector fp = f.eval(probe);
    probe[static_cast<std::size_t>(i)] = xi - h;
    check_stencil_point(f, probe);
    const Multivector fm = f.eval(probe);
    probe[static_cast<std::size_t>(i)] = xi;
    acc += Multivector::basis_vector(fp.signature(), i + 1) * ((fp - fm) * inv);
  }
  return acc;
}

std::pair<double, double> cr_residual(const ScalarField& f0, const ScalarField& f2,
                                      std::span<const double> x, double h) {
  if (!f0 || !f2) throw std::invalid_argument("both components are required");
  if (x.size() < 2) throw std::invalid_argument("point needs at least two coordinates");
  if (!(h > 0.0)) throw std::invalid_argument("step must be positive");

  std::vector<double> probe(x.begin(), x.end());
  const auto partial = [&](const ScalarField& g, int axis) {
    const double xi = probe[static_cast<std::size_t>(axis)];
    probe[static_cast<std::size_t>(axis)] = xi + h;
    const double gp = g(probe);
    probe[static_cast<std::size_t>(axis)] = xi - h;
    const double gm = g(probe);
    probe[static_cast<std::size_t>(axis)] = xi;
    return (gp - gm) / (2.0 * h);
  };

  const double r1 = partial(f0, 0) - partial(f2, 1);
  const double r2 = partial(f0, 1) + partial(f2, 0);
  return {r1, r2};
}

double monogenicity_report(const Field& f,
                           std::span<const std::vector<double>> points, double h) {
  if (points.empty()) throw std::invalid_argument("point set must be nonempty");
  double worst = 0.0;
  for (const std::vector<double>& x : points) {
    const double r = mv_norm(dirac(f, x, h));
    if (r > worst) worst = r;
  }
  return worst;
}

}  // namespace monogenica
