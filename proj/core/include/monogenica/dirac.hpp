#pragma once

// Finite-difference Dirac operator on multivector fields over flat R^n with
// orthonormal coordinates (so the frame is its own reciprocal).

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "monogenica/multivector.hpp"

namespace monogenica {

// A multivector field on R^n. `domain` is optional; when set, every stencil
// point of a finite-difference evaluation must satisfy it.
struct Field {
  int n = 0;
  std::function<Multivector(std::span<const double>)> eval;
  std::function<bool(std::span<const double>)> domain;

  Multivector operator()(std::span<const double> x) const { return eval(x); }
};

// Central-difference Dirac sum e_i d_i f (geometric product on the left).
Multivector dirac(const Field& f, std::span<const double> x, double h);

// Residual of the Cauchy-Riemann pair for scalar components (f0, f2) in the
// coordinate plane (1,2): (d1 f0 - d2 f2, d2 f0 + d1 f2).
using ScalarField = std::function<double(std::span<const double>)>;
std::pair<double, double> cr_residual(const ScalarField& f0, const ScalarField& f2,
                                      std::span<const double> x, double h);

// Max norm of the Dirac residual over a point set.
double monogenicity_report(const Field& f,
                           std::span<const std::vector<double>> points, double h);

}  // namespace monogenica
