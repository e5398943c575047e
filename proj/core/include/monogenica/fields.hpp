#pragma once

// Ready-made fields used by experiments and tests.

#include <span>
#include <vector>

#include "monogenica/cauchy.hpp"
#include "monogenica/dirac.hpp"
#include "monogenica/monogenic.hpp"

namespace monogenica {

// Constant field with the given value.
Field constant_field(const Multivector& value);

// x -> z_ij(x) on R^n.
Field z_field(int i, int j, int n);

// x -> p_mi(x).
Field poly_field(const MonogenicPolynomial& poly);

// x -> sum p_mi(x) a_mi up to degree K.
Field series_field(const CoefficientMap& coeffs, int n, int K);

// x -> G(x - x0) e_1, the standard boundary-singularity probe field.
Field greens_probe_field(std::vector<double> x0);

// x -> x^axis as a scalar field (1-based axis).
Field coordinate_field(int axis, int n);

// Pointwise geometric product of two fields.
Field product_field(const Field& f, const Field& g);

}  // namespace monogenica
