#pragma once

// Monogenic polynomial machinery: plane spinors, the z_ij coordinate
// functions, multi-indexed symmetrized polynomials and their power series.

#include <compare>
#include <map>
#include <span>
#include <vector>

#include "monogenica/multivector.hpp"

namespace monogenica {

// Value in the commutative subalgebra R + R*B for a unit coordinate plane B:
// re + im*B. Multiplication matches complex arithmetic since B^2 = -1.
struct PlaneSpinor {
  double re = 0.0;
  double im = 0.0;
  BladeBits plane = 0;  // grade-2 bitset of the coordinate plane
};

PlaneSpinor ps_mul(const PlaneSpinor& a, const PlaneSpinor& b);
Multivector to_multivector(const PlaneSpinor& a, const Signature& sig);

// Exponent tuple (k_2, ..., k_n): one slot per non-leading axis.
struct MultiIndex {
  std::vector<int> ks;

  int degree() const;
  int dim() const { return static_cast<int>(ks.size()) + 1; }

  auto operator<=>(const MultiIndex&) const = default;
};

// All multi-indices of total degree k over n-1 slots, leading exponent
// decreasing: (n=3, k=2) gives (2,0), (1,1), (0,2).
std::vector<MultiIndex> multi_indices(int n, int k);
// Closed form for the count: C(n-2+k, n-2).
std::size_t multi_index_count(int n, int k);

// Symmetrized product polynomial for a multi-index: 1/k! times the sum of the
// distinct orderings of the word with k_j copies of letter j.
struct MonogenicPolynomial {
  MultiIndex mi;
  double prefactor = 1.0;
  std::vector<std::vector<int>> words;  // each word lists second axes in 2..n
};

MonogenicPolynomial build_poly(const MultiIndex& mi);

// z_ij(x) = x^j - x^i B_ij, valued in G_n with n = x.size(). Axes 1-based, i != j.
Multivector z_value(int i, int j, std::span<const double> x);

// Subsurface coordinate for an orthonormal pair (v, w): (x.v) + (x.w) B with
// B = v w. v and w must be unit, orthogonal grade-1 vectors.
Multivector z_subsurface(const Multivector& v, const Multivector& w,
                         std::span<const double> x);

Multivector eval_poly(const MonogenicPolynomial& poly, std::span<const double> x);

using CoefficientMap = std::map<MultiIndex, Multivector>;

// Truncated series sum_{|mi| <= K} p_mi(x) a_mi, coefficients multiplying on
// the right. Every multi-index of degree <= K must be present.
Multivector eval_series(const CoefficientMap& coeffs, std::span<const double> x, int K);

}  // namespace monogenica
