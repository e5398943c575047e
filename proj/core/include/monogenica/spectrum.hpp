#pragma once

// Character tables for the evaluation functionals of the z coordinate
// functions: recovery of the evaluation point, consistency diagnostics, and
// the boundary-singularity probe.

#include <span>
#include <vector>

#include "monogenica/cauchy.hpp"
#include "monogenica/dirac.hpp"
#include "monogenica/multivector.hpp"

namespace monogenica {

// For a functional d with d[z_ij] = alpha_ij + beta_ij B_ij, stores the two
// real tables over all ordered pairs i != j. Diagonal entries are unused.
struct CharacterTable {
  int n = 0;
  std::vector<double> alpha;  // row-major n x n
  std::vector<double> beta;

  double alpha_at(int i, int j) const;  // 1-based, i != j
  double beta_at(int i, int j) const;
  void set_alpha(int i, int j, double v);
  void set_beta(int i, int j, double v);

  // alpha_ij + beta_ij B_ij as a multivector of G_n.
  Multivector entry(int i, int j) const;
};

CharacterTable make_character_table(int n);

// Table of the evaluation functional at x: alpha_ij = x^j, beta_ij = -x^i.
CharacterTable character_from_point(std::span<const double> x);

// Max violation of the structural relations a table of an evaluation
// functional must satisfy: alpha_ij = -beta_ji, alpha independent of its
// first index, beta independent of its second index.
double consistency_residual(const CharacterTable& table);

// Evaluation point of a consistent table: x^i is the mean of the admissible
// determinations {alpha_ji} and {-beta_ij}. Exact tables round-trip exactly.
// Throws std::invalid_argument when the residual exceeds tol.
std::vector<double> recover_point(const CharacterTable& table, double tol = 1e-9);

// Value of f under the functional the table represents: f(recover_point).
Multivector gelfand_eval(const Field& f, const CharacterTable& table,
                         double tol = 1e-9);

// Sup over the sample grid of |G(x - x0) e_1| for an exterior source x0.
// Grows monotonically as x0 approaches the boundary.
double singular_probe(const RegionSpec& region, std::span<const double> x0,
                      std::span<const std::vector<double>> samples);

}  // namespace monogenica
