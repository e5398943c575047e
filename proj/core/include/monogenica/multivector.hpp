#pragma once

// Dense geometric algebra over R^n with a diagonal metric.  A multivector is a
// 2^n coefficient array indexed by blade bitsets: bit i set means basis vector
// e_{i+1} participates in the blade, so E_{13} lives at index 0b101.

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace monogenica {

using BladeBits = std::uint32_t;

// Dense storage caps the generator count; 2^12 coefficients per value.
inline constexpr int kMaxDimension = 12;

// Metric signature. The first `p` basis vectors square to +1, the remaining
// `q` square to -1. G_n means Signature{n, 0}; the spacetime-style algebra
// with three +1 axes and one -1 axis is Signature{3, 1} (temporal axis last).
struct Signature {
  int p = 0;
  int q = 0;

  int dim() const { return p + q; }
  std::size_t coeff_count() const { return std::size_t{1} << dim(); }
  bool is_euclidean() const { return q == 0; }

  // Square of basis vector with 0-based index i.
  int metric_sq(int i) const { return i < p ? 1 : -1; }

  bool operator==(const Signature&) const = default;
};

Signature euclidean(int n);
Signature make_signature(int p, int q);

int blade_grade(BladeBits bits);
// Bitset for a blade given strictly increasing 1-based axes, e.g. {1,3} -> 0b101.
BladeBits blade_bits(std::initializer_list<int> axes);
std::vector<int> blade_axes(BladeBits bits);

// Sign incurred by sorting the concatenation of two canonical blades
// (transposition parity only, no metric contribution).
int reorder_sign(BladeBits a, BladeBits b);
// Full sign of E_a E_b = sign * E_{a XOR b}: reorder parity times the squares
// of the shared basis vectors.
int product_sign(const Signature& sig, BladeBits a, BladeBits b);

class Multivector {
 public:
  explicit Multivector(const Signature& sig);
  Multivector(const Signature& sig, std::vector<double> coeffs);

  static Multivector scalar(const Signature& sig, double value);
  // 1-based axis.
  static Multivector basis_vector(const Signature& sig, int axis);
  static Multivector basis_blade(const Signature& sig, BladeBits bits, double scale = 1.0);
  // Grade-1 embedding of a point of R^n.
  static Multivector vector(const Signature& sig, std::span<const double> coords);
  static Multivector pseudoscalar(const Signature& sig);
  static Multivector pseudoscalar_inverse(const Signature& sig);

  const Signature& signature() const { return sig_; }
  int dim() const { return sig_.dim(); }
  std::size_t size() const { return coeffs_.size(); }

  double operator[](std::size_t bits) const { return coeffs_[bits]; }
  double& operator[](std::size_t bits) { return coeffs_[bits]; }
  std::span<const double> coeffs() const { return coeffs_; }

  // Grade-1 coefficients as point coordinates.
  std::vector<double> vector_part() const;

  Multivector grade(int k) const;
  Multivector even() const;
  Multivector odd() const;

  double inf_norm() const;
  bool is_zero(double tol = 0.0) const;

  Multivector& operator+=(const Multivector& rhs);
  Multivector& operator-=(const Multivector& rhs);
  Multivector& operator*=(double s);
  Multivector& operator/=(double s);

  friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
  friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
  friend Multivector operator*(Multivector a, double s) { return a *= s; }
  friend Multivector operator*(double s, Multivector a) { return a *= s; }
  friend Multivector operator/(Multivector a, double s) { return a /= s; }
  friend Multivector operator-(Multivector a) { return a *= -1.0; }

  // Geometric product.
  friend Multivector operator*(const Multivector& a, const Multivector& b);

  // Exact componentwise comparison (same signature and bit-identical coefficients).
  bool operator==(const Multivector&) const = default;

  std::string str() const;

 private:
  Signature sig_;
  std::vector<double> coeffs_;
};

Multivector reverse(const Multivector& a);
// Outer product: gradewise <A_k B_l>_{k+l}.
Multivector wedge(const Multivector& a, const Multivector& b);
// Symmetric interior product: gradewise <A_k B_l>_{|k-l|}.
Multivector interior(const Multivector& a, const Multivector& b);
// Left contraction: gradewise <A_k B_l>_{l-k}.
Multivector left_contract(const Multivector& a, const Multivector& b);

// Scalar product (A, B) = <A~ B>_0, the coefficient dot product weighted by
// blade squares (plain dot product in the Euclidean case).
double mv_inner(const Multivector& a, const Multivector& b);
double mv_norm_sq(const Multivector& a);
// sqrt of mv_norm_sq; requires the square to be nonnegative.
double mv_norm(const Multivector& a);

// A I^{-1} with I the unit pseudoscalar.
Multivector dual(const Multivector& a);

// Projection onto the subalgebra of a unit blade: (B contracted onto U) U^{-1}.
// U must be a unit blade; rejects inputs whose U~ U is not a unit scalar.
Multivector project_blade(const Multivector& b, const Multivector& u);

double distance_inf(const Multivector& a, const Multivector& b);

}  // namespace monogenica
