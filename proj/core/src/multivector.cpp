#include "monogenica/multivector.hpp"

#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace monogenica {

namespace {

void require_same_signature(const Multivector& a, const Multivector& b) {
  if (!(a.signature() == b.signature())) {
    throw std::invalid_argument("multivector signatures differ");
  }
}

int reverse_sign(int grade) {
  // (-1)^{k(k-1)/2}, period 4 in k.
  const int m = grade & 3;
  return (m == 2 || m == 3) ? -1 : 1;
}

}  // namespace

Signature make_signature(int p, int q) {
  if (p < 0 || q < 0) throw std::invalid_argument("signature counts must be nonnegative");
  const int n = p + q;
  if (n < 1) throw std::invalid_argument("algebra needs at least one generator");
  if (n > kMaxDimension) {
    throw std::invalid_argument("dense representation caps the dimension at 12");
  }
  return Signature{p, q};
}

Signature euclidean(int n) { return make_signature(n, 0); }

int blade_grade(BladeBits bits) { return std::popcount(bits); }

BladeBits blade_bits(std::initializer_list<int> axes) {
  BladeBits bits = 0;
  int prev = 0;
  for (int axis : axes) {
    if (axis <= prev || axis > kMaxDimension) {
      throw std::invalid_argument("blade axes must be strictly increasing, 1-based");
    }
    bits |= BladeBits{1} << (axis - 1);
    prev = axis;
  }
  return bits;
}

std::vector<int> blade_axes(BladeBits bits) {
  std::vector<int> axes;
  while (bits != 0) {
    const int i = std::countr_zero(bits);
    axes.push_back(i + 1);
    bits &= bits - 1;
  }
  return axes;
}

int reorder_sign(BladeBits a, BladeBits b) {
  // Count transpositions needed to merge the two sorted axis lists.
  int swaps = 0;
  BladeBits t = a >> 1;
  while (t != 0) {
    swaps += std::popcount(t & b);
    t >>= 1;
  }
  return (swaps & 1) ? -1 : 1;
}

int product_sign(const Signature& sig, BladeBits a, BladeBits b) {
  int sign = reorder_sign(a, b);
  BladeBits shared = a & b;
  while (shared != 0) {
    sign *= sig.metric_sq(std::countr_zero(shared));
    shared &= shared - 1;
  }
  return sign;
}

Multivector::Multivector(const Signature& sig)
    : sig_(make_signature(sig.p, sig.q)), coeffs_(sig_.coeff_count(), 0.0) {}

Multivector::Multivector(const Signature& sig, std::vector<double> coeffs)
    : sig_(make_signature(sig.p, sig.q)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != sig_.coeff_count()) {
    throw std::invalid_argument("coefficient count must be 2^n");
  }
}

Multivector Multivector::scalar(const Signature& sig, double value) {
  Multivector a(sig);
  a[0] = value;
  return a;
}

Multivector Multivector::basis_vector(const Signature& sig, int axis) {
  if (axis < 1 || axis > sig.dim()) throw std::out_of_range("basis axis out of range");
  Multivector a(sig);
  a[BladeBits{1} << (axis - 1)] = 1.0;
  return a;
}

Multivector Multivector::basis_blade(const Signature& sig, BladeBits bits, double scale) {
  Multivector a(sig);
  if (bits >= a.size()) throw std::out_of_range("blade bits out of range");
  a[bits] = scale;
  return a;
}

Multivector Multivector::vector(const Signature& sig, std::span<const double> coords) {
  if (static_cast<int>(coords.size()) != sig.dim()) {
    throw std::invalid_argument("coordinate count must match the dimension");
  }
  Multivector a(sig);
  for (int i = 0; i < sig.dim(); ++i) a[BladeBits{1} << i] = coords[i];
  return a;
}

Multivector Multivector::pseudoscalar(const Signature& sig) {
  return basis_blade(sig, static_cast<BladeBits>(sig.coeff_count() - 1));
}

Multivector Multivector::pseudoscalar_inverse(const Signature& sig) {
  // I~ I is the product of all generator squares, so I^{-1} = I~ / (I~ I).
  const int n = sig.dim();
  int metric = (sig.q % 2 == 0) ? 1 : -1;
  return basis_blade(sig, static_cast<BladeBits>(sig.coeff_count() - 1),
                     reverse_sign(n) * metric);
}

std::vector<double> Multivector::vector_part() const {
  std::vector<double> coords(static_cast<std::size_t>(dim()));
  for (int i = 0; i < dim(); ++i) coords[i] = coeffs_[BladeBits{1} << i];
  return coords;
}

Multivector Multivector::grade(int k) const {
  if (k < 0 || k > dim()) throw std::out_of_range("grade out of range");
  Multivector out(sig_);
  for (std::size_t bits = 0; bits < coeffs_.size(); ++bits) {
    if (blade_grade(static_cast<BladeBits>(bits)) == k) out[bits] = coeffs_[bits];
  }
  return out;
}

Multivector Multivector::even() const {
  Multivector out(sig_);
  for (std::size_t bits = 0; bits < coeffs_.size(); ++bits) {
    if ((blade_grade(static_cast<BladeBits>(bits)) & 1) == 0) out[bits] = coeffs_[bits];
  }
  return out;
}

Multivector Multivector::odd() const {
  Multivector out(sig_);
  for (std::size_t bits = 0; bits < coeffs_.size(); ++bits) {
    if ((blade_grade(static_cast<BladeBits>(bits)) & 1) == 1) out[bits] = coeffs_[bits];
  }
  return out;
}

double Multivector::inf_norm() const {
  double m = 0.0;
  for (double c : coeffs_) m = std::max(m, std::abs(c));
  return m;
}

bool Multivector::is_zero(double tol) const { return inf_norm() <= tol; }

Multivector& Multivector::operator+=(const Multivector& rhs) {
  require_same_signature(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator-=(const Multivector& rhs) {
  require_same_signature(*this, rhs);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

Multivector& Multivector::operator*=(double s) {
  for (double& c : coeffs_) c *= s;
  return *this;
}

Multivector& Multivector::operator/=(double s) {
  for (double& c : coeffs_) c /= s;
  return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const Signature& sig = a.signature();
  const std::size_t m = a.size();
  Multivector out(sig);
  for (std::size_t i = 0; i < m; ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const BladeBits bi = static_cast<BladeBits>(i);
    for (std::size_t j = 0; j < m; ++j) {
      const double bj = b[j];
      if (bj == 0.0) continue;
      const BladeBits bjj = static_cast<BladeBits>(j);
      out[i ^ j] += product_sign(sig, bi, bjj) * ai * bj;
    }
  }
  return out;
}

std::string Multivector::str() const {
  std::string out;
  char buf[64];
  for (std::size_t bits = 0; bits < coeffs_.size(); ++bits) {
    const double c = coeffs_[bits];
    if (c == 0.0) continue;
    std::snprintf(buf, sizeof(buf), "%.12g", c);
    if (!out.empty()) out += " + ";
    out += buf;
    if (bits != 0) {
      out += " e";
      const std::vector<int> axes = blade_axes(static_cast<BladeBits>(bits));
      const bool wide = dim() > 9;
      for (std::size_t k = 0; k < axes.size(); ++k) {
        if (k > 0 && wide) out += "_";
        out += std::to_string(axes[k]);
      }
    }
  }
  return out.empty() ? "0" : out;
}

Multivector reverse(const Multivector& a) {
  Multivector out(a.signature());
  for (std::size_t bits = 0; bits < a.size(); ++bits) {
    out[bits] = reverse_sign(blade_grade(static_cast<BladeBits>(bits))) * a[bits];
  }
  return out;
}

namespace {

// Shared skeleton for the graded products: keep the blade-pair term when the
// product grade matches the rule for (grade a, grade b).
template <class Keep>
Multivector graded_product(const Multivector& a, const Multivector& b, Keep keep) {
  require_same_signature(a, b);
  const Signature& sig = a.signature();
  Multivector out(sig);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double ai = a[i];
    if (ai == 0.0) continue;
    const BladeBits bi = static_cast<BladeBits>(i);
    const int gi = blade_grade(bi);
    for (std::size_t j = 0; j < b.size(); ++j) {
      const double bj = b[j];
      if (bj == 0.0) continue;
      const BladeBits bjj = static_cast<BladeBits>(j);
      const int gj = blade_grade(bjj);
      if (!keep(gi, gj, blade_grade(bi ^ bjj))) continue;
      out[i ^ j] += product_sign(sig, bi, bjj) * ai * bj;
    }
  }
  return out;
}

}  // namespace

Multivector wedge(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int gi, int gj, int gk) { return gk == gi + gj; });
}

Multivector interior(const Multivector& a, const Multivector& b) {
  return graded_product(a, b,
                        [](int gi, int gj, int gk) { return gk == std::abs(gi - gj); });
}

Multivector left_contract(const Multivector& a, const Multivector& b) {
  return graded_product(a, b, [](int gi, int gj, int gk) { return gk == gj - gi; });
}

double mv_inner(const Multivector& a, const Multivector& b) {
  require_same_signature(a, b);
  const Signature& sig = a.signature();
  double acc = 0.0;
  for (std::size_t bits = 0; bits < a.size(); ++bits) {
    double term = a[bits] * b[bits];
    if (term == 0.0) continue;
    BladeBits shared = static_cast<BladeBits>(bits);
    int metric = 1;
    while (shared != 0) {
      metric *= sig.metric_sq(std::countr_zero(shared));
      shared &= shared - 1;
    }
    acc += metric * term;
  }
  return acc;
}

double mv_norm_sq(const Multivector& a) { return mv_inner(a, a); }

double mv_norm(const Multivector& a) {
  const double sq = mv_norm_sq(a);
  if (sq < 0.0) throw std::domain_error("norm square is negative in this signature");
  return std::sqrt(sq);
}

Multivector dual(const Multivector& a) {
  return a * Multivector::pseudoscalar_inverse(a.signature());
}

Multivector project_blade(const Multivector& b, const Multivector& u) {
  require_same_signature(b, u);
  constexpr double kBladeTol = 1e-10;
  Multivector utu = reverse(u) * u;
  const double s = utu[0];
  utu[0] = 0.0;
  if (!utu.is_zero(kBladeTol)) {
    throw std::invalid_argument("projection target must be a blade (U~ U not scalar)");
  }
  if (std::abs(std::abs(s) - 1.0) > kBladeTol) {
    throw std::invalid_argument("projection target must be a unit blade");
  }
  const Multivector u_inv = reverse(u) / s;
  return left_contract(b, u) * u_inv;
}

double distance_inf(const Multivector& a, const Multivector& b) {
  return (a - b).inf_norm();
}

}  // namespace monogenica
