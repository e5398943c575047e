#include "monogenica/monogenic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace monogenica {

PlaneSpinor ps_mul(const PlaneSpinor& a, const PlaneSpinor& b) {
  if (a.plane != b.plane) throw std::invalid_argument("plane spinors live in one plane");
  if (blade_grade(a.plane) != 2) throw std::invalid_argument("plane must be a 2-blade");
  return PlaneSpinor{a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re, a.plane};
}

Multivector to_multivector(const PlaneSpinor& a, const Signature& sig) {
  if (blade_grade(a.plane) != 2) throw std::invalid_argument("plane must be a 2-blade");
  Multivector out = Multivector::scalar(sig, a.re);
  out[a.plane] = a.im;
  return out;
}

int MultiIndex::degree() const { return std::accumulate(ks.begin(), ks.end(), 0); }

namespace {

void enumerate(int slots_left, int remaining, std::vector<int>& current,
               std::vector<MultiIndex>& out) {
  if (slots_left == 1) {
    current.push_back(remaining);
    out.push_back(MultiIndex{current});
    current.pop_back();
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    current.push_back(v);
    enumerate(slots_left - 1, remaining - v, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<MultiIndex> multi_indices(int n, int k) {
  if (n < 2) throw std::invalid_argument("multi-indices need n >= 2");
  if (k < 0) throw std::invalid_argument("degree must be nonnegative");
  std::vector<MultiIndex> out;
  std::vector<int> current;
  enumerate(n - 1, k, current, out);
  return out;
}

std::size_t multi_index_count(int n, int k) {
  if (n < 2) throw std::invalid_argument("multi-indices need n >= 2");
  // C(n-2+k, n-2) computed multiplicatively.
  std::size_t num = 1, den = 1;
  for (int i = 1; i <= n - 2; ++i) {
    num *= static_cast<std::size_t>(k + i);
    den *= static_cast<std::size_t>(i);
  }
  return num / den;
}

MonogenicPolynomial build_poly(const MultiIndex& mi) {
  const int n = mi.dim();
  if (n < 2) throw std::invalid_argument("polynomial needs n >= 2");
  MonogenicPolynomial poly;
  poly.mi = mi;

  std::vector<int> letters;
  for (int j = 2; j <= n; ++j) {
    const int count = mi.ks[static_cast<std::size_t>(j - 2)];
    if (count < 0) throw std::invalid_argument("exponents must be nonnegative");
    letters.insert(letters.end(), static_cast<std::size_t>(count), j);
  }

  const int k = static_cast<int>(letters.size());
  double factorial = 1.0;
  for (int i = 2; i <= k; ++i) factorial *= i;
  poly.prefactor = 1.0 / factorial;

  // letters is sorted, so next_permutation walks the distinct orderings once.
  std::sort(letters.begin(), letters.end());
  do {
    poly.words.push_back(letters);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return poly;
}

Multivector z_value(int i, int j, std::span<const double> x) {
  const int n = static_cast<int>(x.size());
  if (i < 1 || j < 1 || i > n || j > n) throw std::out_of_range("z axes out of range");
  if (i == j) throw std::invalid_argument("z needs two distinct axes");
  const Signature sig = euclidean(n);
  Multivector out = Multivector::scalar(sig, x[static_cast<std::size_t>(j - 1)]);
  // B_ij = e_i e_j; for i > j that is -E_{ji} in canonical order.
  const BladeBits bits =
      (BladeBits{1} << (i - 1)) | (BladeBits{1} << (j - 1));
  const double orientation = (i < j) ? 1.0 : -1.0;
  out[bits] = -x[static_cast<std::size_t>(i - 1)] * orientation;
  return out;
}

Multivector z_subsurface(const Multivector& v, const Multivector& w,
                         std::span<const double> x) {
  constexpr double kFrameTol = 1e-10;
  if (!(v.signature() == w.signature())) {
    throw std::invalid_argument("frame vectors must share a signature");
  }
  if (static_cast<int>(x.size()) != v.dim()) {
    throw std::invalid_argument("point dimension must match the frame");
  }
  if (distance_inf(v, v.grade(1)) > 0.0 || distance_inf(w, w.grade(1)) > 0.0) {
    throw std::invalid_argument("frame entries must be grade-1 vectors");
  }
  if (std::abs(mv_norm_sq(v) - 1.0) > kFrameTol ||
      std::abs(mv_norm_sq(w) - 1.0) > kFrameTol ||
      std::abs(mv_inner(v, w)) > kFrameTol) {
    throw std::invalid_argument("frame must be orthonormal");
  }
  const Multivector xv = Multivector::vector(v.signature(), x);
  const double along_v = mv_inner(xv, v);
  const double along_w = mv_inner(xv, w);
  return Multivector::scalar(v.signature(), along_v) + along_w * (v * w);
}

Multivector eval_poly(const MonogenicPolynomial& poly, std::span<const double> x) {
  const int n = poly.mi.dim();
  if (static_cast<int>(x.size()) != n) {
    throw std::invalid_argument("point dimension must match the polynomial");
  }
  const Signature sig = euclidean(n);

  // Cache the z_1j values once per call.
  std::vector<Multivector> z1;
  z1.reserve(static_cast<std::size_t>(n - 1));
  for (int j = 2; j <= n; ++j) z1.push_back(z_value(1, j, x));

  Multivector acc(sig);
  for (const std::vector<int>& word : poly.words) {
    Multivector term = Multivector::scalar(sig, 1.0);
    for (int j : word) term = term * z1[static_cast<std::size_t>(j - 2)];
    acc += term;
  }
  return acc * poly.prefactor;
}

Multivector eval_series(const CoefficientMap& coeffs, std::span<const double> x, int K) {
  const int n = static_cast<int>(x.size());
  if (n < 2) throw std::invalid_argument("series needs n >= 2");
  if (K < 0) throw std::invalid_argument("truncation degree must be nonnegative");
  const Signature sig = euclidean(n);
  Multivector acc(sig);
  for (int k = 0; k <= K; ++k) {
    for (const MultiIndex& mi : multi_indices(n, k)) {
      const auto it = coeffs.find(mi);
      if (it == coeffs.end()) {
        throw std::invalid_argument("series is missing a coefficient below the cutoff");
      }
      if (!(it->second.signature() == sig)) {
        throw std::invalid_argument("coefficient signature must be G_n");
      }
      acc += eval_poly(build_poly(mi), x) * it->second;
    }
  }
  return acc;
}

}  // namespace monogenica
