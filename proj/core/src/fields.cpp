#include "monogenica/fields.hpp"

#include <stdexcept>

namespace monogenica {

Field constant_field(const Multivector& value) {
  Field f;
  f.n = value.dim();
  f.eval = [value](std::span<const double>) { return value; };
  return f;
}

Field z_field(int i, int j, int n) {
  if (i < 1 || j < 1 || i > n || j > n || i == j) {
    throw std::invalid_argument("z field needs distinct axes in [1, n]");
  }
  Field f;
  f.n = n;
  f.eval = [i, j](std::span<const double> x) { return z_value(i, j, x); };
  return f;
}

Field poly_field(const MonogenicPolynomial& poly) {
  Field f;
  f.n = poly.mi.dim();
  f.eval = [poly](std::span<const double> x) { return eval_poly(poly, x); };
  return f;
}

Field series_field(const CoefficientMap& coeffs, int n, int K) {
  Field f;
  f.n = n;
  f.eval = [coeffs, K](std::span<const double> x) { return eval_series(coeffs, x, K); };
  return f;
}

Field greens_probe_field(std::vector<double> x0) {
  const int n = static_cast<int>(x0.size());
  if (n < 2) throw std::invalid_argument("probe field needs n >= 2");
  Field f;
  f.n = n;
  const Multivector e1 = Multivector::basis_vector(euclidean(n), 1);
  f.eval = [x0 = std::move(x0), e1](std::span<const double> x) {
    std::vector<double> shifted(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) shifted[i] = x[i] - x0[i];
    return greens(shifted) * e1;
  };
  return f;
}

Field coordinate_field(int axis, int n) {
  if (axis < 1 || axis > n) throw std::invalid_argument("axis out of range");
  Field f;
  f.n = n;
  const Signature sig = euclidean(n);
  f.eval = [axis, sig](std::span<const double> x) {
    return Multivector::scalar(sig, x[static_cast<std::size_t>(axis - 1)]);
  };
  return f;
}

Field product_field(const Field& f, const Field& g) {
  if (f.n != g.n) throw std::invalid_argument("field dimensions differ");
  Field out;
  out.n = f.n;
  out.eval = [fe = f.eval, ge = g.eval](std::span<const double> x) {
    return fe(x) * ge(x);
  };
  return out;
}

}  // namespace monogenica
