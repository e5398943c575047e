#include "monogenica/dirac.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

#include <doctest.h>

#include "monogenica/fields.hpp"
#include "test_support.hpp"

using namespace monogenica;
using monogenica::testing::random_multivector;
using monogenica::testing::random_point_in_ball;

TEST_CASE("dirac of a coordinate field is the matching frame vector") {
  const Field f = coordinate_field(1, 3);
  const Signature g3 = euclidean(3);
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> x = random_point_in_ball(3, 1.0, rng);
    const Multivector d = dirac(f, x, 1e-4);
    CHECK(distance_inf(d, Multivector::basis_vector(g3, 1)) < 1e-10);
  }
  const std::vector<std::vector<double>> pts{{0.1, 0.2, 0.3}, {-0.4, 0.0, 0.2}};
  CHECK(monogenicity_report(f, pts, 1e-4) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("dirac annihilates z fields") {
  std::mt19937_64 rng(42);
  for (int n = 2; n <= 4; ++n) {
    const Field f = z_field(1, n, n);
    for (int trial = 0; trial < 10; ++trial) {
      const std::vector<double> x = random_point_in_ball(n, 1.0, rng);
      CHECK(mv_norm(dirac(f, x, 1e-4)) < 1e-10);
    }
  }
}

TEST_CASE("dirac annihilates the kernel probe away from its source") {
  const Field f = greens_probe_field({2.0, 0.0, 0.0});
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const std::vector<double> x = random_point_in_ball(3, 1.0, rng);
    CHECK(mv_norm(dirac(f, x, 1e-4)) < 1e-6);
  }
}

TEST_CASE("cauchy-riemann residual fixtures") {
  const ScalarField f0 = [](std::span<const double> x) { return x[0]; };
  const ScalarField f2_bad = [](std::span<const double> x) { return -x[1]; };
  const std::vector<double> x{0.3, -0.2};
  const auto [r1, r2] = cr_residual(f0, f2_bad, x, 1e-5);
  CHECK(r1 == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(std::abs(r2) < 1e-9);

  // Components of z_12^2 satisfy the equations.
  const ScalarField g0 = [](std::span<const double> x_) {
    return x_[1] * x_[1] - x_[0] * x_[0];
  };
  const ScalarField g2 = [](std::span<const double> x_) { return -2.0 * x_[0] * x_[1]; };
  const auto [s1, s2] = cr_residual(g0, g2, x, 1e-5);
  CHECK(std::abs(s1) < 1e-9);
  CHECK(std::abs(s2) < 1e-9);
}

TEST_CASE("plane spinor fields in one plane stay closed under products") {
  // f = z_12 and g = z_12^2 are monogenic; so is their pointwise product.
  const Field f = z_field(1, 2, 3);
  const Field g = product_field(f, f);
  const Field fg = product_field(f, g);
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const std::vector<double> x = random_point_in_ball(3, 1.0, rng);
    CHECK(mv_norm(dirac(fg, x, 1e-4)) < 1e-6);
  }
}

TEST_CASE("dirac maps a grade-k field into grades k-1 and k+1") {
  const Signature g4 = euclidean(4);
  std::mt19937_64 rng(45);
  for (int k = 0; k <= 4; ++k) {
    const Multivector a = random_multivector(g4, rng).grade(k);
    Field f;
    f.n = 4;
    f.eval = [a](std::span<const double> x) { return a * std::sin(x[0] + 0.5 * x[2]); };
    const std::vector<double> x{0.2, -0.1, 0.4, 0.3};
    const Multivector d = dirac(f, x, 1e-4);
    for (int g = 0; g <= 4; ++g) {
      if (g == k - 1 || g == k + 1) continue;
      CHECK(d.grade(g).is_zero());
    }
  }
}

TEST_CASE("iterated dirac matches the laplacian") {
  // Harmonic scalar: x1^2 - x2^2 -> zero; x1^2 -> the constant 2.
  const Signature g3 = euclidean(3);
  const auto wrap = [&](Field inner) {
    Field outer;
    outer.n = 3;
    outer.eval = [inner](std::span<const double> x) { return dirac(inner, x, 1e-4); };
    return outer;
  };

  Field harmonic;
  harmonic.n = 3;
  harmonic.eval = [g3](std::span<const double> x) {
    return Multivector::scalar(g3, x[0] * x[0] - x[1] * x[1]);
  };
  Field bare;
  bare.n = 3;
  bare.eval = [g3](std::span<const double> x) {
    return Multivector::scalar(g3, x[0] * x[0]);
  };

  const std::vector<double> x{0.25, -0.4, 0.1};
  CHECK(mv_norm(dirac(wrap(harmonic), x, 1e-4)) < 1e-4);
  const Multivector lap = dirac(wrap(bare), x, 1e-4);
  CHECK(distance_inf(lap, Multivector::scalar(g3, 2.0)) < 1e-4);
}

TEST_CASE("central differences converge at second order") {
  const Signature g3 = euclidean(3);
  std::mt19937_64 rng(46);
  const Multivector a = random_multivector(g3, rng);
  Field f;
  f.n = 3;
  f.eval = [a](std::span<const double> x) { return a * std::sin(x[0] + 2.0 * x[1]); };

  const std::vector<double> x{0.3, 0.1, -0.2};
  const double c = std::cos(x[0] + 2.0 * x[1]);
  const Multivector e1 = Multivector::basis_vector(g3, 1);
  const Multivector e2 = Multivector::basis_vector(g3, 2);
  const Multivector exact = e1 * (a * c) + e2 * (a * (2.0 * c));

  const double e_coarse = distance_inf(dirac(f, x, 1e-2), exact);
  const double e_fine = distance_inf(dirac(f, x, 5e-3), exact);
  const double ratio = e_coarse / e_fine;
  CHECK(ratio > 3.0);
  CHECK(ratio < 5.0);
}

TEST_CASE("stencil domain guard") {
  Field f = coordinate_field(1, 3);
  f.domain = [](std::span<const double> x) {
    double sq = 0.0;
    for (double c : x) sq += c * c;
    return sq <= 1.0;
  };
  const std::vector<double> deep{0.1, 0.2, 0.0};
  CHECK_NOTHROW(dirac(f, deep, 1e-4));
  const std::vector<double> edge{0.9999999, 0.0, 0.0};
  CHECK_THROWS_AS(dirac(f, edge, 1e-4), std::domain_error);
}

TEST_CASE("dirac input validation") {
  const Field f = coordinate_field(1, 3);
  const std::vector<double> x{0.1, 0.2, 0.3};
  CHECK_THROWS_AS(dirac(f, x, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(dirac(f, x, -1e-4), std::invalid_argument);
  const std::vector<double> wrong{0.1, 0.2};
  CHECK_THROWS_AS(dirac(f, wrong, 1e-4), std::invalid_argument);
  CHECK_THROWS_AS(dirac(Field{}, x, 1e-4), std::invalid_argument);
  const std::vector<std::vector<double>> empty;
  CHECK_THROWS_AS(monogenicity_report(f, empty, 1e-4), std::invalid_argument);
}
