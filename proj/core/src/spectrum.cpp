#include "monogenica/spectrum.hpp"

#include <cmath>
#include <stdexcept>

namespace monogenica {

namespace {

std::size_t cell(const CharacterTable& t, int i, int j) {
  if (i < 1 || j < 1 || i > t.n || j > t.n) throw std::out_of_range("table axis out of range");
  if (i == j) throw std::invalid_argument("diagonal table entries are undefined");
  return static_cast<std::size_t>((i - 1) * t.n + (j - 1));
}

}  // namespace

double CharacterTable::alpha_at(int i, int j) const { return alpha[cell(*this, i, j)]; }
double CharacterTable::beta_at(int i, int j) const { return beta[cell(*this, i, j)]; }
void CharacterTable::set_alpha(int i, int j, double v) { alpha[cell(*this, i, j)] = v; }
void CharacterTable::set_beta(int i, int j, double v) { beta[cell(*this, i, j)] = v; }

Multivector CharacterTable::entry(int i, int j) const {
  const Signature sig = euclidean(n);
  Multivector out = Multivector::scalar(sig, alpha_at(i, j));
  const BladeBits bits = (BladeBits{1} << (i - 1)) | (BladeBits{1} << (j - 1));
  const double orientation = (i < j) ? 1.0 : -1.0;  // B_ij = -E_ji for i > j
  out[bits] = beta_at(i, j) * orientation;
  return out;
}

CharacterTable make_character_table(int n) {
  if (n < 2 || n > kMaxDimension) {
    throw std::invalid_argument("character table dimension must be in [2, 12]");
  }
  CharacterTable t;
  t.n = n;
  t.alpha.assign(static_cast<std::size_t>(n) * n, 0.0);
  t.beta.assign(static_cast<std::size_t>(n) * n, 0.0);
  return t;
}

CharacterTable character_from_point(std::span<const double> x) {
  CharacterTable t = make_character_table(static_cast<int>(x.size()));
  for (int i = 1; i <= t.n; ++i) {
    for (int j = 1; j <= t.n; ++j) {
      if (i == j) continue;
      t.set_alpha(i, j, x[static_cast<std::size_t>(j - 1)]);
      t.set_beta(i, j, -x[static_cast<std::size_t>(i - 1)]);
    }
  }
  return t;
}

double consistency_residual(const CharacterTable& table) {
  const int n = table.n;
  if (n < 2) throw std::invalid_argument("table is empty");
  double worst = 0.0;
  const auto bump = [&worst](double v) { worst = std::max(worst, std::abs(v)); };

  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      if (i == j) continue;
      // Antisymmetry pairing of the two tables.
      bump(table.alpha_at(i, j) + table.beta_at(j, i));
      for (int l = 1; l <= n; ++l) {
        if (l == i || l == j) continue;
        // alpha depends only on the second axis, beta only on the first.
        bump(table.alpha_at(i, j) - table.alpha_at(l, j));
        bump(table.beta_at(i, j) - table.beta_at(i, l));
      }
    }
  }
  return worst;
}

std::vector<double> recover_point(const CharacterTable& table, double tol) {
  const double residual = consistency_residual(table);
  if (residual > tol) {
    throw std::invalid_argument("character table is inconsistent (residual " +
                                std::to_string(residual) + ")");
  }
  const int n = table.n;
  std::vector<double> x(static_cast<std::size_t>(n), 0.0);
  std::vector<double> determinations;
  determinations.reserve(static_cast<std::size_t>(2 * (n - 1)));
  for (int i = 1; i <= n; ++i) {
    determinations.clear();
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      determinations.push_back(table.alpha_at(j, i));
      determinations.push_back(-table.beta_at(i, j));
    }
    // The mean of identical determinations must stay bit-exact, so only
    // average when they actually disagree.
    bool all_equal = true;
    for (double v : determinations) {
      if (v != determinations.front()) {
        all_equal = false;
        break;
      }
    }
    if (all_equal) {
      x[static_cast<std::size_t>(i - 1)] = determinations.front();
    } else {
      double acc = 0.0;
      for (double v : determinations) acc += v;
      x[static_cast<std::size_t>(i - 1)] = acc / static_cast<double>(determinations.size());
    }
  }
  return x;
}

Multivector gelfand_eval(const Field& f, const CharacterTable& table, double tol) {
  if (!f.eval) throw std::invalid_argument("field has no evaluator");
  if (f.n != table.n) throw std::invalid_argument("field and table dimensions differ");
  const std::vector<double> x = recover_point(table, tol);
  return f.eval(x);
}

double singular_probe(const RegionSpec& region, std::span<const double> x0,
                      std::span<const std::vector<double>> samples) {
  region.validate();
  if (static_cast<int>(x0.size()) != region.n) {
    throw std::invalid_argument("source dimension must match the region");
  }
  if (region.signed_distance(x0) <= 0.0) {
    throw std::domain_error("probe source must lie strictly outside the region");
  }
  if (samples.empty()) throw std::invalid_argument("sample grid must be nonempty");

  const Signature sig = euclidean(region.n);
  const Multivector e1 = Multivector::basis_vector(sig, 1);
  double sup = 0.0;
  std::vector<double> shifted(static_cast<std::size_t>(region.n));
  for (const std::vector<double>& x : samples) {
    if (static_cast<int>(x.size()) != region.n) {
      throw std::invalid_argument("sample dimension must match the region");
    }
    for (int i = 0; i < region.n; ++i) {
      shifted[static_cast<std::size_t>(i)] =
          x[static_cast<std::size_t>(i)] - x0[static_cast<std::size_t>(i)];
    }
    sup = std::max(sup, mv_norm(greens(shifted) * e1));
  }
  return sup;
}

}  // namespace monogenica
