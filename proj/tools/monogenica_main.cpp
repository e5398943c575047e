// Command-line front end: algebra diagnostics, polynomial generation,
// boundary reconstruction, character tables, series extraction, probes.
//
// Exit codes: 0 pass, 1 numeric failure, 2 usage error.

#include <CLI11.hpp>
#include <json.hpp>

#include <monogenica/cauchy.hpp>
#include <monogenica/dirac.hpp>
#include <monogenica/fields.hpp>
#include <monogenica/monogenic.hpp>
#include <monogenica/multivector.hpp>
#include <monogenica/parallel.hpp>
#include <monogenica/serialization.hpp>
#include <monogenica/spectrum.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace {

using monogenica::BoundaryQuadrature;
using monogenica::CharacterTable;
using monogenica::CoefficientMap;
using monogenica::Field;
using monogenica::Multivector;
using monogenica::MultiIndex;
using monogenica::RegionKind;
using monogenica::RegionSpec;
using monogenica::Signature;
using monogenica::TraceSamples;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  int n = 3;
  std::string signature;
  int degree = 2;
  int resolution = 2048;
  bool resolution_explicit = false;
  double h = 1e-4;
  bool h_explicit = false;
  double tol = 0.0;
  bool tol_explicit = false;
  std::uint64_t seed = 1;
  int count = 0;
  int steps = 6;
  double perturb = 0.0;
  std::string out = "-";
  std::string json_out;
  std::string region_text;
  std::string field_spec = "z:1,2";
  bool field_explicit = false;
  std::string trace_in;
  std::string dump_trace;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::ostream& open_output(const std::string& path, std::ofstream& sink) {
  if (path.empty() || path == "-") return std::cout;
  sink.open(path);
  if (!sink) throw UsageError("cannot open '" + path + "' for writing");
  return sink;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot open '" + path + "' for writing");
  out << text;
}

std::vector<int> parse_int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError(std::string("bad ") + what + " '" + text + "'");
    }
  }
  if (out.empty()) throw UsageError(std::string("empty ") + what);
  return out;
}

Signature parse_signature(const Options& opt) {
  if (opt.signature.empty()) return monogenica::euclidean(opt.n);
  auto parts = parse_int_list(opt.signature, "signature");
  if (parts.size() != 2) throw UsageError("signature must be p,q");
  return monogenica::make_signature(parts[0], parts[1]);
}

Field parse_field(const std::string& spec, int n) {
  if (spec == "one") {
    return monogenica::constant_field(Multivector::scalar(monogenica::euclidean(n), 1.0));
  }
  if (spec.rfind("z:", 0) == 0) {
    auto ij = parse_int_list(spec.substr(2), "field spec");
    if (ij.size() != 2) throw UsageError("z field needs two axes, e.g. z:1,2");
    return monogenica::z_field(ij[0], ij[1], n);
  }
  if (spec.rfind("p:", 0) == 0) {
    auto ks = parse_int_list(spec.substr(2), "field spec");
    if (static_cast<int>(ks.size()) != n - 1) {
      throw UsageError("p field needs " + std::to_string(n - 1) + " exponents for n=" +
                       std::to_string(n));
    }
    MultiIndex mi{ks};
    return monogenica::poly_field(monogenica::build_poly(mi));
  }
  throw UsageError("unknown field '" + spec + "' (use one | z:i,j | p:k2,...,kn)");
}

struct ResolvedRegion {
  RegionSpec region;
  std::optional<int> budget;
};

ResolvedRegion resolve_region(const Options& opt) {
  if (opt.region_text.empty()) {
    return {monogenica::make_ball(opt.n, std::vector<double>(opt.n, 0.0), 1.0), std::nullopt};
  }
  std::string text = opt.region_text;
  if (text.front() != '{') text = read_file(text);
  auto doc = monogenica::region_from_json(text);
  return {doc.region, doc.node_budget};
}

int effective_budget(const Options& opt, const ResolvedRegion& rr) {
  if (opt.resolution_explicit) return opt.resolution;
  if (rr.budget) return *rr.budget;
  return opt.resolution;
}

std::vector<double> sample_interior(const RegionSpec& region, double frac,
                                    std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> x(static_cast<std::size_t>(region.n));
  if (region.kind == RegionKind::ball) {
    for (;;) {
      double s = 0.0;
      for (auto& c : x) {
        c = u(rng);
        s += c * c;
      }
      if (s <= 1.0 && s > 1e-12) break;
    }
    for (int i = 0; i < region.n; ++i) x[i] = region.center[i] + frac * region.radius * x[i];
  } else {
    for (int i = 0; i < region.n; ++i) {
      x[i] = region.center[i] + frac * region.half_widths[i] * u(rng);
    }
  }
  return x;
}

std::string csv_double(double v) { return monogenica::format_double(v); }

std::string join_mi(const MultiIndex& mi) {
  std::string s;
  for (std::size_t i = 0; i < mi.ks.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(mi.ks[i]);
  }
  return s;
}

// ---------------------------------------------------------------------------
// algebra-check

struct IdentityRow {
  std::string name;
  int trials = 0;
  double residual = 0.0;
  double tol = 0.0;

  bool pass() const { return residual <= tol; }
};

Multivector random_mv(const Signature& sig, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  Multivector a(sig);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = u(rng);
  return a;
}

Multivector random_vec(const Signature& sig, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<double> c(static_cast<std::size_t>(sig.dim()));
  for (auto& v : c) v = u(rng);
  return Multivector::vector(sig, c);
}

std::vector<IdentityRow> algebra_rows(const Signature& sig, int trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<IdentityRow> rows;
  const int n = sig.dim();

  auto run = [&](const std::string& name, double tol, int reps, auto&& body) {
    double worst = 0.0;
    for (int t = 0; t < reps; ++t) worst = std::max(worst, body());
    rows.push_back({name, reps, worst, tol});
  };

  run("geometric_associativity", 1e-9, trials, [&] {
    auto a = random_mv(sig, rng), b = random_mv(sig, rng), c = random_mv(sig, rng);
    return monogenica::distance_inf((a * b) * c, a * (b * c));
  });
  run("left_distributivity", 1e-9, trials, [&] {
    auto a = random_mv(sig, rng), b = random_mv(sig, rng), c = random_mv(sig, rng);
    return monogenica::distance_inf(a * (b + c), a * b + a * c);
  });
  run("reverse_antiautomorphism", 1e-9, trials, [&] {
    auto a = random_mv(sig, rng), b = random_mv(sig, rng);
    return monogenica::distance_inf(monogenica::reverse(a * b),
                                    monogenica::reverse(b) * monogenica::reverse(a));
  });
  run("reverse_involution", 0.0, trials, [&] {
    auto a = random_mv(sig, rng);
    return monogenica::distance_inf(monogenica::reverse(monogenica::reverse(a)), a);
  });
  run("reverse_grade_signs", 0.0, trials, [&] {
    auto a = random_mv(sig, rng);
    double worst = 0.0;
    for (int k = 0; k <= n; ++k) {
      auto part = a.grade(k);
      double sgn = (k % 4 == 2 || k % 4 == 3) ? -1.0 : 1.0;
      worst = std::max(worst, monogenica::distance_inf(monogenica::reverse(part), sgn * part));
    }
    return worst;
  });
  run("grade_sum", 0.0, trials, [&] {
    auto a = random_mv(sig, rng);
    Multivector acc(sig);
    for (int k = 0; k <= n; ++k) acc += a.grade(k);
    return monogenica::distance_inf(acc, a);
  });
  run("scalar_product_trace", 1e-9, trials, [&] {
    auto a = random_mv(sig, rng), b = random_mv(sig, rng);
    return std::abs(monogenica::mv_inner(a, b) - (monogenica::reverse(a) * b)[0]);
  });
  run("adjoint_shift", 1e-9, trials, [&] {
    auto a = random_mv(sig, rng), b = random_mv(sig, rng), c = random_mv(sig, rng);
    return std::abs(monogenica::mv_inner(c * a, b) -
                    monogenica::mv_inner(a, monogenica::reverse(c) * b));
  });
  if (n >= 2) {
    run("wedge_antisymmetry", 1e-14, trials, [&] {
      auto v = random_vec(sig, rng), w = random_vec(sig, rng);
      return (monogenica::wedge(v, w) + monogenica::wedge(w, v)).inf_norm();
    });
  }
  run("vector_square_scalar", 0.0, trials, [&] {
    auto v = random_vec(sig, rng);
    auto vv = v * v;
    return (vv - vv.grade(0)).inf_norm();
  });
  run("pseudoscalar_inverse", 0.0, 1, [&] {
    auto one = Multivector::scalar(sig, 1.0);
    return monogenica::distance_inf(
        Multivector::pseudoscalar(sig) * Multivector::pseudoscalar_inverse(sig), one);
  });
  if (sig.is_euclidean() && n >= 2) {
    run("plane_spinor_norm", 1e-12, trials, [&] {
      std::uniform_real_distribution<double> u(-1.0, 1.0);
      auto spinor = [&] {
        auto f = Multivector::scalar(sig, u(rng));
        f += Multivector::basis_blade(sig, 0b11u, u(rng));
        return f;
      };
      auto f = spinor(), g = spinor();
      return std::abs(monogenica::mv_norm(f * g) -
                      monogenica::mv_norm(f) * monogenica::mv_norm(g));
    });
  }
  if (sig.is_euclidean() && n >= 3) {
    run("bivector_fixtures", 0.0, 1, [&] {
      auto minus_one = Multivector::scalar(sig, -1.0);
      auto B12 = Multivector::basis_blade(sig, 0b011u);
      auto B13 = Multivector::basis_blade(sig, 0b101u);
      auto B23 = Multivector::basis_blade(sig, 0b110u);
      double r = monogenica::distance_inf(B12 * B12, minus_one);
      r = std::max(r, monogenica::distance_inf(B23 * B13 * B12, minus_one));
      return r;
    });
  }
  if (sig.is_euclidean() && n >= 4) {
    run("blade_fixtures", 0.0, 1, [&] {
      auto E123 = Multivector::basis_blade(sig, 0b0111u);
      auto E124 = Multivector::basis_blade(sig, 0b1011u);
      auto E34 = Multivector::basis_blade(sig, 0b1100u);
      return monogenica::distance_inf(E123 * E124, -E34);
    });
  }
  if (!sig.is_euclidean() && sig.p >= 1) {
    run("null_vector_square", 0.0, 1, [&] {
      auto v = Multivector::basis_vector(sig, 1) + Multivector::basis_vector(sig, sig.p + 1);
      return (v * v).inf_norm();
    });
  }
  return rows;
}

int run_algebra_check(const Options& opt) {
  Signature sig = parse_signature(opt);
  auto rows = algebra_rows(sig, 200, opt.seed);

  std::ofstream sink;
  std::ostream& out = open_output(opt.out, sink);
  out << "identity,trials,max_residual,tolerance,pass\n";
  int passed = 0;
  for (const auto& r : rows) {
    out << r.name << ',' << r.trials << ',' << csv_double(r.residual) << ','
        << csv_double(r.tol) << ',' << (r.pass() ? 1 : 0) << '\n';
    if (r.pass()) ++passed;
  }
  std::cerr << "algebra-check: " << passed << " of " << rows.size()
            << " identities within tolerance (signature " << sig.p << "," << sig.q << ")\n";
  return passed == static_cast<int>(rows.size()) ? 0 : 1;
}

// ---------------------------------------------------------------------------
// polygen

int run_polygen(const Options& opt) {
  const int n = opt.n;
  const int K = opt.degree;
  if (n < 2 || n > monogenica::kMaxDimension) throw UsageError("polygen needs 2 <= n <= 12");
  if (K < 0) throw UsageError("degree must be nonnegative");
  if (K > 4) {
    std::cerr << "warning: degree " << K << " is outside the validated range (<= 4)\n";
  }
  const double tol = opt.tol_explicit ? opt.tol : 1e-6;

  std::mt19937_64 rng(opt.seed);
  std::vector<std::vector<double>> points;
  RegionSpec ball = monogenica::make_ball(n, std::vector<double>(n, 0.0), 1.0);
  for (int i = 0; i < 20; ++i) points.push_back(sample_interior(ball, 0.7, rng));

  std::ofstream sink;
  std::ostream& out = open_output(opt.out, sink);
  out << "mi,degree,terms,max_dirac_residual,pass\n";

  nlohmann::json jdoc;
  jdoc["n"] = n;
  jdoc["degree"] = K;
  auto& jpolys = jdoc["polynomials"] = nlohmann::json::array();

  bool all_pass = true;
  std::size_t total = 0;
  for (int k = 0; k <= K; ++k) {
    auto mis = monogenica::multi_indices(n, k);
    if (mis.size() != monogenica::multi_index_count(n, k)) {
      throw std::runtime_error("enumeration does not match the closed-form count");
    }
    for (const auto& mi : mis) {
      auto poly = monogenica::build_poly(mi);
      Field f = monogenica::poly_field(poly);
      double residual = 0.0;
      for (const auto& x : points) {
        residual = std::max(residual, monogenica::mv_norm(monogenica::dirac(f, x, opt.h)));
      }
      bool pass = residual <= tol;
      all_pass = all_pass && pass;
      ++total;
      out << join_mi(mi) << ',' << k << ',' << poly.words.size() << ','
          << csv_double(residual) << ',' << (pass ? 1 : 0) << '\n';
      jpolys.push_back({{"mi", mi.ks},
                        {"prefactor", poly.prefactor},
                        {"words", poly.words},
                        {"max_dirac_residual", residual}});
    }
  }
  jdoc["count"] = total;
  if (!opt.json_out.empty()) write_text_file(opt.json_out, jdoc.dump(2) + "\n");

  std::cerr << "polygen: " << total << " polynomials through degree " << K << ", "
            << (all_pass ? "all" : "NOT all") << " below dirac residual " << tol << "\n";
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// reconstruct

int run_reconstruct(const Options& opt) {
  ResolvedRegion rr = resolve_region(opt);
  const RegionSpec& region = rr.region;
  const int n = region.n;
  const double tol = opt.tol_explicit ? opt.tol : 1e-3;
  const int count = opt.count > 0 ? opt.count : 10;

  bool have_exact = true;
  Field field;
  TraceSamples trace;
  if (!opt.trace_in.empty()) {
    std::ifstream in(opt.trace_in);
    if (!in) throw UsageError("cannot read '" + opt.trace_in + "'");
    trace = monogenica::read_trace_csv(in, region);
    have_exact = opt.field_explicit;
    if (have_exact) field = parse_field(opt.field_spec, n);
  } else {
    field = parse_field(opt.field_spec, n);
    auto quad = monogenica::make_quadrature(region, effective_budget(opt, rr));
    trace = monogenica::sample_trace(field, quad);
  }
  if (!opt.dump_trace.empty()) {
    std::ofstream dump(opt.dump_trace);
    if (!dump) throw UsageError("cannot open '" + opt.dump_trace + "' for writing");
    monogenica::write_trace_csv(dump, trace);
  }

  std::mt19937_64 rng(opt.seed);
  std::ofstream sink;
  std::ostream& out = open_output(opt.out, sink);
  out << "index";
  for (int i = 1; i <= n; ++i) out << ",x" << i;
  out << ",status,abs_error";
  const std::size_t width = std::size_t{1} << n;
  for (std::size_t i = 0; i < width; ++i) out << ",r" << i;
  out << '\n';

  double worst = 0.0;
  int usable = 0;
  bool all_pass = true;
  for (int idx = 0; idx < count; ++idx) {
    auto x = sample_interior(region, 0.5, rng);
    out << idx;
    for (double c : x) out << ',' << csv_double(c);
    try {
      Multivector rec = monogenica::cauchy_reconstruct(trace, x);
      std::string err_cell;
      if (have_exact) {
        double err = monogenica::mv_norm(rec - field(x));
        worst = std::max(worst, err);
        err_cell = csv_double(err);
        if (err > tol) all_pass = false;
        ++usable;
      }
      out << ",ok," << err_cell;
      for (std::size_t i = 0; i < rec.size(); ++i) out << ',' << csv_double(rec[i]);
      out << '\n';
    } catch (const monogenica::margin_error&) {
      out << ",margin,";
      for (std::size_t i = 0; i < width; ++i) out << ',';
      out << '\n';
    } catch (const std::domain_error&) {
      out << ",exterior,";
      for (std::size_t i = 0; i < width; ++i) out << ',';
      out << '\n';
    }
  }
  if (have_exact) {
    std::cerr << "reconstruct: " << usable << " of " << count << " points compared, max error "
              << worst << " (tol " << tol << ")\n";
  } else {
    std::cerr << "reconstruct: " << count << " points evaluated from the stored trace\n";
  }
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// series

int run_series(const Options& opt) {
  ResolvedRegion rr = resolve_region(opt);
  const RegionSpec& region = rr.region;
  const int n = region.n;
  const int K = opt.degree;
  const double fd = opt.h_explicit ? opt.h : 1e-5;
  const double tol = opt.tol_explicit ? opt.tol : 1e-3;
  const int count = opt.count > 0 ? opt.count : 20;

  Field field = parse_field(opt.field_spec, n);
  auto quad = monogenica::make_quadrature(region, effective_budget(opt, rr));
  auto trace = monogenica::sample_trace(field, quad);
  CoefficientMap coeffs = monogenica::series_coefficients(trace, K, fd);
  if (!opt.json_out.empty()) {
    write_text_file(opt.json_out, monogenica::coefficients_to_json(n, coeffs) + "\n");
  }

  std::mt19937_64 rng(opt.seed);
  std::ofstream sink;
  std::ostream& out = open_output(opt.out, sink);
  out << "index";
  for (int i = 1; i <= n; ++i) out << ",x" << i;
  out << ",abs_error\n";

  double worst = 0.0;
  for (int idx = 0; idx < count; ++idx) {
    auto x = sample_interior(region, 0.45, rng);
    double err = monogenica::mv_norm(monogenica::eval_series(coeffs, x, K) - field(x));
    worst = std::max(worst, err);
    out << idx;
    for (double c : x) out << ',' << csv_double(c);
    out << ',' << csv_double(err) << '\n';
  }
  std::cerr << "series: degree " << K << ", " << coeffs.size() << " coefficients, max eval error "
            << worst << " (tol " << tol << ")\n";
  if (worst > tol) {
    std::cerr << "series: truncation error exceeds the tolerance; raise --degree or shrink "
                 "the evaluation radius\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// spectrum

int run_spectrum(const Options& opt) {
  ResolvedRegion rr = resolve_region(opt);
  const RegionSpec& region = rr.region;
  const int n = region.n;
  const int count = opt.count > 0 ? opt.count : 100;
  const double perturb = opt.perturb;
  if (perturb < 0.0) throw UsageError("--perturb must be nonnegative");
  const double consistency_tol = std::max(1e-9, 10.0 * perturb);
  const double tol = opt.tol_explicit ? opt.tol : (perturb > 0.0 ? 10.0 * perturb : 0.0);

  std::mt19937_64 rng(opt.seed);
  std::ofstream sink;
  std::ostream& out = open_output(opt.out, sink);
  out << "index";
  for (int i = 1; i <= n; ++i) out << ",x" << i;
  for (int i = 1; i <= n; ++i) out << ",rec" << i;
  out << ",residual,abs_error,inside\n";

  std::uniform_real_distribution<double> noise(-perturb, perturb);
  double worst_err = 0.0, worst_res = 0.0;
  bool all_pass = true;
  for (int idx = 0; idx < count; ++idx) {
    auto x = sample_interior(region, 1.0, rng);
    CharacterTable table = monogenica::character_from_point(x);
    if (perturb > 0.0) {
      for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
          if (i == j) continue;
          table.set_alpha(i, j, table.alpha_at(i, j) + noise(rng));
          table.set_beta(i, j, table.beta_at(i, j) + noise(rng));
        }
      }
    }
    double residual = monogenica::consistency_residual(table);
    worst_res = std::max(worst_res, residual);
    out << idx;
    for (double c : x) out << ',' << csv_double(c);
    try {
      auto rec = monogenica::recover_point(table, consistency_tol);
      double err = 0.0;
      for (int i = 0; i < n; ++i) err = std::max(err, std::abs(rec[i] - x[i]));
      worst_err = std::max(worst_err, err);
      bool inside = region.contains(rec);
      if (err > tol || !inside) all_pass = false;
      for (double c : rec) out << ',' << csv_double(c);
      out << ',' << csv_double(residual) << ',' << csv_double(err) << ',' << (inside ? 1 : 0)
          << '\n';
    } catch (const std::invalid_argument&) {
      all_pass = false;
      for (int i = 0; i < n; ++i) out << ',';
      out << ',' << csv_double(residual) << ",,0\n";
    }
  }
  std::cerr << "spectrum: " << count << " characters, max residual " << worst_res
            << ", max recovery error " << worst_err << " (tol " << tol << ")\n";
  return all_pass ? 0 : 1;
}

// ---------------------------------------------------------------------------
// probe

int run_probe(const Options& opt) {
  ResolvedRegion rr = resolve_region(opt);
  const RegionSpec& region = rr.region;
  const int count = opt.count > 0 ? opt.count : 100;
  if (opt.steps < 2) throw UsageError("--steps must be at least 2");

  std::mt19937_64 rng(opt.seed);
  std::vector<std::vector<double>> grid;
  for (int i = 0; i < count; ++i) grid.push_back(sample_interior(region, 0.999, rng));

  std::ofstream sink;
  std::ostream& out = open_output(opt.out, sink);
  out << "step,offset_factor,probe\n";

  double prev = -1.0;
  bool increasing = true;
  for (int m = 1; m <= opt.steps; ++m) {
    double factor = 1.0 + 1.0 / m;
    std::vector<double> x0 = region.center;
    x0[0] += factor * region.scale();
    double value = monogenica::singular_probe(region, x0, grid);
    out << m << ',' << csv_double(factor) << ',' << csv_double(value) << '\n';
    if (value <= prev) increasing = false;
    prev = value;
  }
  std::cerr << "probe: " << opt.steps << " approach steps, "
            << (increasing ? "strictly increasing" : "NOT strictly increasing") << "\n";
  return increasing ? 0 : 1;
}

// ---------------------------------------------------------------------------
// config file

void apply_config(const std::string& path, Options& o) {
  auto doc = nlohmann::json::parse(read_file(path));
  if (!doc.is_object()) throw UsageError("config must be a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key == "n") {
      o.n = value.get<int>();
    } else if (key == "signature") {
      o.signature = value.get<std::string>();
    } else if (key == "degree") {
      o.degree = value.get<int>();
    } else if (key == "resolution") {
      o.resolution = value.get<int>();
      o.resolution_explicit = true;
    } else if (key == "h") {
      o.h = value.get<double>();
      o.h_explicit = true;
    } else if (key == "tol") {
      o.tol = value.get<double>();
      o.tol_explicit = true;
    } else if (key == "seed") {
      o.seed = value.get<std::uint64_t>();
    } else if (key == "count") {
      o.count = value.get<int>();
    } else if (key == "steps") {
      o.steps = value.get<int>();
    } else if (key == "perturb") {
      o.perturb = value.get<double>();
    } else if (key == "out") {
      o.out = value.get<std::string>();
    } else if (key == "json_out") {
      o.json_out = value.get<std::string>();
    } else if (key == "field") {
      o.field_spec = value.get<std::string>();
      o.field_explicit = true;
    } else if (key == "region") {
      o.region_text = value.is_string() ? value.get<std::string>() : value.dump();
    } else if (key == "trace") {
      o.trace_in = value.get<std::string>();
    } else if (key == "dump_trace") {
      o.dump_trace = value.get<std::string>();
    } else {
      throw UsageError("unknown config key '" + key + "'");
    }
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  std::string config_path;
  for (int i = 1; i < argc; ++i) {
    std::string_view a = argv[i];
    if (a == "--config" && i + 1 < argc) {
      config_path = argv[i + 1];
    } else if (a.rfind("--config=", 0) == 0) {
      config_path = a.substr(9);
    }
  }
  try {
    if (!config_path.empty()) apply_config(config_path, opt);
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: bad config: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  CLI::App app{"monogenica: numerical Clifford analysis"};
  app.require_subcommand(1);
  app.set_help_flag("--help", "print this help and exit");
  std::string config_sink;

  auto make_sub = [&](const std::string& name, const std::string& desc) {
    auto* sub = app.add_subcommand(name, desc);
    sub->set_help_flag("--help", "print this help and exit");
    return sub;
  };
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_sink, "JSON file with flag defaults");
    sub->add_option("--seed", opt.seed, "RNG seed");
    sub->add_option("--out", opt.out, "output CSV path, - for stdout");
  };
  auto add_tol = [&](CLI::App* sub) {
    return sub->add_option("--tol", opt.tol, "pass tolerance");
  };

  auto* alg = make_sub("algebra-check", "run the product and involution identities");
  alg->add_option("--n", opt.n, "dimension (Euclidean signature n,0)");
  alg->add_option("--signature", opt.signature, "metric signature p,q");
  add_common(alg);

  auto* pol = make_sub("polygen", "enumerate the monogenic basis polynomials");
  pol->add_option("--n", opt.n, "dimension");
  pol->add_option("--degree", opt.degree, "highest polynomial degree");
  pol->add_option("--h", opt.h, "finite-difference step for the residual check");
  auto* pol_tol = add_tol(pol);
  pol->add_option("--json-out", opt.json_out, "write the polynomial list as JSON");
  add_common(pol);

  auto* rec = make_sub("reconstruct", "boundary-trace reconstruction of a field");
  rec->add_option("--n", opt.n, "dimension of the default unit ball");
  rec->add_option("--region", opt.region_text, "region JSON (inline or file path)");
  auto* rec_res = rec->add_option("--resolution", opt.resolution, "boundary node budget");
  auto* rec_field = rec->add_option("--field", opt.field_spec, "one | z:i,j | p:k2,...,kn");
  rec->add_option("--count", opt.count, "number of interior evaluation points");
  rec->add_option("--trace", opt.trace_in, "read the boundary trace from CSV");
  rec->add_option("--dump-trace", opt.dump_trace, "write the boundary trace to CSV");
  auto* rec_tol = add_tol(rec);
  add_common(rec);

  auto* ser = make_sub("series", "power-series coefficients from a boundary trace");
  ser->add_option("--n", opt.n, "dimension of the default unit ball");
  ser->add_option("--region", opt.region_text, "ball region JSON (inline or file path)");
  auto* ser_res = ser->add_option("--resolution", opt.resolution, "boundary node budget");
  ser->add_option("--field", opt.field_spec, "one | z:i,j | p:k2,...,kn");
  ser->add_option("--degree", opt.degree, "series truncation degree K");
  auto* ser_h = ser->add_option("--h", opt.h, "base step for the kernel derivatives");
  ser->add_option("--count", opt.count, "number of interior evaluation points");
  ser->add_option("--json-out", opt.json_out, "write the coefficients as JSON");
  auto* ser_tol = add_tol(ser);
  add_common(ser);

  auto* spe = make_sub("spectrum", "character tables and point recovery");
  spe->add_option("--n", opt.n, "dimension of the default unit ball");
  spe->add_option("--region", opt.region_text, "region JSON (inline or file path)");
  spe->add_option("--count", opt.count, "number of sample points");
  spe->add_option("--perturb", opt.perturb, "uniform table perturbation amplitude");
  auto* spe_tol = add_tol(spe);
  add_common(spe);

  auto* pro = make_sub("probe", "singularity probe along a boundary approach");
  pro->add_option("--n", opt.n, "dimension of the default unit ball");
  pro->add_option("--region", opt.region_text, "region JSON (inline or file path)");
  pro->add_option("--count", opt.count, "number of grid points");
  pro->add_option("--steps", opt.steps, "number of approach steps");
  add_common(pro);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (rec_res->count() > 0 || ser_res->count() > 0) opt.resolution_explicit = true;
  if (ser_h->count() > 0) opt.h_explicit = true;
  if (rec_field->count() > 0) opt.field_explicit = true;
  if (pol_tol->count() > 0 || rec_tol->count() > 0 || ser_tol->count() > 0 ||
      spe_tol->count() > 0) {
    opt.tol_explicit = true;
  }

  try {
    if (app.got_subcommand(alg)) return run_algebra_check(opt);
    if (app.got_subcommand(pol)) return run_polygen(opt);
    if (app.got_subcommand(rec)) return run_reconstruct(opt);
    if (app.got_subcommand(ser)) return run_series(opt);
    if (app.got_subcommand(spe)) return run_spectrum(opt);
    if (app.got_subcommand(pro)) return run_probe(opt);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
