#pragma once

// On-disk formats: region specs, series coefficient sets and character
// tables as JSON; boundary traces as CSV.

#include <iosfwd>
#include <optional>
#include <string>

#include "monogenica/cauchy.hpp"
#include "monogenica/monogenic.hpp"
#include "monogenica/spectrum.hpp"

namespace monogenica {

// {"kind":"ball","n":3,"center":[...],"radius":r,"resolution":{"nodes":8192}}
// and the box variant with "half_widths". "resolution" is optional.
struct RegionDocument {
  RegionSpec region;
  std::optional<int> node_budget;
};

RegionDocument region_from_json(const std::string& text);
std::string region_to_json(const RegionSpec& region,
                           std::optional<int> node_budget = std::nullopt);

// {"n":3,"entries":[{"mi":[1,0],"coeff":[... 2^n reals ...]}, ...]}
std::string coefficients_to_json(int n, const CoefficientMap& coeffs);
CoefficientMap coefficients_from_json(const std::string& text, int* n_out = nullptr);

// {"n":3,"alpha":[[null,...],[...]],"beta":[[...]]}, null on the diagonal.
std::string character_table_to_json(const CharacterTable& table);
CharacterTable character_table_from_json(const std::string& text);

// Header then one row per node: index, point, outward normal, weight, and
// the 2^n field coefficients.
void write_trace_csv(std::ostream& out, const TraceSamples& trace);
TraceSamples read_trace_csv(std::istream& in, const RegionSpec& region);

// Stable float formatting shared by every CSV writer (17 significant digits,
// bit-exact round trips).
std::string format_double(double v);

}  // namespace monogenica
