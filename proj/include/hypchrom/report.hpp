#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hypchrom/hoffman.hpp"
#include "hypchrom/spindle.hpp"

namespace hypchrom {

/// printf "%.12g": 12 significant digits, '.' decimal separator.
std::string format_number(double value);

/// `d=<D> psi_min=<v> s_star=<v> bound=<v>`
std::string format_bound_line(const HoffmanResult& r);

/// Header `d,psi_min,s_star,bound`, one row per result, LF line endings.
void write_sweep_csv(std::ostream& out, const std::vector<HoffmanResult>& results);

/// Static SVG 1.1 chart (800x500) of bound against d with the horizontal
/// asymptote drawn at `asymptote`.
void write_sweep_svg(std::ostream& out, const std::vector<HoffmanResult>& results,
                     double asymptote);

/// {"d", "points": [[re, im] x 7], "edges": [[i, j] x 11], "max_deviation"}
nlohmann::json spindle_to_json(const SpindleEmbedding& s);

}  // namespace hypchrom
