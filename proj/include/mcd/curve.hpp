#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mcd/geom.hpp"

namespace mcd {

struct GridSpec {
    double min = 0.0;
    double max = 0.0;
    int points = 0;
    std::vector<double> explicit_abscissae; // used instead when nonempty
};

struct DensityCurve {
    std::vector<double> grid;
    std::vector<double> values;
    std::vector<double> breakpoints; // sorted, deduplicated critical lengths
    std::vector<double> singular;    // subset where the density diverges
    std::vector<double> lower;       // optional bound channels (bounds engine)
    std::vector<double> upper;

    bool has_bounds() const { return !lower.empty(); }
};

// Strictly increasing abscissae over (min, max], nudged off singular points.
std::vector<double> build_grid(const GridSpec& spec, const std::vector<double>& singular);

std::vector<double> sorted_unique(std::vector<double> values, double tol);

void write_curve_csv(std::ostream& os, const DensityCurve& curve);
DensityCurve read_curve_csv(std::istream& is);
std::string curve_sidecar_json(const DensityCurve& curve, const std::string& engine_name);

} // namespace mcd
