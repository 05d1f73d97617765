#include "mcd/curve.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "mcd/errors.hpp"

namespace mcd {

std::vector<double> sorted_unique(std::vector<double> values, double tol) {
    std::sort(values.begin(), values.end());
    std::vector<double> out;
    for (double v : values) {
        if (out.empty() || v - out.back() > tol) out.push_back(v);
    }
    return out;
}

std::vector<double> build_grid(const GridSpec& spec, const std::vector<double>& singular) {
    std::vector<double> grid;
    if (!spec.explicit_abscissae.empty()) {
        grid = spec.explicit_abscissae;
        std::sort(grid.begin(), grid.end());
    } else {
        if (!(spec.max > spec.min) || spec.points < 2)
            throw DegenerateInput("grid: need max > min and points >= 2");
        grid.reserve(spec.points);
        const double step = (spec.max - spec.min) / spec.points;
        for (int i = 0; i < spec.points; ++i) grid.push_back(spec.min + step * (i + 1));
    }
    for (double& g : grid) {
        for (double s : singular) {
            const double delta = k_tau_sing * std::max(1.0, std::abs(s));
            if (std::abs(g - s) < delta) g = (g >= s) ? s + delta : s - delta;
        }
    }
    for (size_t i = 1; i < grid.size(); ++i)
        if (grid[i] <= grid[i - 1]) throw DegenerateInput("grid: abscissae not increasing");
    return grid;
}

namespace {

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace

void write_curve_csv(std::ostream& os, const DensityCurve& curve) {
    if (curve.has_bounds())
        os << "ell,density,lower,upper\n";
    else
        os << "ell,density\n";
    for (size_t i = 0; i < curve.grid.size(); ++i) {
        os << fmt17(curve.grid[i]) << ',' << fmt17(curve.values[i]);
        if (curve.has_bounds()) os << ',' << fmt17(curve.lower[i]) << ',' << fmt17(curve.upper[i]);
        os << '\n';
    }
}

DensityCurve read_curve_csv(std::istream& is) {
    DensityCurve curve;
    std::string line;
    if (!std::getline(is, line)) throw ParseError("empty curve CSV");
    const bool bounds = line.find("lower") != std::string::npos;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::istringstream ss(line);
        std::string cell;
        std::vector<double> row;
        while (std::getline(ss, cell, ',')) row.push_back(std::strtod(cell.c_str(), nullptr));
        if (row.size() < 2u + (bounds ? 2u : 0u)) throw ParseError("short CSV row: " + line);
        curve.grid.push_back(row[0]);
        curve.values.push_back(row[1]);
        if (bounds) {
            curve.lower.push_back(row[2]);
            curve.upper.push_back(row[3]);
        }
    }
    return curve;
}

std::string curve_sidecar_json(const DensityCurve& curve, const std::string& engine_name) {
    nlohmann::json j;
    j["engine"] = engine_name;
    j["breakpoints"] = curve.breakpoints;
    j["singular"] = curve.singular;
    return j.dump(2) + "\n";
}

} // namespace mcd
