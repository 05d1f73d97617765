#include "mcd/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace mcd {
namespace {

// 15-point Gauss-Kronrod pair on [-1, 1].
constexpr double kron_x[8] = {0.0, 0.2077849550078985, 0.4058451513773972, 0.5860872354676911,
                              0.7415311855993945, 0.8648644233597691, 0.9491079123427585,
                              0.9914553711208126};
constexpr double kron_w[8] = {0.2094821410847278, 0.2044329400752989, 0.1903505780647854,
                              0.1690047266392679, 0.1406532597155259, 0.1047900103222502,
                              0.0630920926299786, 0.0229353220105292};
constexpr double gauss_w[4] = {0.4179591836734694, 0.3818300505051189, 0.2797053914892767,
                               0.1294849661688697};

struct GK {
    double value;
    double error;
};

GK gk15(const std::function<double(double)>& f, double a, double b) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    fv[7] = f(c);
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kron_x[7 - i]);
        fv[14 - i] = f(c + h * kron_x[7 - i]);
    }
    double resk = kron_w[0] * fv[7];
    double resg = gauss_w[0] * fv[7];
    for (int i = 1; i < 8; ++i) resk += kron_w[i] * (fv[7 - i] + fv[7 + i]);
    for (int i = 1; i < 4; ++i) resg += gauss_w[i] * (fv[7 - 2 * i] + fv[7 + 2 * i]);
    return {resk * h, std::abs((resk - resg) * h)};
}

double adapt(const std::function<double(double)>& f, double a, double b, double rel_tol,
             double abs_tol, int depth) {
    GK r = gk15(f, a, b);
    if (depth <= 0 || r.error <= abs_tol + rel_tol * std::abs(r.value)) return r.value;
    const double c = 0.5 * (a + b);
    return adapt(f, a, c, rel_tol, abs_tol * 0.5, depth - 1) +
           adapt(f, c, b, rel_tol, abs_tol * 0.5, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b, double rel_tol,
                 double abs_tol, int max_depth) {
    if (!(b > a)) return 0.0;
    return adapt(f, a, b, rel_tol, abs_tol, max_depth);
}

double integrate_sqrt_endpoints(const std::function<double(double)>& f, double a, double b,
                                double rel_tol, double abs_tol) {
    if (!(b > a)) return 0.0;
    const double m = 0.5 * (a + b);
    auto left = [&](double u) { return 2.0 * u * f(a + u * u); };
    auto right = [&](double u) { return 2.0 * u * f(b - u * u); };
    const double w = std::sqrt(m - a);
    return integrate(left, 0.0, w, rel_tol, abs_tol * 0.5) +
           integrate(right, 0.0, w, rel_tol, abs_tol * 0.5);
}

double integrate_piecewise(const std::function<double(double)>& f, double a, double b,
                           std::vector<double> breakpoints, double rel_tol, double abs_tol) {
    if (!(b > a)) return 0.0;
    breakpoints.push_back(a);
    breakpoints.push_back(b);
    std::sort(breakpoints.begin(), breakpoints.end());
    std::vector<double> cuts;
    for (double t : breakpoints) {
        if (t < a || t > b) continue;
        if (cuts.empty() || t - cuts.back() > 1e-12 * (b - a)) cuts.push_back(t);
    }
    if (cuts.empty() || cuts.front() > a) cuts.insert(cuts.begin(), a);
    if (cuts.back() < b) cuts.push_back(b);
    double total = 0.0;
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        total += integrate_sqrt_endpoints(f, cuts[i], cuts[i + 1], rel_tol, abs_tol);
    return total;
}

} // namespace mcd
