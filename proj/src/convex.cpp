#include "mcd/convex.hpp"

#include <cmath>
#include <future>
#include <thread>

namespace mcd {
namespace {

struct SideRef {
    Point p, q;
};

std::vector<SideRef> convex_sides(const Polygon& poly) {
    if (!poly.convex()) throw NotConvex();
    std::vector<SideRef> sides;
    const size_t n = poly.outer.size();
    for (size_t i = 0; i < n; ++i) sides.push_back({poly.outer[i], poly.outer[(i + 1) % n]});
    return sides;
}

double pair_density(const SideRef& s1, const SideRef& s2, bool adjacent, Point shared, double ell) {
    if (adjacent) {
        const Point far1 = (s1.p == shared) ? s1.q : s1.p;
        const Point far2 = (s2.p == shared) ? s2.q : s2.p;
        const double gamma = angle_between(shared, far1, shared, far2);
        return rho_concurrent(dist(shared, far1), dist(shared, far2), gamma, ell);
    }
    const auto cfg = SegmentPairConfig::from_points(s1.p, s1.q, s2.p, s2.q);
    if (cfg.classification == PairClass::Parallel) return rho_parallel(s1.p, s1.q, s2.p, s2.q, ell);
    return rho_segments(s1.p, s1.q, s2.p, s2.q, ell);
}

} // namespace

double convex_mcd(const Polygon& poly, double ell) {
    const auto sides = convex_sides(poly);
    const size_t n = sides.size();
    double total = 0.0;
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            const bool adj_fwd = (j == i + 1);
            const bool adj_wrap = (i == 0 && j == n - 1);
            if (adj_fwd || adj_wrap) {
                const Point shared = adj_fwd ? sides[i].q : sides[i].p;
                total += pair_density(sides[i], sides[j], true, shared, ell);
            } else {
                total += pair_density(sides[i], sides[j], false, {}, ell);
            }
        }
    }
    return total;
}

void convex_breakpoints(const Polygon& poly, std::vector<double>& breakpoints,
                        std::vector<double>& singular) {
    const auto sides = convex_sides(poly);
    std::vector<double> bp;
    std::vector<double> sing;
    for (size_t i = 0; i < sides.size(); ++i) {
        for (size_t j = i + 1; j < sides.size(); ++j) {
            const auto cfg =
                SegmentPairConfig::from_points(sides[i].p, sides[i].q, sides[j].p, sides[j].q);
            auto pb = pair_breakpoints(cfg);
            bp.insert(bp.end(), pb.begin(), pb.end());
            if (parallel_pair_singular(cfg)) sing.push_back(cfg.d);
        }
    }
    const double tol = k_tau_deg * std::max(1.0, poly.scale());
    breakpoints = sorted_unique(std::move(bp), tol);
    singular = sorted_unique(std::move(sing), tol);
}

std::vector<double> parallel_map(const std::vector<double>& grid,
                                 const std::function<double(double)>& f) {
    std::vector<double> out(grid.size());
    const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    if (workers == 1 || grid.size() < 16) {
        for (size_t i = 0; i < grid.size(); ++i) out[i] = f(grid[i]);
        return out;
    }
    std::vector<std::future<void>> futures;
    const size_t chunk = (grid.size() + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
        const size_t lo = w * chunk;
        const size_t hi = std::min(grid.size(), lo + chunk);
        if (lo >= hi) break;
        futures.push_back(std::async(std::launch::async, [&, lo, hi] {
            for (size_t i = lo; i < hi; ++i) out[i] = f(grid[i]);
        }));
    }
    for (auto& fut : futures) fut.get();
    return out;
}

DensityCurve convex_sample_curve(const Polygon& poly, const GridSpec& spec) {
    DensityCurve curve;
    convex_breakpoints(poly, curve.breakpoints, curve.singular);
    curve.grid = build_grid(spec, curve.singular);
    curve.values = parallel_map(curve.grid, [&poly](double ell) { return convex_mcd(poly, ell); });
    return curve;
}

} // namespace mcd
