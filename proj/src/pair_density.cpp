#include "mcd/pair_density.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>

namespace mcd {
namespace {

std::atomic<std::uint64_t> g_negative_clamps{0};

double clamp_nonneg(double v) {
    if (v < 0.0) {
        if (v < -1e-9) g_negative_clamps.fetch_add(1, std::memory_order_relaxed);
        return 0.0;
    }
    return v;
}

// Bracket shared by all three variants: the full-range theta integral.
double bracket_full(double alpha, double beta, double gamma) {
    return beta * std::cos(gamma) + std::cos(alpha) * std::sin(beta);
}

// Branch hit when the chord family shrinks toward the completing side c.
double bracket_c(double u, double alpha, double beta, double gamma) {
    const double root = u * std::sqrt(std::max(0.0, 1.0 - u * u));
    return (std::asin(u) - root - alpha) * std::cos(gamma) + u * u * std::sin(gamma) -
           std::sin(alpha) * std::cos(beta);
}

// Branch hit when the chord family shrinks toward the crossed segment a.
double bracket_a(double u, double gamma) {
    const double root = u * std::sqrt(std::max(0.0, 1.0 - u * u));
    return (std::asin(u) - root - gamma) * std::cos(gamma) + (1.0 - u * u) * std::sin(gamma);
}

// gamma > pi/2 branch.
double bracket_obt(double u, double alpha, double gamma) {
    const double root = u * std::sqrt(std::max(0.0, 1.0 - u * u));
    const double sa = std::sin(alpha);
    return (std::asin(u) - root + sa * std::cos(alpha) - alpha) * std::cos(gamma) +
           (u * u - sa * sa) * std::sin(gamma);
}

} // namespace

double rho_aB(double ell, double alpha, double beta, double gamma, double a, double b, double c) {
    if (a <= 0.0 || b <= 0.0) return 0.0;
    const double area = 0.5 * a * b * std::sin(gamma);
    const double pref = a * b / (4.0 * area);
    const double h = 2.0 * area / b; // height onto the length-b segment's line
    const double u = clamp_unit(h / ell);

    if (gamma > M_PI_2 + k_tau_ang) {
        double out = 0.0;
        if (heaviside(a - ell) != 0.0) out += bracket_full(alpha, beta, gamma);
        if (heaviside(ell - a) != 0.0 && heaviside(c - ell) != 0.0)
            out += bracket_obt(u, alpha, gamma);
        return pref * out;
    }
    if (alpha > M_PI_2 + k_tau_ang) { // height from the dominating vertex misses side b
        double out = 0.0;
        if (heaviside(c - ell) != 0.0) out += bracket_full(alpha, beta, gamma);
        if (heaviside(ell - c) != 0.0 && heaviside(a - ell) != 0.0) out += bracket_a(u, gamma);
        return pref * out;
    }
    double out = 0.0;
    if (heaviside(h - ell) != 0.0) out += bracket_full(alpha, beta, gamma);
    if (heaviside(ell - h) != 0.0) {
        if (heaviside(c - ell) != 0.0) out += bracket_c(u, alpha, beta, gamma);
        if (heaviside(a - ell) != 0.0) out += bracket_a(u, gamma);
    }
    return pref * out;
}

double rho_concurrent(double a, double b, double gamma, double ell) {
    if (!(ell > 0.0) || !(gamma > 0.0) || !(gamma < M_PI) || !(a > 0.0) || !(b > 0.0))
        throw DegenerateInput("rho_concurrent: need a,b,ell > 0 and 0 < gamma < pi");
    const double c = std::sqrt(std::max(0.0, a * a + b * b - 2.0 * a * b * std::cos(gamma)));
    if (!(c > 0.0)) throw DegenerateInput("rho_concurrent: collapsed completing triangle");
    const double alpha = std::acos(clamp_unit((b - a * std::cos(gamma)) / c));
    const double beta = std::acos(clamp_unit((a - b * std::cos(gamma)) / c));
    return rho_aB(ell, alpha, beta, gamma, a, b, c) + rho_aB(ell, beta, alpha, gamma, b, a, c);
}

double rho_segments_on_rays(double x_near, double x_far, double y_near, double y_far,
                            double gamma, double ell) {
    auto rc = [&](double xa, double xb) {
        if (xa <= 0.0 || xb <= 0.0) return 0.0;
        return rho_concurrent(xa, xb, gamma, ell);
    };
    const double v = rc(x_far, y_far) - rc(x_near, y_far) - rc(x_far, y_near) + rc(x_near, y_near);
    return clamp_nonneg(v);
}

SegmentPairConfig SegmentPairConfig::from_points(Point a, Point a2, Point b, Point b2) {
    SegmentPairConfig cfg;
    cfg.a = a;
    cfg.a2 = a2;
    cfg.b = b;
    cfg.b2 = b2;
    const Point u = a2 - a;
    const Point v = b2 - b;
    const double nu = norm(u), nv = norm(v);
    const double scale = std::max({norm(a), norm(a2), norm(b), norm(b2), 1.0});
    if (nu <= k_tau_deg * scale || nv <= k_tau_deg * scale) throw DegenerateSegment();
    if (std::abs(cross(u, v)) <= k_tau_par * nu * nv) {
        cfg.classification = PairClass::Parallel;
        const Point n{-u.y / nu, u.x / nu};
        cfg.d = std::abs(dot(b - a, n));
        return cfg;
    }
    cfg.o = intersect_lines(a, a2, b, b2);
    const double da = std::max(dist(cfg.o, a), dist(cfg.o, a2));
    const double db = std::max(dist(cfg.o, b), dist(cfg.o, b2));
    const Point ra = (dist(cfg.o, a2) > dist(cfg.o, a) ? a2 : a) - cfg.o;
    const Point rb = (dist(cfg.o, b2) > dist(cfg.o, b) ? b2 : b) - cfg.o;
    cfg.gamma = std::acos(clamp_unit(dot(ra, rb) / (da * db)));
    const double tol = k_tau_deg * scale;
    cfg.classification = (dist(cfg.o, a) <= tol || dist(cfg.o, a2) <= tol ||
                          dist(cfg.o, b) <= tol || dist(cfg.o, b2) <= tol)
                             ? PairClass::ConcurrentAtEndpoint
                             : PairClass::General;
    return cfg;
}

double rho_segments(Point a, Point a2, Point b, Point b2, double ell) {
    const double scale = std::max({norm(a), norm(a2), norm(b), norm(b2), 1.0});
    const Point u = a2 - a;
    const Point v = b2 - b;
    if (norm(u) <= k_tau_deg * scale || norm(v) <= k_tau_deg * scale) throw DegenerateSegment();
    if (std::abs(cross(u, v)) <= k_tau_par * norm(u) * norm(v)) throw ParallelLines();
    const Point o = intersect_lines(a, a2, b, b2);
    const double tol = k_tau_deg * scale;

    // A segment straddling the intersection point is split there first.
    const double ta = dot(o - a, u) / dot(u, u);
    const double tpa = tol / norm(u);
    if (ta > tpa && ta < 1.0 - tpa)
        return rho_segments(a, o, b, b2, ell) + rho_segments(o, a2, b, b2, ell);
    const double tb = dot(o - b, v) / dot(v, v);
    const double tpb = tol / norm(v);
    if (tb > tpb && tb < 1.0 - tpb)
        return rho_segments(a, a2, b, o, ell) + rho_segments(a, a2, o, b2, ell);

    double xa = dist(o, a), xa2 = dist(o, a2), yb = dist(o, b), yb2 = dist(o, b2);
    if (xa > xa2) std::swap(xa, xa2);
    if (yb > yb2) std::swap(yb, yb2);
    const Point ra = (dist(o, a2) > dist(o, a) ? a2 : a) - o;
    const Point rb = (dist(o, b2) > dist(o, b) ? b2 : b) - o;
    const double gamma = std::acos(clamp_unit(dot(ra, rb) / (norm(ra) * norm(rb))));
    if (xa <= tol) xa = 0.0;
    if (yb <= tol) yb = 0.0;
    return rho_segments_on_rays(xa, xa2, yb, yb2, gamma, ell);
}

double rho_parallel_coords(double ax0, double ax1, double bx0, double bx1, double d, double ell) {
    if (!(ell > 0.0)) throw DegenerateInput("rho_parallel: ell must be positive");
    if (ax1 < ax0) std::swap(ax0, ax1);
    if (bx1 < bx0) std::swap(bx0, bx1);
    if (!(ell > d)) return 0.0;
    const double s = std::sqrt(ell * ell - d * d);
    auto h = [](double x) { return x > 0.0 ? x : 0.0; };
    const double overlap = h(std::min(bx1 - s, ax1) - std::max(bx0 - s, ax0)) +
                           h(std::min(bx1 + s, ax1) - std::max(bx0 + s, ax0));
    return d * d / (ell * ell * s) * overlap;
}

double rho_parallel(Point a, Point a2, Point b, Point b2, double ell) {
    const double scale = std::max({norm(a), norm(a2), norm(b), norm(b2), 1.0});
    const Point u = a2 - a;
    const Point v = b2 - b;
    if (norm(u) <= k_tau_deg * scale || norm(v) <= k_tau_deg * scale) throw DegenerateSegment();
    const Point ud = normalized(u);
    const Point n{-ud.y, ud.x};
    const double d = std::abs(dot(b - a, n));
    if (d <= k_tau_deg * scale) throw CoincidentLines();
    const double ax0 = 0.0, ax1 = dot(a2 - a, ud);
    const double bx0 = dot(b - a, ud), bx1 = dot(b2 - a, ud);
    return rho_parallel_coords(ax0, ax1, bx0, bx1, d, ell);
}

std::vector<double> pair_breakpoints(const SegmentPairConfig& cfg) {
    std::vector<double> bp;
    const Point pts_a[2] = {cfg.a, cfg.a2};
    const Point pts_b[2] = {cfg.b, cfg.b2};
    for (Point pa : pts_a)
        for (Point pb : pts_b) bp.push_back(dist(pa, pb));
    // Heights: distance from each endpoint to the other supporting line.
    const Point ua = normalized(cfg.a2 - cfg.a);
    const Point ub = normalized(cfg.b2 - cfg.b);
    const Point na{-ua.y, ua.x};
    const Point nb{-ub.y, ub.x};
    for (Point pb : pts_b) bp.push_back(std::abs(dot(pb - cfg.a, na)));
    for (Point pa : pts_a) bp.push_back(std::abs(dot(pa - cfg.b, nb)));
    if (cfg.classification == PairClass::Parallel) bp.push_back(cfg.d);
    return bp;
}

bool parallel_pair_singular(const SegmentPairConfig& cfg) {
    if (cfg.classification != PairClass::Parallel) return false;
    const Point ud = normalized(cfg.a2 - cfg.a);
    double ax0 = 0.0, ax1 = dot(cfg.a2 - cfg.a, ud);
    double bx0 = dot(cfg.b - cfg.a, ud), bx1 = dot(cfg.b2 - cfg.a, ud);
    if (ax1 < ax0) std::swap(ax0, ax1);
    if (bx1 < bx0) std::swap(bx0, bx1);
    return std::min(bx1, ax1) - std::max(bx0, ax0) > k_tau_deg * std::max(ax1 - ax0, bx1 - bx0);
}

std::uint64_t negative_clamp_count() { return g_negative_clamps.load(); }
void reset_negative_clamp_count() { g_negative_clamps.store(0); }

} // namespace mcd
