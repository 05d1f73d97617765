#include "mcd/triangle.hpp"

#include <algorithm>
#include <cmath>

namespace mcd {

TriangleSides solve_triangle(double a, double b, double gamma) {
    if (!(a > 0.0) || !(b > 0.0) || !(gamma > 0.0) || !(gamma < M_PI))
        throw DegenerateInput("solve_triangle: need a,b > 0 and 0 < gamma < pi");
    TriangleSides t;
    t.a = a;
    t.b = b;
    t.gamma = gamma;
    t.c = std::sqrt(a * a + b * b - 2.0 * a * b * std::cos(gamma));
    if (!(t.c > 0.0)) throw DegenerateInput("solve_triangle: collapsed triangle");
    t.alpha = std::acos(clamp_unit((b - a * std::cos(gamma)) / t.c));
    t.beta = std::acos(clamp_unit((a - b * std::cos(gamma)) / t.c));
    t.area = 0.5 * a * b * std::sin(gamma);
    return t;
}

TriangleSides triangle_from_points(Point pa, Point pb, Point pc) {
    const double a = dist(pb, pc);
    const double b = dist(pa, pc);
    const double gamma = angle_between(pc, pa, pc, pb);
    return solve_triangle(a, b, gamma); // alpha at pa, beta at pb, gamma at pc
}

TriangleDensity::TriangleDensity(TriangleSides s) : sides(s) {
    // Canonicalize so gamma is the largest angle (c the longest side); Eq.-(16)
    // routing needs that labeling, and it leaves the acute case unchanged.
    struct Slot {
        double side, angle;
    };
    Slot slots[3] = {{s.a, s.alpha}, {s.b, s.beta}, {s.c, s.gamma}};
    std::sort(slots, slots + 3, [](const Slot& l, const Slot& r) { return l.angle < r.angle; });
    sides.a = slots[0].side;
    sides.alpha = slots[0].angle;
    sides.b = slots[1].side;
    sides.beta = slots[1].angle;
    sides.c = slots[2].side;
    sides.gamma = slots[2].angle;
    sides.area = s.area;
    obtuse = sides.gamma > M_PI_2 + k_tau_ang;
}

double rho_vertex_ac(double ell, double alpha, double beta, double gamma, double a, double b,
                     double c) {
    if (!(ell > 0.0) || !(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw DegenerateInput("rho_vertex_ac");
    const double area = 0.5 * a * b * std::sin(gamma);
    const double h = 2.0 * area / c;
    double out = 0.0;
    if (heaviside(h - ell) != 0.0)
        out += gamma + 0.5 * std::sin(2.0 * alpha) + 0.5 * std::sin(2.0 * beta);
    if (heaviside(ell - h) != 0.0) {
        const double u = clamp_unit(h / ell);
        const double root = u * std::sqrt(std::max(0.0, 1.0 - u * u));
        if (heaviside(b - ell) != 0.0)
            out += std::asin(u) - alpha + 0.5 * std::sin(2.0 * alpha) - root;
        if (heaviside(a - ell) != 0.0)
            out += std::asin(u) - beta + 0.5 * std::sin(2.0 * beta) - root;
    }
    return c * c / (4.0 * area) * out;
}

double rho_vertex_obt(double ell, double alpha, double beta, double gamma, double a, double b,
                      double c) {
    if (!(ell > 0.0) || !(a > 0.0) || !(b > 0.0) || !(c > 0.0))
        throw DegenerateInput("rho_vertex_obt");
    const double area = 0.5 * b * c * std::sin(alpha);
    double out = 0.0;
    if (heaviside(b - ell) != 0.0)
        out += alpha + 0.5 * std::sin(2.0 * beta) + 0.5 * std::sin(2.0 * gamma);
    if (heaviside(ell - b) != 0.0 && heaviside(c - ell) != 0.0) {
        const double u = clamp_unit(2.0 * area / (a * ell));
        out += std::asin(u) - beta + 0.5 * std::sin(2.0 * beta) -
               u * std::sqrt(std::max(0.0, 1.0 - u * u));
    }
    return a * a / (4.0 * area) * out;
}

double triangle_cld(const TriangleDensity& tri, double ell) {
    const TriangleSides& s = tri.sides;
    if (!(ell > 0.0)) throw DegenerateInput("triangle_cld: ell must be positive");
    if (ell >= std::max({s.a, s.b, s.c})) return 0.0;
    if (tri.obtuse) {
        return rho_vertex_obt(ell, s.alpha, s.beta, s.gamma, s.a, s.b, s.c) +
               rho_vertex_obt(ell, s.beta, s.alpha, s.gamma, s.b, s.a, s.c) +
               rho_vertex_ac(ell, s.alpha, s.beta, s.gamma, s.a, s.b, s.c);
    }
    return rho_vertex_ac(ell, s.beta, s.gamma, s.alpha, s.b, s.c, s.a) +
           rho_vertex_ac(ell, s.gamma, s.alpha, s.beta, s.c, s.a, s.b) +
           rho_vertex_ac(ell, s.alpha, s.beta, s.gamma, s.a, s.b, s.c);
}

std::vector<double> triangle_breakpoints(const TriangleSides& s) {
    return {2.0 * s.area / s.a, 2.0 * s.area / s.b, 2.0 * s.area / s.c, s.a, s.b, s.c};
}

} // namespace mcd
