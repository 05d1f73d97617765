#pragma once

#include <vector>

#include "mcd/geom.hpp"

namespace mcd {

struct TriangleSides {
    double a = 0.0, b = 0.0, c = 0.0;          // side lengths
    double alpha = 0.0, beta = 0.0, gamma = 0.0; // opposite angles, radians
    double area = 0.0;
};

// Sides a, b enclosing the angle gamma; remaining parts by the cosine/sine theorems.
TriangleSides solve_triangle(double a, double b, double gamma);

TriangleSides triangle_from_points(Point pa, Point pb, Point pc);

struct TriangleDensity {
    TriangleSides sides;
    bool obtuse = false; // max angle > pi/2 + tau

    explicit TriangleDensity(TriangleSides s);
};

// Per-vertex chord measure density, all opposite vertices acute: the full
// three-Heaviside expression. Arguments follow the (alpha, beta, gamma, a, b, c)
// slot convention with the dominating vertex's angle in the gamma slot.
double rho_vertex_ac(double ell, double alpha, double beta, double gamma, double a, double b,
                     double c);

// Per-vertex density when the triangle lies entirely on one side of the height
// from the dominating vertex (its angle in the alpha slot, opposite side a).
double rho_vertex_obt(double ell, double alpha, double beta, double gamma, double a, double b,
                      double c);

// Total chord-length measure density of the triangle; support is (0, longest side).
double triangle_cld(const TriangleDensity& tri, double ell);

// Chord lengths where the density has a kink: the three heights and side lengths.
std::vector<double> triangle_breakpoints(const TriangleSides& s);

} // namespace mcd
