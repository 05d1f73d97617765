#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "mcd/errors.hpp"

namespace mcd {

// Parallelism decision, relative to the product of the direction norms
// (equivalently 1e-12 on the sine of the angle between the lines).
inline constexpr double k_tau_par = 1e-12;
// Degeneracy decision, relative to the geometry scale.
inline constexpr double k_tau_deg = 1e-12;
// Angle tolerance for the obtuse/acute routing.
inline constexpr double k_tau_ang = 1e-12;
// Grid abscissae are kept at least this far from singular chord lengths.
inline constexpr double k_tau_sing = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    Point operator+(Point o) const { return {x + o.x, y + o.y}; }
    Point operator-(Point o) const { return {x - o.x, y - o.y}; }
    Point operator*(double s) const { return {x * s, y * s}; }
    Point operator/(double s) const { return {x / s, y / s}; }
    bool operator==(const Point&) const = default;
};

inline Point operator*(double s, Point p) { return p * s; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(a - b); }
inline Point normalized(Point a) { return a / norm(a); }

struct Segment {
    Point p;
    Point q;
    double length() const { return dist(p, q); }
    Point dir() const { return normalized(q - p); }
    Point at(double t) const { return p + (q - p) * t; }
};

// Outer ring counterclockwise, holes clockwise (validate_polygon reorients).
using Ring = std::vector<Point>;

struct Polygon {
    Ring outer;
    std::vector<Ring> holes;

    std::vector<Point> all_vertices() const;
    std::vector<Segment> all_edges() const;
    double scale() const; // bounding-box diagonal
    double perimeter() const; // outer + holes
    double area() const;      // outer minus holes
    double diameter() const;  // max vertex-vertex distance
    bool convex() const;      // outer convex, no holes
    bool contains(Point p) const; // even-odd, boundary unspecified
};

inline double clamp_unit(double v) { return v < -1.0 ? -1.0 : (v > 1.0 ? 1.0 : v); }

// Heaviside with H(0) = 0; breakpoint hits cost only a measure-zero error.
inline double heaviside(double x) { return x > 0.0 ? 1.0 : 0.0; }

double ring_signed_area(const Ring& ring);
bool ring_simple(const Ring& ring, double scale);

// Intersection of the supporting lines of AA2 and BB2 (Eq.-(30)-style determinants).
Point intersect_lines(Point a, Point a2, Point b, Point b2);

// Angle in [0, pi] between the direction vectors of the two segments.
double angle_between(Point a, Point a2, Point b, Point b2);

// y such that O + y*w, V and O + x*v are collinear. Throws
// LineThroughVertexParallel when the sight line through V runs parallel to w.
double opposite(double x, Point v_pt, Point o, Point v, Point d, Point w);

// Parallel-segment variant: x measured from b along v, result measured from the
// point of the target line closest to b, along v. d is a point of the target line.
double opposite_parallel(double x, Point v_pt, Point b, Point v, Point d);

std::vector<Point> convex_cover(std::vector<Point> points);

Polygon validate_polygon(const std::vector<Ring>& rings);

// t parameters such that a + t*(b-a) lies on the supporting line of the segment;
// nullopt when parallel.
std::optional<double> line_param_of_intersection(Point a, Point b, Point c, Point d);

bool point_on_segment(Point p, Point a, Point b, double tol);

// Proper crossing test for open segments (shared endpoints do not count).
bool segments_cross(Point a, Point b, Point c, Point d, double scale);

} // namespace mcd
