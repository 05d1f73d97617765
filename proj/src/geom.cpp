#include "mcd/geom.hpp"

#include <algorithm>
#include <limits>

namespace mcd {

std::vector<Point> Polygon::all_vertices() const {
    std::vector<Point> v(outer.begin(), outer.end());
    for (const auto& h : holes) v.insert(v.end(), h.begin(), h.end());
    return v;
}

std::vector<Segment> Polygon::all_edges() const {
    std::vector<Segment> e;
    auto add = [&e](const Ring& r) {
        for (size_t i = 0; i < r.size(); ++i) e.push_back({r[i], r[(i + 1) % r.size()]});
    };
    add(outer);
    for (const auto& h : holes) add(h);
    return e;
}

double Polygon::scale() const {
    double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& p : all_vertices()) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

double Polygon::perimeter() const {
    double per = 0.0;
    for (const auto& e : all_edges()) per += e.length();
    return per;
}

double Polygon::area() const {
    double a = std::abs(ring_signed_area(outer));
    for (const auto& h : holes) a -= std::abs(ring_signed_area(h));
    return a;
}

double Polygon::diameter() const {
    auto v = all_vertices();
    double d = 0.0;
    for (size_t i = 0; i < v.size(); ++i)
        for (size_t j = i + 1; j < v.size(); ++j) d = std::max(d, dist(v[i], v[j]));
    return d;
}

bool Polygon::convex() const {
    if (!holes.empty()) return false;
    const size_t n = outer.size();
    if (n < 3) return false;
    const double tol = k_tau_deg * scale() * scale();
    for (size_t i = 0; i < n; ++i) {
        Point a = outer[i], b = outer[(i + 1) % n], c = outer[(i + 2) % n];
        if (cross(b - a, c - b) < -tol) return false;
    }
    return true;
}

bool Polygon::contains(Point p) const {
    auto inside_ring = [&p](const Ring& r) {
        bool in = false;
        for (size_t i = 0, j = r.size() - 1; i < r.size(); j = i++) {
            if ((r[i].y > p.y) != (r[j].y > p.y)) {
                double xc = r[j].x + (r[i].x - r[j].x) * (p.y - r[j].y) / (r[i].y - r[j].y);
                if (p.x < xc) in = !in;
            }
        }
        return in;
    };
    if (!inside_ring(outer)) return false;
    for (const auto& h : holes)
        if (inside_ring(h)) return false;
    return true;
}

double ring_signed_area(const Ring& ring) {
    double a = 0.0;
    for (size_t i = 0; i < ring.size(); ++i) {
        const Point& p = ring[i];
        const Point& q = ring[(i + 1) % ring.size()];
        a += cross(p, q);
    }
    return a / 2.0;
}

bool point_on_segment(Point p, Point a, Point b, double tol) {
    if (std::abs(cross(b - a, p - a)) > tol * norm(b - a)) return false;
    double t = dot(p - a, b - a) / dot(b - a, b - a);
    return t >= -tol && t <= 1.0 + tol;
}

bool segments_cross(Point a, Point b, Point c, Point d, double scale) {
    const double tol = k_tau_deg * scale;
    double d1 = cross(b - a, c - a);
    double d2 = cross(b - a, d - a);
    double d3 = cross(d - c, a - c);
    double d4 = cross(d - c, b - c);
    const double t = tol * std::max(norm(b - a), norm(d - c));
    return ((d1 > t && d2 < -t) || (d1 < -t && d2 > t)) &&
           ((d3 > t && d4 < -t) || (d3 < -t && d4 > t));
}

bool ring_simple(const Ring& ring, double scale) {
    const size_t n = ring.size();
    const double tol = k_tau_deg * scale;
    for (size_t i = 0; i < n; ++i) {
        Point a = ring[i], b = ring[(i + 1) % n];
        if (dist(a, b) <= tol) return false;
        for (size_t j = i + 1; j < n; ++j) {
            Point c = ring[j], d = ring[(j + 1) % n];
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (adjacent) continue;
            if (segments_cross(a, b, c, d, scale)) return false;
            if (point_on_segment(c, a, b, tol) || point_on_segment(a, c, d, tol)) return false;
        }
    }
    return true;
}

Point intersect_lines(Point a, Point a2, Point b, Point b2) {
    const Point u = a2 - a;
    const Point v = b2 - b;
    const double nu = norm(u), nv = norm(v);
    const double scale = std::max({norm(a), norm(a2), norm(b), norm(b2), 1.0});
    if (nu <= k_tau_deg * scale || nv <= k_tau_deg * scale) throw DegenerateSegment();
    const double den = cross(u, v);
    if (std::abs(den) <= k_tau_par * nu * nv) throw ParallelLines();
    const double da = cross(a, a2);
    const double db = cross(b, b2);
    return {(da * v.x - db * u.x) / den, (da * v.y - db * u.y) / den};
}

double angle_between(Point a, Point a2, Point b, Point b2) {
    const Point u = a2 - a;
    const Point v = b2 - b;
    const double nu = norm(u), nv = norm(v);
    const double scale = std::max({norm(a), norm(a2), norm(b), norm(b2), 1.0});
    if (nu <= k_tau_deg * scale || nv <= k_tau_deg * scale) throw DegenerateSegment();
    return std::acos(clamp_unit(dot(u, v) / (nu * nv)));
}

double opposite(double x, Point v_pt, Point o, Point v, Point d, Point w) {
    const Point p = o + x * v;
    const Point pv = p - v_pt;
    const double den = cross(pv, w);
    const double scale = std::max({norm(p), norm(v_pt), norm(o), norm(d), 1.0});
    if (std::abs(den) <= k_tau_par * std::max(norm(pv), k_tau_deg * scale)) throw LineThroughVertexParallel();
    return cross(pv, v_pt - o) / den;
}

double opposite_parallel(double x, Point v_pt, Point b, Point v, Point d) {
    const Point p = b + x * v;
    const Point pv = p - v_pt;
    const double den = cross(pv, v);
    const double scale = std::max({norm(p), norm(v_pt), norm(b), norm(d), 1.0});
    if (std::abs(den) <= k_tau_par * std::max(norm(pv), k_tau_deg * scale)) throw LineThroughVertexParallel();
    return dot(d - b, v) - cross(pv, d - v_pt) / den;
}

std::vector<Point> convex_cover(std::vector<Point> pts) {
    if (pts.empty()) throw DegenerateInput("convex_cover: empty point set");
    std::sort(pts.begin(), pts.end(), [](Point a, Point b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Point> hull(2 * n);
    size_t k = 0;
    for (size_t i = 0; i < n; ++i) { // lower
        while (k >= 2 && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) k--;
        hull[k++] = pts[i];
    }
    for (size_t i = n - 1, t = k + 1; i-- > 0;) { // upper
        while (k >= t && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0) k--;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

Polygon validate_polygon(const std::vector<Ring>& rings) {
    if (rings.empty() || rings[0].size() < 3) throw TooFewVertices();
    Polygon poly;
    poly.outer = rings[0];
    for (size_t i = 1; i < rings.size(); ++i) {
        if (rings[i].size() < 3) throw TooFewVertices();
        poly.holes.push_back(rings[i]);
    }
    const double scale = poly.scale();
    if (scale <= 0.0) throw DegenerateInput("validate_polygon: zero-extent polygon");

    if (ring_signed_area(poly.outer) < 0.0) std::reverse(poly.outer.begin(), poly.outer.end());
    for (auto& h : poly.holes)
        if (ring_signed_area(h) > 0.0) std::reverse(h.begin(), h.end());

    if (!ring_simple(poly.outer, scale)) throw SelfIntersecting("outer ring self-intersects");
    for (const auto& h : poly.holes)
        if (!ring_simple(h, scale)) throw SelfIntersecting("hole ring self-intersects");

    Polygon outer_only{poly.outer, {}};
    for (size_t hi = 0; hi < poly.holes.size(); ++hi) {
        const Ring& h = poly.holes[hi];
        for (const auto& p : h)
            if (!outer_only.contains(p)) throw HoleOutsideOuter();
        for (size_t i = 0; i < h.size(); ++i) {
            Point a = h[i], b = h[(i + 1) % h.size()];
            for (size_t j = 0; j < poly.outer.size(); ++j) {
                Point c = poly.outer[j], d = poly.outer[(j + 1) % poly.outer.size()];
                if (segments_cross(a, b, c, d, scale)) throw HoleOutsideOuter();
            }
            for (size_t hj = 0; hj < poly.holes.size(); ++hj) {
                if (hj == hi) continue;
                const Ring& g = poly.holes[hj];
                for (size_t j = 0; j < g.size(); ++j)
                    if (segments_cross(a, b, g[j], g[(j + 1) % g.size()], scale))
                        throw SelfIntersecting("hole rings intersect");
            }
        }
    }
    return poly;
}

std::optional<double> line_param_of_intersection(Point a, Point b, Point c, Point d) {
    const Point u = b - a;
    const Point v = d - c;
    const double den = cross(u, v);
    if (std::abs(den) <= k_tau_par * norm(u) * norm(v)) return std::nullopt;
    return cross(c - a, v) / den;
}

} // namespace mcd
