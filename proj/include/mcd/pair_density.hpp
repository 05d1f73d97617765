#pragma once

#include <cstdint>
#include <vector>

#include "mcd/geom.hpp"

namespace mcd {

enum class PairClass { General, Parallel, ConcurrentAtEndpoint };

// Cartesian front end for a pair of segments: classification plus the derived
// quantities the closed forms consume.
struct SegmentPairConfig {
    Point a, a2, b, b2;
    PairClass classification = PairClass::General;
    Point o{};          // supporting-line intersection (general case)
    double gamma = 0.0; // angle between the rays from o, in (0, pi)
    double d = 0.0;     // supporting-line distance (parallel case)

    static SegmentPairConfig from_points(Point a, Point a2, Point b, Point b2);
};

// Density of chords cutting two concurring segments of lengths a and b that
// form an angle gamma (Prop. 3.1: the sum of the two dominated-vertex parts).
double rho_concurrent(double a, double b, double gamma, double ell);

// One dominated-vertex part: chords crossing the length-a segment, dominated by
// its far endpoint. Selects among the three closed forms by the geometry of the
// completing triangle. Zero-length segments contribute zero.
double rho_aB(double ell, double alpha, double beta, double gamma, double a, double b, double c);

// General pair via the four-term inclusion-exclusion from the lines'
// intersection point (Prop. 4.1). Throws ParallelLines for parallel input;
// segments straddling the intersection point are split there first.
double rho_segments(Point a, Point a2, Point b, Point b2, double ell);

// Same inclusion-exclusion expressed in ray distances from the shared origin.
double rho_segments_on_rays(double x_near, double x_far, double y_near, double y_far,
                            double gamma, double ell);

// Parallel pair (Prop. 4.2); supporting lines a distance d > 0 apart; support
// starts at d with an integrable 1/sqrt divergence when the overlap is positive.
double rho_parallel(Point a, Point a2, Point b, Point b2, double ell);

// Coordinate form: source interval [ax0, ax1] and target interval [bx0, bx1]
// measured along the common direction with aligned origins.
double rho_parallel_coords(double ax0, double ax1, double bx0, double bx1, double d, double ell);

// Chord lengths at which a pair term can kink: endpoint distances and
// endpoint-to-other-line heights (plus d for parallel pairs).
std::vector<double> pair_breakpoints(const SegmentPairConfig& cfg);

// True when the parallel pair's density diverges at ell = d (positive overlap).
bool parallel_pair_singular(const SegmentPairConfig& cfg);

// Count of negative round-off clamps below -1e-9 seen in inclusion-exclusion sums.
std::uint64_t negative_clamp_count();
void reset_negative_clamp_count();

} // namespace mcd
