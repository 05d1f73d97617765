#pragma once

#include "mcd/curve.hpp"
#include "mcd/geom.hpp"
#include "mcd/pair_density.hpp"

namespace mcd {

// Chord-length measure density of a convex polygon: the sum of the pair
// densities over all n(n-1)/2 side pairs (Prop. 5.1). Throws NotConvex.
double convex_mcd(const Polygon& poly, double ell);

// Critical chord lengths for the convex pair sum; singular receives the
// parallel-side distances whose overlap makes the density diverge.
void convex_breakpoints(const Polygon& poly, std::vector<double>& breakpoints,
                        std::vector<double>& singular);

// Samples the convex density over a grid; evaluations run concurrently.
DensityCurve convex_sample_curve(const Polygon& poly, const GridSpec& spec);

// Evaluates f over the grid with a thread pool; deterministic by construction.
std::vector<double> parallel_map(const std::vector<double>& grid,
                                 const std::function<double(double)>& f);

} // namespace mcd
