#pragma once

#include <vector>

namespace weightdec {

// A pair of consecutive extrema of a Chebyshev polynomial T_D, mapped into
// ratio coordinates:
//   s = (1 - cos(gamma*pi/D))/2,  t = (1 - cos((gamma+1)*pi/D))/2,
// with D = 2*d - delta. Each such pair is a weight-ratio boundary case that a
// d-query exact algorithm can decide.
struct BoundaryPair {
    double s = 0.0;   // in [0, 1)
    double t = 0.0;   // in (0, 1]
    int d = 0;        // query budget
    int delta = 0;    // 0 or 1
    int gamma = 0;    // extremum index within T_D

    int degree() const { return 2 * d - delta; }
};

// First-kind Chebyshev polynomial T_m(x). Uses the trigonometric form on
// [-1, 1] and the hyperbolic branch outside, so |T_m| stays exact near the
// endpoints.
double cheb_T(int m, double x);

// gamma-th extremum of T_m: cos(gamma*pi/m), for 0 <= gamma <= m.
double extremum(int m, int gamma);

// The set S_d, sorted by (delta asc, gamma asc). |S_1| = 2, |S_d| = 4d-3 for
// d >= 2: the full T_{2d} chain plus the interior T_{2d-1} pairs; the
// endpoint pairs of the odd-degree family are excluded.
std::vector<BoundaryPair> boundary_pairs(int d);

namespace detail {

// Memoized S_d, grown on demand. References stay valid for the process
// lifetime; safe to read from multiple threads.
const std::vector<BoundaryPair>& cached_boundary_pairs(int d);

}  // namespace detail

}  // namespace weightdec
