#pragma once

#include "oceanic/game.hpp"

namespace oceanic {

// Integral of x^s * (1-x)^t over [lo, hi] intersected with [0, 1].
// Evaluated with a fixed-order Gauss-Legendre rule, which integrates these
// polynomial integrands exactly (degree s+t up to 63) and, unlike the
// alternating binomial expansion, has no cancellation. Relative error is a
// few ulps; returns 0 for an empty window. Requires s, t >= 0.
double segment_integral(int s, int t, double lo, double hi);

// Pivot probabilities for any quota in (0,1) by integrating the pivot window
// of each major over the positions of the others:
//   phi_i = sum over subsets S of the others of
//           integral over [ (q - r_i - r(S))/alpha , (q - r(S))/alpha ] of
//           x^|S| * (1-x)^(m-1-|S|) dx, windows clamped to [0,1].
// Subsets are enumerated in Gray-code order with an incrementally updated
// r(S); majors are processed in a canonical order so permuting the input
// permutes the output bit-for-bit.
// Throws HypothesisError("TooManyMajors") for m > 24 and
// HypothesisError("OceanlessGame") when alpha == 0 (a game without an ocean
// is a finite voting game; use the finite oracle with n = 0).
ValueProfile exact_values(const NormalizedGame& g);

// The ocean's pivot probability computed directly (not as 1 - sum):
//   Phi = sum over subsets S of all majors of x^|S| * (1-x)^(m-|S|)
//         at x = (q - r(S))/alpha, for x inside (0,1).
// Independent route used to cross-check exact_values.
double exact_ocean_direct(const NormalizedGame& g);

} // namespace oceanic
