#pragma once

#include "oceanic/game.hpp"

namespace oceanic {

// c_s = s! * (1/s! - 1/(s-1)! + ... + (-1)^s) = (-1)^s * D_s, where D_s is
// the number of derangements of s items. Computed from the exact integer
// recurrence D_s = (s-1)(D_{s-1} + D_{s-2}); the alternating floating-point
// series cancels catastrophically for large s. int64 holds D_s up to s = 20,
// hence the guard.
double c_coefficient(int s);

// Pivot probabilities for a two-miner game with quota 1/2, by region:
//   delta1 (r1+r2 <= 1/2): phi_1 = r1*(alpha - r2)/alpha^2
//   delta2 (all of r1, r2, alpha < 1/2): phi_1 = ((1 - 2*r2)/(2*alpha))^2
//   delta3 (r1 >= 1/2): phi_1 = 1
//   delta4 (r2 >= 1/2): phi_1 = 0
// and symmetrically for phi_2. Throws HypothesisError("UnsupportedShape")
// unless m == 2 and quota == 1/2.
ValueProfile two_miner_values(const NormalizedGame& g);

// True when quota == 1/2, sum of majors < 1/2 and alpha >= 1/2 (the
// ocean-majority hypothesis of the interior formula).
bool is_interior(const NormalizedGame& g);

// Pivot probabilities for an ocean-majority game with quota 1/2:
//   phi_i = (r_i / alpha^m) * sum over subsets S of the other majors of
//           c_|S| * prod_{j in S} r_j * prod_{k not in S} (alpha - r_k).
// The subset sum is accumulated by a size-grouped recurrence (identical term
// set, O(m^2) per major). Majors are processed in a canonical order so that
// permuting the input permutes the output bit-for-bit.
// Throws HypothesisError("NotInteriorCase") when the hypothesis fails and
// HypothesisError("TooManyMajors") for m > 20.
ValueProfile interior_values(const NormalizedGame& g);

} // namespace oceanic
