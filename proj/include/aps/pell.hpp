#pragma once

#include <utility>
#include <vector>

#include "aps/arith.hpp"

namespace aps {

/// Fundamental solution (u0, v0) of x^2 - D y^2 = 1 (D > 0 not a square).
std::pair<Int, Int> pell_unit(const Int& D);

/// Solutions with x, y >= 0 generating every solution of x^2 - D y^2 = c
/// under the unit and sign changes, found in the classical bounded window.
std::vector<std::pair<Int, Int>> pell_fundamental(const Int& D, const Int& c);

/// The first `count` solutions of x^2 - D y^2 = c with x, y >= 0, by
/// increasing x. Empty when none exist. Throws for square D.
std::vector<std::pair<Int, Int>> pell_solve(const Int& D, const Int& c, std::size_t count);

/// The first `count` n >= 0 with q1 n + a1^2 and q2 n + a2^2 both squares.
/// Uses the Pell branch when q1, q2 > 0 and q1 q2 is not a square; otherwise
/// scans n up to `scan_bound` (exhaustive when the set is finite).
std::vector<Int> ap_intersection(const Int& q1, const Int& a1, const Int& q2, const Int& a2, std::size_t count,
                                 long scan_bound = 10000000);

/// {0, 4s, 4s(4s^2-1), 8s(8s^4-6s^2+1), 8s(32s^6-40s^4+14s^2-1)}, each
/// checked to give squares in both (s-1)n + 1 and (s+1)n + 1.
std::vector<Int> ej48_family(long s);

}  // namespace aps
