#pragma once

#include "debell/exact.hpp"

#include <vector>

namespace debell {

/// d_n = n! sum_{i=0}^{n} (-1)^i / i!.
Integer derangement(unsigned n);

/// d_{k,r}: derangements of [k+r] whose first r elements lie in distinct cycles,
/// read off k! [t^k] t^r e^{-t} / (1-t)^{r+1} with the given series order (>= k).
Integer r_derangement_egf(unsigned k, unsigned r, unsigned order);
inline Integer r_derangement_egf(unsigned k, unsigned r) { return r_derangement_egf(k, r, k); }

/// d_{0,r}, ..., d_{k_max,r} from a single series expansion.
std::vector<Integer> r_derangement_row(unsigned r, unsigned k_max);

/// d_{k,r} = sum_{j=s}^{k} C(j-1, s-1) k!/(k-j)! d_{k-j, r-s}, pivot 1 <= s <= r.
/// Row r = 0 is the classical d_k. Inner levels reuse min(s, r') as their pivot.
/// Throws std::invalid_argument for s outside 1..r when r >= 1.
Integer r_derangement_rec(unsigned k, unsigned r, unsigned s);

/// Recurrence with pivot s = r (and the base row when r = 0).
Integer r_derangement_rec(unsigned k, unsigned r);

}  // namespace debell
