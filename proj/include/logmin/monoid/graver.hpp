#pragma once

#include "logmin/monoid/integer.hpp"

#include <cstdint>

#include <vector>

namespace logmin::monoid {

// Graver basis (both signs) of the sublattice of Z^n generated by the given vectors, computed by the
// completion procedure: critical sums of non-conformal pairs, reduced by conformal subtraction and
// processed in order of increasing 1-norm. Output sorted by 1-norm, then lexicographically.
// Throws BoundExceeded once more than max_size elements have been collected.
std::vector<Vec> graver_basis(const std::vector<Vec>& lattice_generators, std::size_t n,
                              std::size_t max_size = SIZE_MAX);

// a is conformally below b: a_i b_i >= 0 and |a_i| <= |b_i| for all i
bool conformal_le(const Vec& a, const Vec& b);

}  // namespace logmin::monoid
