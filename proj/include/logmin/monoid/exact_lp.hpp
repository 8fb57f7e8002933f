#pragma once

#include "logmin/monoid/integer.hpp"

#include <optional>
#include <span>
#include <vector>

// Exact rational feasibility via two-phase simplex with Bland's rule.
namespace logmin::monoid::lp {

using RatVec = std::vector<Rational>;

// some x >= 0 with A x = b (A given row-major)
std::optional<RatVec> feasible_point(const std::vector<RatVec>& A, const RatVec& b);

// target in the rational cone spanned by gens
bool in_cone(std::span<const Vec> gens, const Vec& target);

// integer w with w.v >= 1 for every v, if the vectors span a pointed cone avoiding 0
std::optional<Vec> strictly_positive_functional(std::span<const Vec> vecs, std::size_t dim);

// x lies in the smallest face of cone(gens) containing point; x and point are assumed in the cone
bool in_face_of(std::span<const Vec> gens, const Vec& point, const Vec& x);

}  // namespace logmin::monoid::lp
