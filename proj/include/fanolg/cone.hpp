#pragma once

#include "fanolg/core.hpp"

#include <vector>

namespace fanolg {

using IntVector = std::vector<Integer>;

// Extreme rays of the pointed cone {y : <a, y> >= 0 for every row a}, by the
// double description method. Rays are primitive and sorted. Throws when the
// rows do not span (cone not pointed).
std::vector<IntVector> cone_extreme_rays(const std::vector<IntVector>& rows, std::size_t dim);

// Extreme rays of cone(generators); redundant generators dropped.
std::vector<IntVector> cone_generators_minimal(const std::vector<IntVector>& generators, std::size_t dim);

Integer dot(const IntVector& a, const IntVector& b);

}  // namespace fanolg
