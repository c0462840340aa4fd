#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "trimetric/space.hpp"

namespace trimetric {

inline constexpr std::size_t kIsometryBound = 12;

// Searches for a distance-preserving bijection a -> b (returned as a-index
// to b-index).  Backtracking pruned by sorted per-point distance profiles.
// Throws SizeBound when either space exceeds the bound (factorial search).
std::optional<std::vector<std::size_t>> find_isometry(const PseudometricSpace& a,
                                                      const PseudometricSpace& b,
                                                      std::size_t bound = kIsometryBound);

}  // namespace trimetric
