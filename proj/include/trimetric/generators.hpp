#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "trimetric/forest.hpp"
#include "trimetric/space.hpp"
#include "trimetric/tree.hpp"

namespace trimetric {

// Deterministic 64-bit generator (splitmix64).  Hand-rolled on purpose:
// identical output on every platform and standard library, which the
// seeded CLI promises.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next();
    // Uniform-ish value in [0, n); n must be positive.  The modulo bias is
    // irrelevant for test-data purposes.
    std::uint64_t below(std::uint64_t n);

private:
    std::uint64_t state_;
};

// "p0", "p1", ...  zero-padded to a common width so lexicographic and
// numeric order coincide.
std::vector<std::string> point_labels(std::size_t count);

// Random pseudometric space: half-integer distances in [0, 4] with zeros
// sprinkled in, then repaired into a pseudometric by shortest paths.
PseudometricSpace random_space(SplitMix64& rng, std::size_t points);

// Random metric space: half-integer distances in [4, 8], which satisfy the
// triangle inequality outright and are strictly positive.
PseudometricSpace random_metric_space(SplitMix64& rng, std::size_t points);

// Random symmetric zero-diagonal matrix with half-integer entries in
// [-4, 4]; not a pseudometric in general.
Matrix random_symmetric(SplitMix64& rng, std::size_t points);

// A function with f >= -underline_d pointwise, hugging the bound at random
// points; always a legal drift for the space.
PointFunction random_drift(SplitMix64& rng, const PseudometricSpace& space);

// Random attachment tree with half-integer lengths (zeros included).
// Vertices "t0", "t1", ...; if rooted, vertex 0 is the root and the tree
// needs at least two vertices.
MetricTree random_tree(SplitMix64& rng, std::size_t vertices, bool rooted);

// One random rooted tree per base point, between min_vertices (at least 2)
// and max_vertices vertices each; vertex labels "<base label>_<j>".
MetricForest random_forest_over(SplitMix64& rng, const PseudometricSpace& base,
                                std::size_t min_vertices, std::size_t max_vertices);

// Forest over a fresh random metric base.
MetricForest random_forest(SplitMix64& rng, std::size_t base_points,
                           std::size_t min_vertices, std::size_t max_vertices);

}  // namespace trimetric
