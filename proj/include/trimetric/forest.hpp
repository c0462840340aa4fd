#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trimetric/space.hpp"
#include "trimetric/tree.hpp"
#include "trimetric/trimming.hpp"

namespace trimetric {

// A metric forest: a metric base space and one rooted tree per base point.
// Vertex labels are globally unique across components.
class MetricForest {
public:
    MetricForest() = default;  // forest over the empty base
    MetricForest(PseudometricSpace base, std::vector<MetricTree> components);

    const PseudometricSpace& base() const { return base_; }
    const std::vector<MetricTree>& components() const { return components_; }
    const MetricTree& component(std::size_t base_point) const;

    std::size_t edge_count() const;

private:
    PseudometricSpace base_;
    std::vector<MetricTree> components_;
};

struct LeafOrigin {
    std::size_t base_point;  // index into the base
    std::size_t vertex;      // index into that component
};

struct LeafSpaceResult {
    PseudometricSpace space;
    std::vector<LeafOrigin> origins;  // aligned with space points
};

// The forest pseudometric on the disjoint union of component leaves:
// within a component the tree path metric, across components through both
// roots plus the base distance.
LeafSpaceResult leaf_space(const MetricForest& forest);

// The forest with every base point carrying a single zero-length edge;
// its leaf space reproduces the base.
MetricForest segment_forest(const PseudometricSpace& base);

// The canonical forest with base t^n(X) and leaf space X: one vertex per
// point of every stage X_0 .. X_n, each level-i point joined to its image
// in level i+1 by an edge of length underline_d_i.  Level-0 vertices keep
// the original point labels; deeper vertices are labeled "<point>@<level>".
// n may exceed the height (the chain is constant beyond it); n = 0 is
// rejected with BadDepth.
MetricForest canonical_forest(const TrimChain& chain, std::size_t n);

// The main construction: base c(X), leaf space X.  Trims the space and
// stacks all levels; height-0 spaces get the zero-length segment shape.
MetricForest canonical_forest(const PseudometricSpace& space);

// Leaf-adjacent edge lengths zeroed in every component.
MetricForest forest_bullet(const MetricForest& forest);

// reduce_tree applied to every component.
MetricForest reduce_forest(const MetricForest& forest);

// Gluing: requires base(zeta) = leaf space of eta as labeled spaces.  Each
// leaf a of an eta component is identified with the root of zeta's
// component over a; the result is a forest over eta's base with the same
// leaf space as zeta.
MetricForest compose_forests(const MetricForest& zeta, const MetricForest& eta);

}  // namespace trimetric
