#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "trimetric/rational.hpp"
#include "trimetric/space.hpp"

namespace trimetric {

// A finite metric tree: connected, acyclic, non-negative edge lengths,
// optionally rooted.  A rooted tree must have at least one edge; its
// leaves are the degree-1 vertices other than the root.  For an unrooted
// tree every degree-1 vertex is a leaf.  Construction validates all of
// this; instances are immutable values.
class MetricTree {
public:
    struct Edge {
        std::size_t u, v;
        Rational length;
    };

    MetricTree(std::vector<std::string> labels, std::vector<Edge> edges,
               std::optional<std::size_t> root);

    std::size_t vertex_count() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t v) const;
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<std::size_t> root() const { return root_; }
    bool rooted() const { return root_.has_value(); }

    std::size_t index_of(const std::string& label) const;  // throws UnknownVertex
    std::size_t degree(std::size_t v) const;
    // (neighbor, edge index) pairs in edge order.
    const std::vector<std::pair<std::size_t, std::size_t>>& adjacent(std::size_t v) const;

    bool is_leaf(std::size_t v) const;
    std::vector<std::size_t> leaf_indices() const;

private:
    std::vector<std::string> labels_;
    std::vector<Edge> edges_;
    std::optional<std::size_t> root_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> adj_;
};

// Path lengths from u to every vertex (single traversal, exact sums).
std::vector<Rational> distances_from(const MetricTree& tree, std::size_t u);

// Sum of edge lengths along the unique simple u-v path.
Rational tree_path_metric(const MetricTree& tree, std::size_t u, std::size_t v);

// The path pseudometric restricted to the tree's leaves (rooted or not,
// using the tree's own leaf notion).  Point labels are the vertex labels.
PseudometricSpace tree_leaf_space(const MetricTree& tree);

// Leaf space of a tree viewed as unrooted: all degree-1 vertices count.
// Requires at least two vertices.
PseudometricSpace leaf_space_unrooted(const MetricTree& tree);

// Lengths of all leaf-adjacent edges set to zero, everything else kept.
MetricTree tree_bullet(const MetricTree& tree);

// Repeatedly removes non-root degree-2 vertices (merging their two edges,
// lengths added) and contracts zero-length edges whose both endpoints have
// degree != 1.  Leaf-space distances are unchanged; the root survives.
MetricTree reduce_tree(const MetricTree& tree);

// Unordered pairs of leaves sharing the same neighbor (rooted trees).
std::vector<std::pair<std::size_t, std::size_t>> contiguous_leaves(const MetricTree& tree);

// Rooted-to-unrooted conversion preserving the leaf space: degree-1 roots
// are deleted edge by edge.  A single-edge tree collapses to one vertex
// (the one-point leaf space case).
MetricTree unroot_tree(const MetricTree& tree);

}  // namespace trimetric
