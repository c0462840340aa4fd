#include "trimetric/tree.hpp"

#include <algorithm>
#include <unordered_set>

#include "trimetric/errors.hpp"

namespace trimetric {

MetricTree::MetricTree(std::vector<std::string> labels, std::vector<Edge> edges,
                       std::optional<std::size_t> root)
    : labels_(std::move(labels)), edges_(std::move(edges)), root_(root) {
    const std::size_t n = labels_.size();
    if (n == 0) throw InvalidTree("no vertices");
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty()) throw InvalidTree("empty vertex label");
        if (!seen.insert(l).second) throw InvalidTree("duplicate vertex label: " + l);
    }
    if (edges_.size() + 1 != n)
        throw InvalidTree("edge count " + std::to_string(edges_.size()) + " for " +
                          std::to_string(n) + " vertices");
    adj_.resize(n);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
        const Edge& ed = edges_[e];
        if (ed.u >= n || ed.v >= n) throw InvalidTree("edge endpoint out of range");
        if (ed.u == ed.v) throw InvalidTree("self-loop at " + labels_[ed.u]);
        if (ed.length.is_negative())
            throw InvalidTree("negative length on edge " + labels_[ed.u] + "--" + labels_[ed.v]);
        adj_[ed.u].emplace_back(ed.v, e);
        adj_[ed.v].emplace_back(ed.u, e);
    }
    // |E| = |V|-1 plus connectivity makes it a tree.
    std::vector<bool> seen_v(n, false);
    std::vector<std::size_t> stack{0};
    seen_v[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto [w, e] : adj_[v])
            if (!seen_v[w]) {
                seen_v[w] = true;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) throw InvalidTree("not connected");
    if (root_) {
        if (*root_ >= n) throw InvalidTree("root out of range");
        if (edges_.empty()) throw InvalidTree("rooted tree needs at least one edge");
    }
}

const std::string& MetricTree::label(std::size_t v) const {
    if (v >= vertex_count()) throw UnknownVertex("#" + std::to_string(v));
    return labels_[v];
}

std::size_t MetricTree::index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw UnknownVertex(label);
    return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t MetricTree::degree(std::size_t v) const {
    if (v >= vertex_count()) throw UnknownVertex("#" + std::to_string(v));
    return adj_[v].size();
}

const std::vector<std::pair<std::size_t, std::size_t>>& MetricTree::adjacent(
    std::size_t v) const {
    if (v >= vertex_count()) throw UnknownVertex("#" + std::to_string(v));
    return adj_[v];
}

bool MetricTree::is_leaf(std::size_t v) const {
    if (degree(v) != 1) return false;
    return !(root_ && *root_ == v);
}

std::vector<std::size_t> MetricTree::leaf_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertex_count(); ++v)
        if (is_leaf(v)) out.push_back(v);
    return out;
}

std::vector<Rational> distances_from(const MetricTree& tree, std::size_t u) {
    if (u >= tree.vertex_count()) throw UnknownVertex("#" + std::to_string(u));
    std::vector<Rational> dist(tree.vertex_count(), Rational(0));
    std::vector<bool> seen(tree.vertex_count(), false);
    std::vector<std::size_t> stack{u};
    seen[u] = true;
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        for (auto [w, e] : tree.adjacent(v))
            if (!seen[w]) {
                seen[w] = true;
                dist[w] = dist[v] + tree.edges()[e].length;
                stack.push_back(w);
            }
    }
    return dist;
}

Rational tree_path_metric(const MetricTree& tree, std::size_t u, std::size_t v) {
    if (v >= tree.vertex_count()) throw UnknownVertex("#" + std::to_string(v));
    return distances_from(tree, u)[v];
}

namespace {

PseudometricSpace leaf_space_impl(const MetricTree& tree, const std::vector<std::size_t>& leaves) {
    std::vector<std::string> labels;
    labels.reserve(leaves.size());
    for (std::size_t v : leaves) labels.push_back(tree.label(v));
    Matrix m(leaves.size(), std::vector<Rational>(leaves.size(), Rational(0)));
    for (std::size_t i = 0; i < leaves.size(); ++i) {
        auto dist = distances_from(tree, leaves[i]);
        for (std::size_t j = 0; j < leaves.size(); ++j)
            if (i != j) m[i][j] = dist[leaves[j]];
    }
    return PseudometricSpace(std::move(labels), m);
}

}  // namespace

PseudometricSpace tree_leaf_space(const MetricTree& tree) {
    return leaf_space_impl(tree, tree.leaf_indices());
}

PseudometricSpace leaf_space_unrooted(const MetricTree& tree) {
    if (tree.vertex_count() < 2) throw TooSmall("leaf_space_unrooted", tree.vertex_count(), 2);
    std::vector<std::size_t> leaves;
    for (std::size_t v = 0; v < tree.vertex_count(); ++v)
        if (tree.degree(v) == 1) leaves.push_back(v);
    return leaf_space_impl(tree, leaves);
}

MetricTree tree_bullet(const MetricTree& tree) {
    std::vector<MetricTree::Edge> edges = tree.edges();
    for (auto& e : edges)
        if (tree.is_leaf(e.u) || tree.is_leaf(e.v)) e.length = Rational(0);
    return MetricTree(tree.labels(), std::move(edges), tree.root());
}

namespace {

// Mutable scratch representation used by the rewrite loops below.
struct TreeScratch {
    std::vector<std::string> labels;
    std::vector<MetricTree::Edge> edges;
    std::optional<std::size_t> root;

    explicit TreeScratch(const MetricTree& t)
        : labels(t.labels()), edges(t.edges()), root(t.root()) {}

    std::size_t degree(std::size_t v) const {
        std::size_t d = 0;
        for (const auto& e : edges) d += (e.u == v) + (e.v == v);
        return d;
    }

    void erase_vertex(std::size_t v) {  // v must have no incident edges
        labels.erase(labels.begin() + static_cast<std::ptrdiff_t>(v));
        for (auto& e : edges) {
            if (e.u > v) --e.u;
            if (e.v > v) --e.v;
        }
        if (root && *root > v) --*root;
    }

    MetricTree freeze() const { return MetricTree(labels, edges, root); }
};

}  // namespace

MetricTree reduce_tree(const MetricTree& tree) {
    TreeScratch t(tree);
    for (;;) {
        bool changed = false;

        // Non-root degree-2 vertex: splice its two edges into one.
        for (std::size_t v = 0; v < t.labels.size() && !changed; ++v) {
            if (t.root && *t.root == v) continue;
            if (t.degree(v) != 2) continue;
            std::size_t e1 = SIZE_MAX, e2 = SIZE_MAX;
            for (std::size_t e = 0; e < t.edges.size(); ++e)
                if (t.edges[e].u == v || t.edges[e].v == v) (e1 == SIZE_MAX ? e1 : e2) = e;
            std::size_t a = t.edges[e1].u == v ? t.edges[e1].v : t.edges[e1].u;
            std::size_t b = t.edges[e2].u == v ? t.edges[e2].v : t.edges[e2].u;
            Rational len = t.edges[e1].length + t.edges[e2].length;
            t.edges.erase(t.edges.begin() + static_cast<std::ptrdiff_t>(e2));
            t.edges.erase(t.edges.begin() + static_cast<std::ptrdiff_t>(e1));
            t.edges.push_back({a, b, len});
            t.erase_vertex(v);
            changed = true;
        }
        if (changed) continue;

        // Zero-length edge with both endpoints of degree != 1: contract it.
        // Leaf-adjacent zero edges stay.  The surviving endpoint is the
        // root when the root is involved, else the lower index.
        for (std::size_t e = 0; e < t.edges.size() && !changed; ++e) {
            if (!t.edges[e].length.is_zero()) continue;
            std::size_t u = t.edges[e].u, v = t.edges[e].v;
            if (t.degree(u) == 1 || t.degree(v) == 1) continue;
            std::size_t keep = std::min(u, v), drop = std::max(u, v);
            if (t.root && *t.root == drop) std::swap(keep, drop);
            t.edges.erase(t.edges.begin() + static_cast<std::ptrdiff_t>(e));
            for (auto& ed : t.edges) {
                if (ed.u == drop) ed.u = keep;
                if (ed.v == drop) ed.v = keep;
            }
            t.erase_vertex(drop);
            changed = true;
        }
        if (!changed) break;
    }
    return t.freeze();
}

std::vector<std::pair<std::size_t, std::size_t>> contiguous_leaves(const MetricTree& tree) {
    // Group leaves by their unique neighbor.
    std::vector<std::vector<std::size_t>> by_neighbor(tree.vertex_count());
    for (std::size_t v : tree.leaf_indices())
        by_neighbor[tree.adjacent(v).front().first].push_back(v);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& group : by_neighbor)
        for (std::size_t i = 0; i < group.size(); ++i)
            for (std::size_t j = i + 1; j < group.size(); ++j)
                pairs.emplace_back(group[i], group[j]);
    return pairs;
}

MetricTree unroot_tree(const MetricTree& tree) {
    if (!tree.rooted()) return tree;
    TreeScratch t(tree);
    // Shed degree-1 roots: delete the root and its edge, the other
    // endpoint becomes the root.  Stops when the root has degree != 1 or
    // only one vertex remains.
    while (t.edges.size() >= 1 && t.degree(*t.root) == 1) {
        std::size_t root = *t.root;
        std::size_t e = SIZE_MAX;
        for (std::size_t i = 0; i < t.edges.size(); ++i)
            if (t.edges[i].u == root || t.edges[i].v == root) e = i;
        std::size_t other = t.edges[e].u == root ? t.edges[e].v : t.edges[e].u;
        t.edges.erase(t.edges.begin() + static_cast<std::ptrdiff_t>(e));
        t.root = other;
        t.erase_vertex(root);
    }
    t.root.reset();
    return t.freeze();
}

}  // namespace trimetric
