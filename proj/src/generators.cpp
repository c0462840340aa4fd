#include "trimetric/generators.hpp"

#include <algorithm>

namespace trimetric {

namespace {

std::string padded(std::size_t value, std::size_t width) {
    std::string s = std::to_string(value);
    if (s.size() < width) s.insert(0, width - s.size(), '0');
    return s;
}

std::size_t width_for(std::size_t count) {
    return count <= 1 ? 1 : std::to_string(count - 1).size();
}

// Half-integer in [0, 4] with roughly a quarter of the draws zero.
Rational half_grid_with_zeros(SplitMix64& rng) {
    if (rng.below(4) == 0) return Rational(0);
    return Rational(static_cast<long>(rng.below(8)) + 1, 2);
}

}  // namespace

std::uint64_t SplitMix64::next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t SplitMix64::below(std::uint64_t n) { return next() % n; }

std::vector<std::string> point_labels(std::size_t count) {
    std::vector<std::string> labels;
    labels.reserve(count);
    std::size_t w = width_for(count);
    for (std::size_t i = 0; i < count; ++i) labels.push_back("p" + padded(i, w));
    return labels;
}

PseudometricSpace random_space(SplitMix64& rng, std::size_t points) {
    Matrix d(points, std::vector<Rational>(points));
    for (std::size_t i = 0; i < points; ++i)
        for (std::size_t j = i + 1; j < points; ++j) d[i][j] = d[j][i] = half_grid_with_zeros(rng);
    // Shortest-path repair: the metric closure of any symmetric
    // non-negative matrix with zero diagonal is a pseudometric.
    for (std::size_t k = 0; k < points; ++k)
        for (std::size_t i = 0; i < points; ++i)
            for (std::size_t j = 0; j < points; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    return PseudometricSpace(point_labels(points), d);
}

PseudometricSpace random_metric_space(SplitMix64& rng, std::size_t points) {
    Matrix d(points, std::vector<Rational>(points));
    for (std::size_t i = 0; i < points; ++i)
        for (std::size_t j = i + 1; j < points; ++j)
            d[i][j] = d[j][i] = Rational(8 + static_cast<long>(rng.below(9)), 2);
    return PseudometricSpace(point_labels(points), d);
}

Matrix random_symmetric(SplitMix64& rng, std::size_t points) {
    Matrix h(points, std::vector<Rational>(points));
    for (std::size_t i = 0; i < points; ++i)
        for (std::size_t j = i + 1; j < points; ++j)
            h[i][j] = h[j][i] = Rational(static_cast<long>(rng.below(17)) - 8, 2);
    return h;
}

PointFunction random_drift(SplitMix64& rng, const PseudometricSpace& space) {
    if (space.empty()) return {};
    PointFunction dbar = underline_d(space);
    PointFunction f(space.size());
    for (std::size_t i = 0; i < space.size(); ++i)
        f[i] = -dbar[i] + Rational(static_cast<long>(rng.below(7)), 2);
    return f;
}

MetricTree random_tree(SplitMix64& rng, std::size_t vertices, bool rooted) {
    if (vertices == 0) throw TooSmall("random_tree", 0, 1);
    if (rooted && vertices < 2) throw TooSmall("random_tree (rooted)", vertices, 2);
    std::vector<std::string> labels;
    std::size_t w = width_for(vertices);
    for (std::size_t i = 0; i < vertices; ++i) labels.push_back("t" + padded(i, w));
    std::vector<MetricTree::Edge> edges;
    for (std::size_t i = 1; i < vertices; ++i)
        edges.push_back({rng.below(i), i, half_grid_with_zeros(rng)});
    std::optional<std::size_t> root;
    if (rooted) root = 0;
    return MetricTree(std::move(labels), std::move(edges), root);
}

MetricForest random_forest_over(SplitMix64& rng, const PseudometricSpace& base,
                                std::size_t min_vertices, std::size_t max_vertices) {
    min_vertices = std::max<std::size_t>(min_vertices, 2);
    max_vertices = std::max(max_vertices, min_vertices);
    std::vector<MetricTree> components;
    components.reserve(base.size());
    for (std::size_t b = 0; b < base.size(); ++b) {
        std::size_t n = min_vertices + rng.below(max_vertices - min_vertices + 1);
        std::vector<std::string> labels;
        std::size_t w = width_for(n);
        for (std::size_t j = 0; j < n; ++j) labels.push_back(base.label(b) + "_" + padded(j, w));
        std::vector<MetricTree::Edge> edges;
        for (std::size_t j = 1; j < n; ++j)
            edges.push_back({rng.below(j), j, half_grid_with_zeros(rng)});
        components.emplace_back(std::move(labels), std::move(edges), std::size_t{0});
    }
    return MetricForest(base, std::move(components));
}

MetricForest random_forest(SplitMix64& rng, std::size_t base_points,
                           std::size_t min_vertices, std::size_t max_vertices) {
    PseudometricSpace base = random_metric_space(rng, base_points);
    return random_forest_over(rng, base, min_vertices, max_vertices);
}

}  // namespace trimetric
