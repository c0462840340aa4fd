#include "trimetric/isometry.hpp"

#include <algorithm>
#include <numeric>

namespace trimetric {

namespace {

std::vector<std::vector<Rational>> point_profiles(const PseudometricSpace& s) {
    const std::size_t n = s.size();
    std::vector<std::vector<Rational>> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i].reserve(n - 1);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) out[i].push_back(s.dist(i, j));
        std::sort(out[i].begin(), out[i].end());
    }
    return out;
}

bool extend(const PseudometricSpace& a, const PseudometricSpace& b,
            const std::vector<std::vector<std::size_t>>& candidates,
            const std::vector<std::size_t>& order, std::size_t depth,
            std::vector<std::size_t>& map, std::vector<bool>& used) {
    if (depth == order.size()) return true;
    const std::size_t i = order[depth];
    for (std::size_t j : candidates[i]) {
        if (used[j]) continue;
        bool ok = true;
        for (std::size_t k = 0; k < depth && ok; ++k) {
            const std::size_t prev = order[k];
            ok = a.dist(i, prev) == b.dist(j, map[prev]);
        }
        if (!ok) continue;
        map[i] = j;
        used[j] = true;
        if (extend(a, b, candidates, order, depth + 1, map, used)) return true;
        used[j] = false;
    }
    return false;
}

}  // namespace

std::optional<std::vector<std::size_t>> find_isometry(const PseudometricSpace& a,
                                                      const PseudometricSpace& b,
                                                      std::size_t bound) {
    if (a.size() > bound) throw SizeBound(a.size(), bound);
    if (b.size() > bound) throw SizeBound(b.size(), bound);
    if (a.size() != b.size()) return std::nullopt;
    const std::size_t n = a.size();
    if (n == 0) return std::vector<std::size_t>{};

    // Global multiset of pairwise distances must match.
    std::vector<Rational> all_a, all_b;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            all_a.push_back(a.dist(i, j));
            all_b.push_back(b.dist(i, j));
        }
    std::sort(all_a.begin(), all_a.end());
    std::sort(all_b.begin(), all_b.end());
    if (all_a != all_b) return std::nullopt;

    auto prof_a = point_profiles(a);
    auto prof_b = point_profiles(b);
    std::vector<std::vector<std::size_t>> candidates(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (prof_a[i] == prof_b[j]) candidates[i].push_back(j);
        if (candidates[i].empty()) return std::nullopt;
    }

    // Assign most-constrained points first.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return candidates[x].size() < candidates[y].size();
    });

    std::vector<std::size_t> map(n);
    std::vector<bool> used(n, false);
    if (extend(a, b, candidates, order, 0, map, used)) return map;
    return std::nullopt;
}

}  // namespace trimetric
