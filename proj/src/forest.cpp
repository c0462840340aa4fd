#include "trimetric/forest.hpp"

#include <set>
#include <string>
#include <utility>

#include "trimetric/errors.hpp"
#include "trimetric/quotient.hpp"

namespace trimetric {

namespace {

std::string level_label(const std::string& rep, std::size_t level, const std::string& sep) {
    return rep + sep + std::to_string(level);
}

// Generated vertex labels use "<rep><sep><level>" with sep a run of '@'.
// Two generated labels can never collide with each other (the level part is
// pure digits), so the only hazard is a user point label that already looks
// like one; lengthen the separator until that cannot happen.
std::string pick_separator(const std::vector<std::string>& originals,
                           const std::vector<std::vector<std::string>>& reps_by_level) {
    std::set<std::string> taken(originals.begin(), originals.end());
    std::string sep = "@";
    for (;;) {
        bool clash = false;
        for (std::size_t lvl = 1; lvl < reps_by_level.size() && !clash; ++lvl)
            for (const auto& rep : reps_by_level[lvl])
                if (taken.count(level_label(rep, lvl, sep))) {
                    clash = true;
                    break;
                }
        if (!clash) return sep;
        sep += "@";
    }
}

}  // namespace

MetricForest::MetricForest(PseudometricSpace base, std::vector<MetricTree> components)
    : base_(std::move(base)), components_(std::move(components)) {
    if (!base_.is_metric()) throw InvalidForest("base must be a metric space");
    if (components_.size() != base_.size())
        throw InvalidForest("need one rooted tree per base point, got " +
                            std::to_string(components_.size()) + " trees for " +
                            std::to_string(base_.size()) + " points");
    std::set<std::string> seen;
    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (!components_[i].rooted())
            throw InvalidForest("component over " + base_.label(i) + " is not rooted");
        for (const auto& l : components_[i].labels())
            if (!seen.insert(l).second)
                throw InvalidForest("vertex label used twice across components: " + l);
    }
}

const MetricTree& MetricForest::component(std::size_t base_point) const {
    if (base_point >= components_.size())
        throw InvalidForest("no component " + std::to_string(base_point));
    return components_[base_point];
}

std::size_t MetricForest::edge_count() const {
    std::size_t n = 0;
    for (const auto& t : components_) n += t.edges().size();
    return n;
}

LeafSpaceResult leaf_space(const MetricForest& forest) {
    const PseudometricSpace& base = forest.base();

    std::vector<std::string> labels;
    std::vector<LeafOrigin> origins;
    std::vector<std::size_t> comp_of;              // point -> base index
    std::vector<Rational> to_root;                 // point -> distance to its root
    std::vector<std::vector<Rational>> from_leaf;  // point -> all distances in its tree

    for (std::size_t c = 0; c < base.size(); ++c) {
        const MetricTree& tree = forest.component(c);
        std::vector<std::size_t> leaves = tree.leaf_indices();
        if (leaves.empty()) throw NoLeaves(base.label(c));
        for (std::size_t v : leaves) {
            std::vector<Rational> d = distances_from(tree, v);
            labels.push_back(tree.label(v));
            origins.push_back({c, v});
            comp_of.push_back(c);
            to_root.push_back(d[*tree.root()]);
            from_leaf.push_back(std::move(d));
        }
    }

    std::size_t n = labels.size();
    Matrix dist(n, std::vector<Rational>(n));
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = p + 1; q < n; ++q) {
            if (comp_of[p] == comp_of[q])
                dist[p][q] = from_leaf[p][origins[q].vertex];
            else
                dist[p][q] = to_root[p] + base.dist(comp_of[p], comp_of[q]) + to_root[q];
            dist[q][p] = dist[p][q];
        }

    return {PseudometricSpace(std::move(labels), dist), std::move(origins)};
}

MetricForest segment_forest(const PseudometricSpace& base) {
    std::vector<std::vector<std::string>> reps(2);
    reps[1] = base.labels();
    const std::string sep = pick_separator(base.labels(), reps);

    std::vector<MetricTree> components;
    components.reserve(base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
        std::vector<std::string> labels = {base.label(i), level_label(base.label(i), 1, sep)};
        std::vector<MetricTree::Edge> edges = {{0, 1, Rational()}};
        components.emplace_back(std::move(labels), std::move(edges), std::size_t{1});
    }
    return MetricForest(base, std::move(components));
}

MetricForest canonical_forest(const TrimChain& chain, std::size_t n) {
    if (n == 0) throw BadDepth("canonical forest needs depth >= 1");

    std::vector<const PseudometricSpace*> stages;
    stages.reserve(n + 1);
    for (std::size_t s = 0; s <= n; ++s) stages.push_back(&chain.stage(s));
    const PseudometricSpace& base = *stages[n];

    // Per level below n: the projection one level up and the edge lengths.
    // Past the chain's height the stages are constant, so the projection is
    // the identity and all lengths are zero (the core is trim).
    std::vector<std::vector<std::size_t>> proj(n);
    std::vector<PointFunction> dbar(n);
    for (std::size_t s = 0; s < n; ++s) {
        if (s < chain.height()) {
            proj[s] = chain.steps[s].projection.assignment;
            dbar[s] = chain.steps[s].dbar;
        } else {
            proj[s].resize(stages[s]->size());
            for (std::size_t v = 0; v < proj[s].size(); ++v) proj[s][v] = v;
            dbar[s].assign(stages[s]->size(), Rational());
        }
    }

    // Composite image of every vertex in the base; this is its component.
    std::vector<std::vector<std::size_t>> to_base(n + 1);
    to_base[n].resize(base.size());
    for (std::size_t v = 0; v < base.size(); ++v) to_base[n][v] = v;
    for (std::size_t s = n; s-- > 0;) {
        to_base[s].resize(stages[s]->size());
        for (std::size_t v = 0; v < stages[s]->size(); ++v)
            to_base[s][v] = to_base[s + 1][proj[s][v]];
    }

    std::vector<std::vector<std::string>> reps(n + 1);
    for (std::size_t s = 1; s <= n; ++s) reps[s] = stages[s]->labels();
    const std::string sep = pick_separator(stages[0]->labels(), reps);

    // Component vertices in level order, level 0 keeping the point labels.
    std::vector<std::vector<std::size_t>> slot(n + 1);
    std::vector<std::vector<std::string>> labels(base.size());
    std::vector<std::vector<MetricTree::Edge>> edges(base.size());
    for (std::size_t s = 0; s <= n; ++s) {
        slot[s].resize(stages[s]->size());
        for (std::size_t v = 0; v < stages[s]->size(); ++v) {
            std::size_t c = to_base[s][v];
            slot[s][v] = labels[c].size();
            labels[c].push_back(s == 0 ? stages[0]->label(v)
                                       : level_label(stages[s]->label(v), s, sep));
        }
    }
    for (std::size_t s = 0; s < n; ++s)
        for (std::size_t v = 0; v < stages[s]->size(); ++v) {
            std::size_t c = to_base[s][v];
            edges[c].push_back({slot[s][v], slot[s + 1][proj[s][v]], dbar[s][v]});
        }

    std::vector<MetricTree> components;
    components.reserve(base.size());
    for (std::size_t c = 0; c < base.size(); ++c)
        components.emplace_back(std::move(labels[c]), std::move(edges[c]), slot[n][c]);
    return MetricForest(base, std::move(components));
}

MetricForest canonical_forest(const PseudometricSpace& space) {
    TrimChain chain = trim_core(space);
    return canonical_forest(chain, std::max<std::size_t>(1, chain.height()));
}

MetricForest forest_bullet(const MetricForest& forest) {
    std::vector<MetricTree> comps;
    comps.reserve(forest.components().size());
    for (const auto& t : forest.components()) comps.push_back(tree_bullet(t));
    return MetricForest(forest.base(), std::move(comps));
}

MetricForest reduce_forest(const MetricForest& forest) {
    std::vector<MetricTree> comps;
    comps.reserve(forest.components().size());
    for (const auto& t : forest.components()) comps.push_back(reduce_tree(t));
    return MetricForest(forest.base(), std::move(comps));
}

MetricForest compose_forests(const MetricForest& zeta, const MetricForest& eta) {
    LeafSpaceResult inner = leaf_space(eta);
    if (!equal_labeled(zeta.base(), inner.space))
        throw BaseMismatch(
            "base of the outer forest is not the leaf space of the inner forest");

    // Outer vertex labels survive verbatim; inner non-leaf labels are kept
    // when free and get apostrophes appended until unique otherwise.
    std::set<std::string> taken;
    for (const auto& t : zeta.components())
        for (const auto& l : t.labels()) taken.insert(l);

    std::vector<MetricTree> out;
    out.reserve(eta.base().size());
    for (std::size_t b = 0; b < eta.base().size(); ++b) {
        const MetricTree& et = eta.component(b);
        std::vector<std::string> labels;
        std::vector<MetricTree::Edge> edges;
        std::vector<std::size_t> eta_slot(et.vertex_count());

        // Inner vertices first, in index order.  A leaf is fused with the
        // root of the outer component sitting over it and takes that label.
        for (std::size_t v = 0; v < et.vertex_count(); ++v) {
            eta_slot[v] = labels.size();
            if (et.is_leaf(v)) {
                std::size_t a = zeta.base().index_of(et.label(v));
                const MetricTree& zt = zeta.component(a);
                labels.push_back(zt.label(*zt.root()));
            } else {
                std::string l = et.label(v);
                while (!taken.insert(l).second) l += "'";
                labels.push_back(std::move(l));
            }
        }
        for (const auto& e : et.edges()) edges.push_back({eta_slot[e.u], eta_slot[e.v], e.length});

        // Splice each outer component in, its root fused with the leaf.
        for (std::size_t v = 0; v < et.vertex_count(); ++v) {
            if (!et.is_leaf(v)) continue;
            std::size_t a = zeta.base().index_of(et.label(v));
            const MetricTree& zt = zeta.component(a);
            std::vector<std::size_t> zeta_slot(zt.vertex_count());
            for (std::size_t w = 0; w < zt.vertex_count(); ++w) {
                if (w == *zt.root()) {
                    zeta_slot[w] = eta_slot[v];
                } else {
                    zeta_slot[w] = labels.size();
                    labels.push_back(zt.label(w));
                }
            }
            for (const auto& e : zt.edges())
                edges.push_back({zeta_slot[e.u], zeta_slot[e.v], e.length});
        }

        out.emplace_back(std::move(labels), std::move(edges), eta_slot[*et.root()]);
    }
    return MetricForest(eta.base(), std::move(out));
}

}  // namespace trimetric
