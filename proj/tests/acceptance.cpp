// Acceptance suite: one line per criterion, PASS or FAIL, exit status 0
// only if everything passes.  Each block is independent and seeded, so a
// failure reproduces exactly.
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "trimetric/cli.hpp"
#include "trimetric/errors.hpp"
#include "trimetric/forest.hpp"
#include "trimetric/generators.hpp"
#include "trimetric/io.hpp"
#include "trimetric/isometry.hpp"
#include "trimetric/tree.hpp"
#include "trimetric/trimming.hpp"

using namespace trimetric;

namespace {

int failures = 0;

void run_criterion(int idx, const char* what, const std::function<bool()>& body) {
    bool ok = false;
    std::string note;
    try {
        ok = body();
    } catch (const std::exception& e) {
        note = std::string(" (exception: ") + e.what() + ")";
    }
    std::printf("%s %2d: %s%s\n", ok ? "PASS" : "FAIL", idx, what, note.c_str());
    if (!ok) ++failures;
}

// 1000 repaired random spaces validate and satisfy the pairwise underline
// bound exactly.
bool criterion_validation() {
    SplitMix64 rng(101);
    for (int i = 0; i < 1000; ++i) {
        auto s = random_space(rng, 2 + rng.below(9));
        auto again = validate_space(s.labels(), s.matrix());  // re-runs all axioms
        if (again.size() != s.size()) return false;
        auto u = underline_d(s);
        for (std::size_t x = 0; x < s.size(); ++x)
            for (std::size_t y = x + 1; y < s.size(); ++y)
                if (u[x] + u[y] > s.dist(x, y)) return false;
    }
    return true;
}

// The classic trim examples are trim; no tiny metric space is.
bool criterion_trim_examples() {
    if (!is_trim(fx::crossed_pairs(Rational(1), Rational(2)))) return false;
    if (!is_trim(fx::hamming(2))) return false;
    if (!is_trim(fx::hamming(3))) return false;
    if (!is_trim(fx::circle8())) return false;
    SplitMix64 rng(102);
    for (int i = 0; i < 100; ++i) {
        if (is_trim(random_metric_space(rng, 2))) return false;
        if (is_trim(random_metric_space(rng, 3))) return false;
    }
    return true;
}

// The quadruple inequality test for relatedness agrees with the bullet
// pseudometric's zero test on every pair.
bool criterion_relatedness_oracle() {
    SplitMix64 rng(103);
    for (int i = 0; i < 500; ++i) {
        auto s = random_space(rng, 3 + rng.below(6));
        auto b = d_bullet(s);
        for (std::size_t x = 0; x < s.size(); ++x)
            for (std::size_t y = x; y < s.size(); ++y)
                if (related_oracle(s, x, y) != b.dist(x, y).is_zero()) return false;
    }
    return true;
}

// Trimming is blind to drifts: t(X^f) = t(X) as labeled spaces.
bool criterion_drift_invariance() {
    SplitMix64 rng(104);
    for (int i = 0; i < 200; ++i) {
        auto s = random_space(rng, 2 + rng.below(7));
        auto f = random_drift(rng, s);
        auto lhs = trim_step(drift(s, f)).projection.target;
        auto rhs = trim_step(s).projection.target;
        if (!equal_labeled(lhs, rhs)) return false;
    }
    return true;
}

// Every space is the leaf space of its canonical forest, and the chain
// never exceeds card(X) steps.
bool criterion_forest_round_trip() {
    SplitMix64 rng(105);
    for (int i = 0; i < 500; ++i) {
        auto s = random_space(rng, 1 + rng.below(10));
        auto chain = trim_core(s);
        if (chain.height() > s.size()) return false;
        auto f = canonical_forest(s);
        if (!equal_labeled(leaf_space(f).space, s)) return false;
    }
    return true;
}

// Leaf spaces of unrooted trees have one-point cores; any such space is
// realized again by an unrooted witness tree, up to isometry.
bool criterion_tree_characterization() {
    SplitMix64 rng(106);
    for (int i = 0; i < 300; ++i) {
        auto tree = random_tree(rng, 2 + rng.below(12), false);
        auto x = leaf_space_unrooted(tree);
        auto chain = trim_core(x);
        if (chain.core.size() != 1) return false;

        // Converse: rebuild a tree for x and compare leaf spaces.
        auto forest = canonical_forest(x);
        if (forest.components().size() != 1) return false;
        auto witness = unroot_tree(forest.component(0));
        auto back = leaf_space_unrooted(witness);
        auto iso = find_isometry(back, x);
        if (!iso || !fx::preserves_distances(back, x, *iso)) return false;
    }
    return true;
}

// Forests over a trim base: the core of the leaf space is the base again.
bool criterion_trim_base_core() {
    SplitMix64 rng(107);
    std::vector<PseudometricSpace> fixtures = {fx::crossed_pairs(Rational(1), Rational(2)),
                                               fx::hamming(2), fx::hamming(3), fx::circle8()};
    for (int i = 0; i < 200; ++i) {
        PseudometricSpace base =
            (i % 4 == 0) ? fixtures[static_cast<std::size_t>(i / 4) % fixtures.size()]
                         : trim_core(random_space(rng, 4 + rng.below(5))).core;
        auto f = random_forest_over(rng, base, 2, 3);
        auto core = trim_core(leaf_space(f).space).core;
        auto iso = find_isometry(core, base);
        if (!iso || !fx::preserves_distances(core, base, *iso)) return false;
    }
    return true;
}

// Arbitrary forests: leaf space and base have isometric cores.
bool criterion_any_base_core() {
    SplitMix64 rng(108);
    for (int i = 0; i < 200; ++i) {
        auto f = random_forest(rng, 2 + rng.below(4), 2, 4);
        auto leaf_core = trim_core(leaf_space(f).space).core;
        auto base_core = trim_core(f.base()).core;
        auto iso = find_isometry(leaf_core, base_core);
        if (!iso || !fx::preserves_distances(leaf_core, base_core, *iso)) return false;
    }
    return true;
}

// On reduced forests over trim bases with at least two points, taking the
// bullet commutes with taking the leaf space, exactly and in point order.
bool criterion_bullet_commutes() {
    SplitMix64 rng(109);
    std::vector<PseudometricSpace> fixtures = {fx::hamming(2), fx::hamming(3), fx::circle8()};
    for (int i = 0; i < 100; ++i) {
        PseudometricSpace base;
        if (i % 3 == 0) {
            base = fixtures[static_cast<std::size_t>(i / 3) % fixtures.size()];
        } else if (i % 3 == 1) {
            base = fx::crossed_pairs(Rational(1 + static_cast<long>(rng.below(6)), 2),
                                     Rational(1 + static_cast<long>(rng.below(6)), 2));
        } else {
            base = fx::crossed_pairs(Rational(1), Rational(2));  // fallback
            for (int tries = 0; tries < 10; ++tries) {
                auto core = trim_core(random_space(rng, 5 + rng.below(4))).core;
                if (core.size() >= 2) {
                    base = core;
                    break;
                }
            }
        }
        auto zeta = reduce_forest(random_forest_over(rng, base, 2, 4));
        auto lhs = leaf_space(forest_bullet(zeta)).space;
        auto rhs = d_bullet(leaf_space(zeta).space);
        if (lhs.labels() != rhs.labels()) return false;
        if (lhs.matrix() != rhs.matrix()) return false;
    }
    return true;
}

// A reduced rooted tree with two or more edges always has two leaves
// hanging off the same vertex.
bool criterion_contiguous_leaves() {
    SplitMix64 rng(110);
    int applicable = 0;
    for (int i = 0; i < 1000; ++i) {
        auto r = reduce_tree(random_tree(rng, 2 + rng.below(12), true));
        if (r.edges().size() < 2) continue;
        ++applicable;
        if (contiguous_leaves(r).empty()) return false;
    }
    return applicable > 100;  // the sample must actually exercise the claim
}

// Trimming a symmetric map does not depend on the admissible offset.
bool criterion_offset_independence() {
    SplitMix64 rng(111);
    for (int i = 0; i < 100; ++i) {
        std::size_t n = 2 + rng.below(7);
        auto labels = point_labels(n);
        Matrix h = random_symmetric(rng, n);
        Rational r = trim_offset(h);
        auto lo = trim_symmetric(labels, h, r);
        auto hi = trim_symmetric(labels, h, r + Rational(7));
        if (!equal_labeled(lo.stage(1), hi.stage(1))) return false;
    }
    return true;
}

// The CLI inverts itself: forest then leafspace reproduces the matrix
// byte for byte, and gen is deterministic.
bool criterion_cli_round_trip() {
    auto call = [](std::vector<std::string> args, const std::string& stdin_text,
                   std::string& output) {
        std::istringstream in(stdin_text);
        std::ostringstream out, err;
        int code = run_command(std::move(args), in, out, err);
        output = out.str();
        return code;
    };

    SplitMix64 rng(112);
    for (int i = 0; i < 50; ++i) {
        auto s = random_space(rng, 1 + rng.below(10));
        std::string csv = space_to_csv(s);
        std::string forest, back;
        if (call({"forest", "-"}, csv, forest) != 0) return false;
        if (call({"leafspace", "-"}, forest, back) != 0) return false;
        if (back != csv) return false;  // generated labels are presorted
    }

    for (const char* kind : {"space", "tree", "forest"}) {
        std::string first, second;
        if (call({"gen", kind, "--seed", "5", "--points", "5"}, "", first) != 0) return false;
        if (call({"gen", kind, "--seed", "5", "--points", "5"}, "", second) != 0) return false;
        if (first.empty() || first != second) return false;
    }
    return true;
}

}  // namespace

int main() {
    run_criterion(1, "random spaces validate; underline sums bound distances",
                  criterion_validation);
    run_criterion(2, "crossed pairs, Hamming words and circle points are trim; tiny metric "
                     "spaces are not",
                  criterion_trim_examples);
    run_criterion(3, "quadruple-inequality relatedness matches the bullet zero test",
                  criterion_relatedness_oracle);
    run_criterion(4, "trimming is invariant under admissible drifts", criterion_drift_invariance);
    run_criterion(5, "canonical forest round trip recovers the space; height <= card",
                  criterion_forest_round_trip);
    run_criterion(6, "tree leaf spaces have point cores, and point-core spaces come from trees",
                  criterion_tree_characterization);
    run_criterion(7, "forest over a trim base: leaf-space core is isometric to the base",
                  criterion_trim_base_core);
    run_criterion(8, "any forest: leaf-space core and base core are isometric",
                  criterion_any_base_core);
    run_criterion(9, "reduced forests: bullet and leaf space commute exactly",
                  criterion_bullet_commutes);
    run_criterion(10, "reduced rooted trees with >= 2 edges have contiguous leaves",
                  criterion_contiguous_leaves);
    run_criterion(11, "symmetric-map trimming is independent of the offset",
                  criterion_offset_independence);
    run_criterion(12, "CLI forest/leafspace round trip byte-identical; gen deterministic",
                  criterion_cli_round_trip);

    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
