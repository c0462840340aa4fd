#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "trimetric/quotient.hpp"
#include "trimetric/space.hpp"

namespace trimetric {

// One trimming step X -> t(X): the underline values, the bullet
// pseudometric, and the metric quotient of the bullet.
struct QuotientStep {
    PseudometricSpace source;
    PointFunction dbar;         // underline_d(source)
    PseudometricSpace bullet;   // d_bullet(source), always trim
    QuotientMap projection;     // metric_quotient(bullet); target is t(source)
};

// The full chain X = t^0(X) -> t(X) -> ... -> t^n(X) = c(X) down to the
// first stage that is both trim and a metric space.  All intermediate
// stages are retained; the forest construction consumes them.
struct TrimChain {
    std::vector<QuotientStep> steps;
    PseudometricSpace core;  // trim metric space
    QuotientMap q;           // composition of all projections, X -> core

    std::size_t height() const { return steps.size(); }

    // t^i(X) for 0 <= i <= height; i beyond the height returns the core
    // (the chain is constant from there on).
    const PseudometricSpace& stage(std::size_t i) const {
        return i < steps.size() ? steps[i].source : core;
    }
};

QuotientStep trim_step(const PseudometricSpace& space);

// Iterates trim_step until the stage is a trim metric space.  Never needs
// more than card(X) steps.  The empty space is its own core at height 0.
TrimChain trim_core(const PseudometricSpace& space);

// Direct O(N^4) test for d_bullet(x,y) == 0 straight from the distances:
// related iff 2 d(x,y) + d(x',x'') + d(y',y'') never exceeds
// d(x,x') + d(x,x'') + d(y,y') + d(y,y'') over distinct x',x'' != x and
// distinct y',y'' != y.  Test oracle; needs card >= 3.
bool related_oracle(const PseudometricSpace& space, std::size_t x, std::size_t y);

// The smallest closed-form r making h + r (off-diagonal) a pseudometric:
// max of 0, -h(x,y) over pairs, and h(x,y) - h(x,z) - h(z,y) over triples.
Rational trim_offset(const Matrix& h);

// Trimming of a symmetric map h: builds h_r with the given offset (must be
// admissible; the matrix is validated) and returns its full trim chain.
TrimChain trim_symmetric(const std::vector<std::string>& labels, const Matrix& h,
                         const Rational& r);

// Same with the canonical offset trim_offset(h).
TrimChain trim_symmetric(const std::vector<std::string>& labels, const Matrix& h);

}  // namespace trimetric
