#include "trimetric/trimming.hpp"

namespace trimetric {

QuotientStep trim_step(const PseudometricSpace& space) {
    PointFunction dbar = space.empty() ? PointFunction{} : underline_d(space);
    PseudometricSpace bullet = d_bullet(space);
    QuotientMap projection = metric_quotient(bullet);
    return {space, std::move(dbar), std::move(bullet), std::move(projection)};
}

TrimChain trim_core(const PseudometricSpace& space) {
    TrimChain chain;
    chain.q = identity_map(space);
    PseudometricSpace current = space;
    while (!(current.is_metric() && is_trim(current))) {
        QuotientStep step = trim_step(current);
        current = step.projection.target;
        chain.q = compose(chain.q, step.projection);
        chain.steps.push_back(std::move(step));
    }
    chain.core = std::move(current);
    return chain;
}

bool related_oracle(const PseudometricSpace& space, std::size_t x, std::size_t y) {
    const std::size_t n = space.size();
    if (n < 3) throw TooSmall("related_oracle", n, 3);
    if (x >= n) throw UnknownPoint("#" + std::to_string(x));
    if (y >= n) throw UnknownPoint("#" + std::to_string(y));
    if (x == y) return true;
    const Rational lhs_base = Rational(2) * space.dist(x, y);
    for (std::size_t x1 = 0; x1 < n; ++x1) {
        if (x1 == x) continue;
        for (std::size_t x2 = x1 + 1; x2 < n; ++x2) {
            if (x2 == x) continue;
            const Rational xs = space.dist(x, x1) + space.dist(x, x2) - space.dist(x1, x2);
            for (std::size_t y1 = 0; y1 < n; ++y1) {
                if (y1 == y) continue;
                for (std::size_t y2 = y1 + 1; y2 < n; ++y2) {
                    if (y2 == y) continue;
                    if (lhs_base + space.dist(y1, y2) >
                        xs + space.dist(y, y1) + space.dist(y, y2))
                        return false;
                }
            }
        }
    }
    return true;
}

Rational trim_offset(const Matrix& h) {
    const std::size_t n = h.size();
    Rational r(0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) continue;
            r = max(r, -h[i][j]);
            for (std::size_t k = 0; k < n; ++k) {
                if (k == i || k == j) continue;
                r = max(r, h[i][j] - h[i][k] - h[k][j]);
            }
        }
    return r;
}

TrimChain trim_symmetric(const std::vector<std::string>& labels, const Matrix& h,
                         const Rational& r) {
    const std::size_t n = h.size();
    if (n != labels.size())
        throw AxiomViolation(AxiomViolation::Kind::Shape, {},
                             "matrix size does not match label count");
    for (std::size_t i = 0; i < n; ++i) {
        if (h[i].size() != n)
            throw AxiomViolation(AxiomViolation::Kind::Shape, {labels[i]}, "non-square matrix");
        for (std::size_t j = i + 1; j < n; ++j)
            if (h[i][j] != h[j][i])
                throw AxiomViolation(AxiomViolation::Kind::Symmetry, {labels[i], labels[j]},
                                     h[i][j].str() + " vs " + h[j][i].str());
    }
    // h_r: zero diagonal, h + r off it.  The constructor validates, so an
    // inadmissible r surfaces as an AxiomViolation.
    Matrix hr(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) hr[i][j] = h[i][j] + r;
    return trim_core(PseudometricSpace(labels, hr));
}

TrimChain trim_symmetric(const std::vector<std::string>& labels, const Matrix& h) {
    return trim_symmetric(labels, h, trim_offset(h));
}

}  // namespace trimetric
