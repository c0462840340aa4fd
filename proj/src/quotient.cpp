#include "trimetric/quotient.hpp"

#include <numeric>

namespace trimetric {

bool QuotientMap::verify() const {
    if (assignment.size() != source.size()) return false;
    std::vector<bool> hit(target.size(), false);
    for (std::size_t i = 0; i < assignment.size(); ++i) {
        if (assignment[i] >= target.size()) return false;
        hit[assignment[i]] = true;
    }
    for (bool h : hit)
        if (!h) return false;
    for (std::size_t i = 0; i < source.size(); ++i)
        for (std::size_t j = 0; j < source.size(); ++j)
            if (target.dist(assignment[i], assignment[j]) > source.dist(i, j)) return false;
    return true;
}

QuotientMap identity_map(const PseudometricSpace& space) {
    std::vector<std::size_t> id(space.size());
    std::iota(id.begin(), id.end(), std::size_t{0});
    return {space, space, std::move(id)};
}

QuotientMap compose(const QuotientMap& first, const QuotientMap& second) {
    if (first.target.labels() != second.source.labels())
        throw Error("compose: middle spaces disagree");
    std::vector<std::size_t> comp(first.assignment.size());
    for (std::size_t i = 0; i < comp.size(); ++i)
        comp[i] = second.assignment.at(first.assignment[i]);
    return {first.source, second.target, std::move(comp)};
}

QuotientMap metric_quotient(const PseudometricSpace& space) {
    const std::size_t n = space.size();
    std::vector<std::size_t> assignment(n);
    std::vector<std::size_t> reps;  // source index of each class representative
    for (std::size_t i = 0; i < n; ++i) {
        bool placed = false;
        for (std::size_t c = 0; c < reps.size(); ++c) {
            if (space.dist(i, reps[c]).is_zero()) {
                assignment[i] = c;
                placed = true;
                break;
            }
        }
        if (!placed) {
            assignment[i] = reps.size();
            reps.push_back(i);
        }
    }
    std::vector<std::string> labels;
    labels.reserve(reps.size());
    for (std::size_t r : reps) labels.push_back(space.label(r));
    Matrix m(reps.size(), std::vector<Rational>(reps.size()));
    for (std::size_t a = 0; a < reps.size(); ++a)
        for (std::size_t b = 0; b < reps.size(); ++b) m[a][b] = space.dist(reps[a], reps[b]);
    return {space, PseudometricSpace(std::move(labels), m), std::move(assignment)};
}

}  // namespace trimetric
