#include "trimetric/space.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace trimetric {

PseudometricSpace::PseudometricSpace(std::vector<std::string> labels, const Matrix& dist)
    : labels_(std::move(labels)) {
    const std::size_t n = labels_.size();
    if (dist.size() != n)
        throw AxiomViolation(AxiomViolation::Kind::Shape, {},
                             std::to_string(dist.size()) + " rows for " + std::to_string(n) +
                                 " labels");
    for (std::size_t i = 0; i < n; ++i)
        if (dist[i].size() != n)
            throw AxiomViolation(AxiomViolation::Kind::Shape, {labels_[i]},
                                 "row has " + std::to_string(dist[i].size()) + " entries, expected " +
                                     std::to_string(n));
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (l.empty())
            throw AxiomViolation(AxiomViolation::Kind::Label, {}, "empty label");
        if (!seen.insert(l).second)
            throw AxiomViolation(AxiomViolation::Kind::Label, {l}, "duplicate label");
    }
    dist_.reserve(n * n);
    for (const auto& row : dist)
        for (const auto& v : row) dist_.push_back(v);
    check_axioms();
}

void PseudometricSpace::check_axioms() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        if (!dist_[i * n + i].is_zero())
            throw AxiomViolation(AxiomViolation::Kind::Diagonal, {labels_[i]},
                                 "d(x,x) = " + dist_[i * n + i].str());
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            if (dist_[i * n + j] != dist_[j * n + i])
                throw AxiomViolation(AxiomViolation::Kind::Symmetry, {labels_[i], labels_[j]},
                                     dist_[i * n + j].str() + " vs " + dist_[j * n + i].str());
            if (dist_[i * n + j].is_negative())
                throw AxiomViolation(AxiomViolation::Kind::Negativity, {labels_[i], labels_[j]},
                                     "d = " + dist_[i * n + j].str());
        }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                if (dist_[i * n + j] + dist_[j * n + k] < dist_[i * n + k])
                    throw AxiomViolation(
                        AxiomViolation::Kind::Triangle, {labels_[i], labels_[j], labels_[k]},
                        dist_[i * n + j].str() + " + " + dist_[j * n + k].str() + " < " +
                            dist_[i * n + k].str());
}

const std::string& PseudometricSpace::label(std::size_t i) const {
    if (i >= size()) throw UnknownPoint("#" + std::to_string(i));
    return labels_[i];
}

const Rational& PseudometricSpace::dist(std::size_t i, std::size_t j) const {
    if (i >= size()) throw UnknownPoint("#" + std::to_string(i));
    if (j >= size()) throw UnknownPoint("#" + std::to_string(j));
    return dist_[i * size() + j];
}

Matrix PseudometricSpace::matrix() const {
    const std::size_t n = size();
    Matrix m(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m[i][j] = dist_[i * n + j];
    return m;
}

std::size_t PseudometricSpace::index_of(const std::string& label) const {
    if (auto i = find(label)) return *i;
    throw UnknownPoint(label);
}

std::optional<std::size_t> PseudometricSpace::find(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - labels_.begin());
}

bool PseudometricSpace::is_metric() const {
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (dist_[i * n + j].is_zero()) return false;
    return true;
}

PseudometricSpace validate_space(const std::vector<std::string>& labels, const Matrix& dist) {
    return PseudometricSpace(labels, dist);
}

Rational gromov(const PseudometricSpace& space, std::size_t x, std::size_t y, std::size_t z) {
    return (space.dist(x, y) + space.dist(x, z) - space.dist(y, z)) / Rational(2);
}

PointFunction underline_d(const PseudometricSpace& space) {
    const std::size_t n = space.size();
    if (n == 0) throw EmptySpace("underline_d");
    if (n == 1) return {Rational(0)};
    if (n == 2) {
        Rational half = space.dist(0, 1) / Rational(2);
        return {half, half};
    }
    PointFunction out(n);
    for (std::size_t x = 0; x < n; ++x) {
        bool first = true;
        for (std::size_t y = 0; y < n; ++y) {
            if (y == x) continue;
            for (std::size_t z = y + 1; z < n; ++z) {
                if (z == x) continue;
                Rational g = gromov(space, x, y, z);
                if (first || g < out[x]) {
                    out[x] = g;
                    first = false;
                }
            }
        }
    }
    return out;
}

PointFunction underline_d_short(const PseudometricSpace& space) {
    const std::size_t n = space.size();
    if (n < 3) throw TooSmall("underline_d_short", n, 3);
    PointFunction out(n);
    for (std::size_t x = 0; x < n; ++x) {
        bool first = true;
        for (std::size_t y = 0; y < n; ++y) {
            if (y == x) continue;
            for (std::size_t z = y; z < n; ++z) {  // y == z allowed
                if (z == x) continue;
                Rational g = gromov(space, x, y, z);
                if (first || g < out[x]) {
                    out[x] = g;
                    first = false;
                }
            }
        }
    }
    return out;
}

bool is_trim(const PseudometricSpace& space) {
    if (space.size() <= 1) return true;
    for (const Rational& v : underline_d(space))
        if (!v.is_zero()) return false;
    return true;
}

PseudometricSpace drift(const PseudometricSpace& space, const PointFunction& f) {
    const std::size_t n = space.size();
    if (f.size() != n)
        throw Error("drift: function has " + std::to_string(f.size()) + " values for " +
                    std::to_string(n) + " points");
    if (n == 0) return space;
    PointFunction low = underline_d(space);
    for (std::size_t x = 0; x < n; ++x)
        if (f[x] < -low[x]) throw DriftTooNegative(space.label(x));
    Matrix m(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (i != j) m[i][j] = space.dist(i, j) + f[i] + f[j];
    return PseudometricSpace(space.labels(), m);
}

PseudometricSpace d_bullet(const PseudometricSpace& space) {
    if (space.empty()) return space;
    PointFunction low = underline_d(space);
    for (Rational& v : low) v = -v;
    return drift(space, low);
}

bool equal_labeled(const PseudometricSpace& a, const PseudometricSpace& b) {
    if (a.size() != b.size()) return false;
    std::vector<std::size_t> to_b(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto j = b.find(a.label(i));
        if (!j) return false;
        to_b[i] = *j;
    }
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a.dist(i, j) != b.dist(to_b[i], to_b[j])) return false;
    return true;
}

PseudometricSpace sorted_by_label(const PseudometricSpace& space) {
    std::vector<std::size_t> order(space.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return space.label(a) < space.label(b); });
    std::vector<std::string> labels;
    labels.reserve(space.size());
    for (std::size_t i : order) labels.push_back(space.label(i));
    Matrix m(space.size(), std::vector<Rational>(space.size()));
    for (std::size_t i = 0; i < space.size(); ++i)
        for (std::size_t j = 0; j < space.size(); ++j) m[i][j] = space.dist(order[i], order[j]);
    return PseudometricSpace(std::move(labels), m);
}

}  // namespace trimetric
