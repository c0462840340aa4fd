#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trimetric/errors.hpp"
#include "trimetric/rational.hpp"

namespace trimetric {

using Matrix = std::vector<std::vector<Rational>>;

// A function X -> Q on the points of a space, indexed by point index.
using PointFunction = std::vector<Rational>;

// A finite pseudometric space: labeled points plus an exact symmetric
// distance matrix with zero diagonal satisfying the triangle inequality.
// Construction validates all axioms, so a live instance is always valid.
// Instances are immutable values; share and copy freely.
class PseudometricSpace {
public:
    PseudometricSpace() = default;  // the empty space

    // Throws AxiomViolation naming the offending points.
    PseudometricSpace(std::vector<std::string> labels, const Matrix& dist);

    std::size_t size() const { return labels_.size(); }
    bool empty() const { return labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(std::size_t i) const;
    const Rational& dist(std::size_t i, std::size_t j) const;
    Matrix matrix() const;

    std::size_t index_of(const std::string& label) const;  // throws UnknownPoint
    std::optional<std::size_t> find(const std::string& label) const;

    // True when all off-diagonal distances are strictly positive.
    bool is_metric() const;

private:
    void check_axioms() const;

    std::vector<std::string> labels_;
    std::vector<Rational> dist_;  // row-major size*size
};

// Named constructor matching the operation vocabulary; identical to the
// validating constructor.
PseudometricSpace validate_space(const std::vector<std::string>& labels, const Matrix& dist);

// The triple function (d(x,y) + d(x,z) - d(y,z)) / 2.  Indices may repeat.
Rational gromov(const PseudometricSpace& space, std::size_t x, std::size_t y, std::size_t z);

// Per-point minimum of the triple function over pairs of distinct other
// points; 0 on a single point, d(x,y)/2 on a two-point space.
// Throws EmptySpace on the empty space.
PointFunction underline_d(const PseudometricSpace& space);

// Same minimum but over all y,z != x including y == z. Only defined for
// card >= 3 (throws TooSmall below that); agrees with underline_d there.
PointFunction underline_d_short(const PseudometricSpace& space);

// True iff underline_d vanishes identically (exact test; card <= 1 is trim).
bool is_trim(const PseudometricSpace& space);

// Off-diagonal distances inflated by f(x) + f(y).  Requires
// f(x) >= -underline_d(x) everywhere, else throws DriftTooNegative.
PseudometricSpace drift(const PseudometricSpace& space, const PointFunction& f);

// drift by -underline_d: d(x,y) - underline_d(x) - underline_d(y)
// off-diagonal.  The result is always trim.
PseudometricSpace d_bullet(const PseudometricSpace& space);

// Exact equality as labeled matrices: same label set, same distances under
// the label matching.  Point order is irrelevant.
bool equal_labeled(const PseudometricSpace& a, const PseudometricSpace& b);

// Points reordered lexicographically by label (used to normalize output).
PseudometricSpace sorted_by_label(const PseudometricSpace& space);

}  // namespace trimetric
