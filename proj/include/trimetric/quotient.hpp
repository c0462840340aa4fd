#pragma once

#include <cstddef>
#include <vector>

#include "trimetric/space.hpp"

namespace trimetric {

// A surjective non-expansive map between spaces, stored as source-index to
// target-index assignment.
struct QuotientMap {
    PseudometricSpace source;
    PseudometricSpace target;
    std::vector<std::size_t> assignment;

    std::size_t operator()(std::size_t i) const { return assignment.at(i); }

    // Checks surjectivity and non-expansiveness; test helper.
    bool verify() const;
};

QuotientMap identity_map(const PseudometricSpace& space);

// second after first; first.target must equal second.source as labeled
// matrices in identical point order.
QuotientMap compose(const QuotientMap& first, const QuotientMap& second);

// Collapses zero-distance classes to a metric space.  Each class is named
// after its lowest-index member; target point order is order of first
// appearance in the source.
QuotientMap metric_quotient(const PseudometricSpace& space);

}  // namespace trimetric
