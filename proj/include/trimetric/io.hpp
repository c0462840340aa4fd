#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "trimetric/forest.hpp"
#include "trimetric/space.hpp"
#include "trimetric/tree.hpp"
#include "trimetric/trimming.hpp"

namespace trimetric {

using ordered_json = nlohmann::ordered_json;

// Wraps the JSON parser so malformed text surfaces as ParseError.
ordered_json json_from_text(const std::string& text);

// Canonical dump used for every JSON artifact: two-space indent, trailing
// newline, keys in insertion order.
std::string dump_json(const ordered_json& j);

// Distance-matrix CSV with a "label" header row.  Bad labels, non-square
// tables and unusable entries surface as AxiomViolation (Label/Shape/Entry)
// like any other matrix defect; only non-CSV text is a ParseError.
PseudometricSpace space_from_csv(const std::string& text);
std::string space_to_csv(const PseudometricSpace& space);

// {"points": [...], "dist": [[...]]} with entries as canonical rational
// strings; integer JSON numbers are accepted on input, floats are not.
PseudometricSpace space_from_json(const ordered_json& j);
ordered_json space_to_json(const PseudometricSpace& space);

// Sniffs JSON (first non-blank byte '{') vs CSV.
PseudometricSpace space_from_text(const std::string& text);

// One trimming step: source and target spaces, underline values, bullet
// matrix and the projection assignment.
ordered_json step_to_json(const QuotientStep& step);

// {"height": n, "spaces": [matrix...], "dbar": [[...]...],
//  "maps": [[assignment]...]} with height+1 stage matrices; all rationals
// as strings.  Stage labels are recoverable from the input space plus the
// maps (each class keeps its lowest-index member's label), so the chain
// file stores none.
ordered_json chain_to_json(const TrimChain& chain);

struct ChainData {
    std::size_t height = 0;
    std::vector<Matrix> spaces;                   // height + 1 matrices
    std::vector<PointFunction> dbar;              // height rows
    std::vector<std::vector<std::size_t>> maps;   // height assignments
};

ChainData chain_from_json(const ordered_json& j);

// {"vertices": [...], "root": "...", "edges": [["u","v","len"]...]};
// "root" is omitted for unrooted trees.
ordered_json tree_to_json(const MetricTree& tree);
MetricTree tree_from_json(const ordered_json& j);

// {"base": {space}, "components": {"<base label>": {tree}, ...}}
ordered_json forest_to_json(const MetricForest& forest);
MetricForest forest_from_json(const ordered_json& j);

// One subgraph per component; roots are boxes, leaves circles, edge labels
// carry the lengths.
std::string forest_to_dot(const MetricForest& forest);

}  // namespace trimetric
