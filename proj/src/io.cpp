#include "trimetric/io.hpp"

#include <sstream>
#include <unordered_map>

#include "trimetric/errors.hpp"

namespace trimetric {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            if (!current.empty() && current.back() == '\r') current.pop_back();
            lines.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty() && current.back() == '\r') current.pop_back();
    if (!current.empty()) lines.push_back(current);
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string> split_cells(const std::string& line) {
    std::vector<std::string> cells;
    std::string current;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    cells.push_back(current);
    return cells;
}

Rational entry_from_cell(const std::string& cell, const std::string& row,
                         const std::string& col) {
    try {
        return Rational::parse(cell);
    } catch (const ParseError& e) {
        throw AxiomViolation(AxiomViolation::Kind::Entry, {row, col}, e.what());
    }
}

Rational entry_from_json(const ordered_json& e, const std::string& row,
                         const std::string& col) {
    if (e.is_string()) return entry_from_cell(e.get<std::string>(), row, col);
    if (e.is_number_integer()) return entry_from_cell(e.dump(), row, col);
    throw AxiomViolation(AxiomViolation::Kind::Entry, {row, col},
                         "matrix entries must be rational strings or integers, got " + e.dump());
}

Rational length_from_json(const ordered_json& e) {
    if (e.is_string()) return Rational::parse(e.get<std::string>());
    if (e.is_number_integer()) return Rational::parse(e.dump());
    throw ParseError("edge length must be a rational string or integer, got " + e.dump());
}

const ordered_json& field(const ordered_json& j, const char* key, const char* where) {
    if (!j.is_object()) throw ParseError(std::string(where) + ": expected a JSON object");
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError(std::string(where) + ": missing \"" + key + "\"");
    return *it;
}

std::vector<std::string> string_array(const ordered_json& j, const char* where) {
    if (!j.is_array()) throw ParseError(std::string(where) + ": expected an array");
    std::vector<std::string> out;
    out.reserve(j.size());
    for (const auto& e : j) {
        if (!e.is_string())
            throw ParseError(std::string(where) + ": expected strings, got " + e.dump());
        out.push_back(e.get<std::string>());
    }
    return out;
}

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (const auto& row : m) {
        ordered_json r = ordered_json::array();
        for (const auto& x : row) r.push_back(x.str());
        rows.push_back(std::move(r));
    }
    return rows;
}

std::string dot_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '\\' || c == '"') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

ordered_json json_from_text(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string dump_json(const ordered_json& j) { return j.dump(2) + "\n"; }

PseudometricSpace space_from_csv(const std::string& text) {
    std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw ParseError("empty input");

    std::vector<std::string> header = split_cells(lines[0]);
    if (header.empty() || header[0] != "label")
        throw ParseError("first CSV header cell must be \"label\"");
    std::vector<std::string> labels(header.begin() + 1, header.end());
    std::size_t n = labels.size();

    if (lines.size() - 1 != n)
        throw AxiomViolation(AxiomViolation::Kind::Shape, {},
                             std::to_string(n) + " columns but " +
                                 std::to_string(lines.size() - 1) + " rows");
    Matrix dist(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::string> cells = split_cells(lines[i + 1]);
        if (cells.size() != n + 1)
            throw AxiomViolation(AxiomViolation::Kind::Shape, {cells.empty() ? "" : cells[0]},
                                 "row has " + std::to_string(cells.size()) + " cells, expected " +
                                     std::to_string(n + 1));
        if (cells[0] != labels[i])
            throw AxiomViolation(AxiomViolation::Kind::Label, {cells[0], labels[i]},
                                 "row label does not match column label");
        for (std::size_t j = 0; j < n; ++j)
            dist[i][j] = entry_from_cell(cells[j + 1], labels[i], labels[j]);
    }
    return PseudometricSpace(std::move(labels), dist);
}

std::string space_to_csv(const PseudometricSpace& space) {
    std::ostringstream out;
    out << "label";
    for (const auto& l : space.labels()) out << ',' << l;
    out << '\n';
    for (std::size_t i = 0; i < space.size(); ++i) {
        out << space.label(i);
        for (std::size_t j = 0; j < space.size(); ++j) out << ',' << space.dist(i, j).str();
        out << '\n';
    }
    return out.str();
}

PseudometricSpace space_from_json(const ordered_json& j) {
    std::vector<std::string> labels = string_array(field(j, "points", "space"), "points");
    const ordered_json& rows = field(j, "dist", "space");
    if (!rows.is_array()) throw ParseError("dist: expected an array of rows");
    if (rows.size() != labels.size())
        throw AxiomViolation(AxiomViolation::Kind::Shape, {},
                             std::to_string(labels.size()) + " points but " +
                                 std::to_string(rows.size()) + " matrix rows");
    Matrix dist(labels.size(), std::vector<Rational>(labels.size()));
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const ordered_json& row = rows[i];
        if (!row.is_array() || row.size() != labels.size())
            throw AxiomViolation(AxiomViolation::Kind::Shape, {labels[i]},
                                 "matrix row is not an array of length " +
                                     std::to_string(labels.size()));
        for (std::size_t k = 0; k < labels.size(); ++k)
            dist[i][k] = entry_from_json(row[k], labels[i], labels[k]);
    }
    return PseudometricSpace(std::move(labels), dist);
}

ordered_json space_to_json(const PseudometricSpace& space) {
    ordered_json j;
    j["points"] = space.labels();
    j["dist"] = matrix_to_json(space.matrix());
    return j;
}

PseudometricSpace space_from_text(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        if (c == '{') return space_from_json(json_from_text(text));
        break;
    }
    return space_from_csv(text);
}

ordered_json step_to_json(const QuotientStep& step) {
    ordered_json j;
    j["source"] = space_to_json(step.source);
    ordered_json dbar = ordered_json::array();
    for (const auto& x : step.dbar) dbar.push_back(x.str());
    j["dbar"] = std::move(dbar);
    j["bullet"] = matrix_to_json(step.bullet.matrix());
    j["target"] = space_to_json(step.projection.target);
    j["map"] = step.projection.assignment;
    return j;
}

ordered_json chain_to_json(const TrimChain& chain) {
    ordered_json j;
    j["height"] = chain.height();
    ordered_json spaces = ordered_json::array();
    for (std::size_t i = 0; i <= chain.height(); ++i)
        spaces.push_back(matrix_to_json(chain.stage(i).matrix()));
    j["spaces"] = std::move(spaces);
    ordered_json dbar = ordered_json::array();
    ordered_json maps = ordered_json::array();
    for (const auto& step : chain.steps) {
        ordered_json row = ordered_json::array();
        for (const auto& x : step.dbar) row.push_back(x.str());
        dbar.push_back(std::move(row));
        maps.push_back(step.projection.assignment);
    }
    j["dbar"] = std::move(dbar);
    j["maps"] = std::move(maps);
    return j;
}

ChainData chain_from_json(const ordered_json& j) {
    ChainData data;
    const ordered_json& height = field(j, "height", "chain");
    if (!height.is_number_unsigned() && !height.is_number_integer())
        throw ParseError("chain: height must be an integer");
    long long h = height.get<long long>();
    if (h < 0) throw ParseError("chain: height must be non-negative");
    data.height = static_cast<std::size_t>(h);

    const ordered_json& spaces = field(j, "spaces", "chain");
    if (!spaces.is_array() || spaces.size() != data.height + 1)
        throw ParseError("chain: expected " + std::to_string(data.height + 1) +
                         " stage matrices");
    for (const auto& m : spaces) {
        if (!m.is_array()) throw ParseError("chain: stage must be a matrix");
        Matrix matrix;
        for (std::size_t r = 0; r < m.size(); ++r) {
            const auto& row = m[r];
            if (!row.is_array() || row.size() != m.size())
                throw ParseError("chain: stage matrix is not square");
            std::vector<Rational> out;
            for (const auto& e : row) out.push_back(length_from_json(e));
            matrix.push_back(std::move(out));
        }
        data.spaces.push_back(std::move(matrix));
    }

    const ordered_json& dbar = field(j, "dbar", "chain");
    if (!dbar.is_array() || dbar.size() != data.height)
        throw ParseError("chain: expected " + std::to_string(data.height) + " dbar rows");
    for (const auto& row : dbar) {
        if (!row.is_array()) throw ParseError("chain: dbar row must be an array");
        PointFunction f;
        for (const auto& e : row) f.push_back(length_from_json(e));
        data.dbar.push_back(std::move(f));
    }

    const ordered_json& maps = field(j, "maps", "chain");
    if (!maps.is_array() || maps.size() != data.height)
        throw ParseError("chain: expected " + std::to_string(data.height) + " maps");
    for (const auto& row : maps) {
        if (!row.is_array()) throw ParseError("chain: map must be an array");
        std::vector<std::size_t> assignment;
        for (const auto& e : row) {
            if (!e.is_number_integer() || e.get<long long>() < 0)
                throw ParseError("chain: map entries must be non-negative integers");
            assignment.push_back(static_cast<std::size_t>(e.get<long long>()));
        }
        data.maps.push_back(std::move(assignment));
    }
    return data;
}

ordered_json tree_to_json(const MetricTree& tree) {
    ordered_json j;
    j["vertices"] = tree.labels();
    if (tree.rooted()) j["root"] = tree.label(*tree.root());
    ordered_json edges = ordered_json::array();
    for (const auto& e : tree.edges())
        edges.push_back(ordered_json::array({tree.label(e.u), tree.label(e.v), e.length.str()}));
    j["edges"] = std::move(edges);
    return j;
}

MetricTree tree_from_json(const ordered_json& j) {
    std::vector<std::string> labels = string_array(field(j, "vertices", "tree"), "vertices");
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < labels.size(); ++i) index.emplace(labels[i], i);
    auto resolve = [&](const std::string& l) {
        auto it = index.find(l);
        if (it == index.end()) throw UnknownVertex(l);
        return it->second;
    };

    const ordered_json& edges = field(j, "edges", "tree");
    if (!edges.is_array()) throw ParseError("tree: edges must be an array");
    std::vector<MetricTree::Edge> parsed;
    for (const auto& e : edges) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_string() || !e[1].is_string())
            throw ParseError("tree: each edge must be [\"u\",\"v\",length]");
        parsed.push_back({resolve(e[0].get<std::string>()), resolve(e[1].get<std::string>()),
                          length_from_json(e[2])});
    }

    std::optional<std::size_t> root;
    if (auto it = j.find("root"); it != j.end() && !it->is_null()) {
        if (!it->is_string()) throw ParseError("tree: root must be a vertex label");
        root = resolve(it->get<std::string>());
    }
    return MetricTree(std::move(labels), std::move(parsed), root);
}

ordered_json forest_to_json(const MetricForest& forest) {
    ordered_json j;
    j["base"] = space_to_json(forest.base());
    ordered_json components = ordered_json::object();
    for (std::size_t b = 0; b < forest.base().size(); ++b)
        components[forest.base().label(b)] = tree_to_json(forest.component(b));
    j["components"] = std::move(components);
    return j;
}

MetricForest forest_from_json(const ordered_json& j) {
    PseudometricSpace base = space_from_json(field(j, "base", "forest"));
    const ordered_json& components = field(j, "components", "forest");
    if (!components.is_object()) throw ParseError("forest: components must be an object");
    for (const auto& [key, value] : components.items()) {
        (void)value;
        if (!base.find(key)) throw InvalidForest("component over unknown base point " + key);
    }
    std::vector<MetricTree> trees;
    trees.reserve(base.size());
    for (std::size_t b = 0; b < base.size(); ++b) {
        auto it = components.find(base.label(b));
        if (it == components.end())
            throw InvalidForest("missing component for base point " + base.label(b));
        trees.push_back(tree_from_json(*it));
    }
    return MetricForest(std::move(base), std::move(trees));
}

std::string forest_to_dot(const MetricForest& forest) {
    std::ostringstream out;
    out << "graph forest {\n";
    out << "  node [shape=ellipse];\n";
    for (std::size_t b = 0; b < forest.base().size(); ++b) {
        const MetricTree& tree = forest.component(b);
        out << "  subgraph cluster_" << b << " {\n";
        out << "    label=\"" << dot_escape(forest.base().label(b)) << "\";\n";
        for (std::size_t v = 0; v < tree.vertex_count(); ++v) {
            out << "    \"" << dot_escape(tree.label(v)) << "\"";
            if (tree.root() && *tree.root() == v)
                out << " [shape=box]";
            else if (tree.is_leaf(v))
                out << " [shape=circle]";
            out << ";\n";
        }
        for (const auto& e : tree.edges())
            out << "    \"" << dot_escape(tree.label(e.u)) << "\" -- \""
                << dot_escape(tree.label(e.v)) << "\" [label=\"" << e.length.str() << "\"];\n";
        out << "  }\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace trimetric
