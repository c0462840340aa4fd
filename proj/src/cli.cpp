#include "trimetric/cli.hpp"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <istream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "trimetric/errors.hpp"
#include "trimetric/forest.hpp"
#include "trimetric/generators.hpp"
#include "trimetric/io.hpp"
#include "trimetric/isometry.hpp"
#include "trimetric/quotient.hpp"
#include "trimetric/space.hpp"
#include "trimetric/tree.hpp"
#include "trimetric/trimming.hpp"

namespace trimetric {

namespace {

std::string slurp(const std::string& path, std::istream& in) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(path, std::ios::binary);
        if (!file) throw ParseError("cannot open file: " + path);
        buffer << file.rdbuf();
    }
    return buffer.str();
}

bool looks_like_json(const std::string& text) {
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
        return c == '{';
    }
    return false;
}

std::string pick_format(const std::string& format, std::initializer_list<const char*> allowed,
                        const char* fallback) {
    if (format.empty()) return fallback;
    for (const char* a : allowed)
        if (format == a) return format;
    throw ParseError("unsupported --format \"" + format + "\" for this command");
}

std::string render_space(const PseudometricSpace& space, const std::string& format) {
    if (format == "json") return dump_json(space_to_json(space));
    return space_to_csv(space);
}

std::string render_forest(const MetricForest& forest, const std::string& format) {
    if (format == "dot") return forest_to_dot(forest);
    return dump_json(forest_to_json(forest));
}

}  // namespace

int run_command(std::vector<std::string> args, std::istream& in, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"exact trim cores and metric forests for finite pseudometric spaces",
                 "trimetric"};
    app.require_subcommand(1);

    std::string input, second, output, format, kind = "space";
    std::uint64_t seed = 0;
    std::size_t points = 6, depth = 0;

    const char* input_help = "matrix file, CSV or JSON (\"-\" reads standard input)";

    auto add_output = [&](CLI::App* cmd) {
        cmd->add_option("-o,--output", output, "write the result to this file instead of stdout");
    };

    CLI::App* validate = app.add_subcommand("validate", "check the pseudometric axioms");
    validate->add_option("input", input, input_help)->required();
    add_output(validate);

    CLI::App* trim = app.add_subcommand("trim", "one trimming step as JSON");
    trim->add_option("input", input, input_help)->required();
    add_output(trim);

    CLI::App* core = app.add_subcommand("core", "full trimming chain down to the core, as JSON");
    core->add_option("input", input, input_help)->required();
    add_output(core);

    CLI::App* forest =
        app.add_subcommand("forest", "forest over the trim core whose leaf space is the input");
    forest->add_option("input", input, input_help)->required();
    forest->add_option("--depth", depth, "number of trimming levels (default: the height)");
    forest->add_option("-f,--format", format, "json (default) or dot");
    add_output(forest);

    CLI::App* leafspace =
        app.add_subcommand("leafspace", "leaf space of a forest or tree JSON file");
    leafspace->add_option("input", input, "forest or tree JSON file (\"-\" for stdin)")
        ->required();
    leafspace->add_option("-f,--format", format, "csv (default) or json");
    add_output(leafspace);

    CLI::App* check = app.add_subcommand("check-trim", "print whether the space is trim");
    check->add_option("input", input, input_help)->required();
    add_output(check);

    CLI::App* isometric =
        app.add_subcommand("isometric", "search for an isometry between two small spaces");
    isometric->add_option("first", input, input_help)->required();
    isometric->add_option("second", second, "second matrix file")->required();
    add_output(isometric);

    CLI::App* gen = app.add_subcommand("gen", "deterministic random space, tree or forest");
    gen->add_option("kind", kind, "space (default), tree or forest")
        ->check(CLI::IsMember({"space", "tree", "forest"}));
    gen->add_option("--seed", seed, "generator seed (default 0)");
    gen->add_option("--points", points, "points / vertices / base points (default 6)");
    gen->add_option("-f,--format", format, "space: csv or json; forest: json or dot");
    add_output(gen);

    CLI::App* compose = app.add_subcommand(
        "compose", "glue two forests: the first forest's base must be the leaf space of the second");
    compose->add_option("outer", input, "forest JSON whose base is glued onto")->required();
    compose->add_option("inner", second, "forest JSON providing the new base")->required();
    compose->add_option("-f,--format", format, "json (default) or dot");
    add_output(compose);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        std::string result;

        if (*validate) {
            PseudometricSpace space = space_from_text(slurp(input, in));
            std::ostringstream report;
            report << "ok: pseudometric axioms hold\n"
                   << "points: " << space.size() << "\n"
                   << "metric: " << (space.is_metric() ? "yes" : "no") << "\n"
                   << "trim: " << (is_trim(space) ? "yes" : "no") << "\n";
            result = report.str();
        } else if (*trim) {
            PseudometricSpace space = space_from_text(slurp(input, in));
            result = dump_json(step_to_json(trim_step(space)));
        } else if (*core) {
            PseudometricSpace space = space_from_text(slurp(input, in));
            result = dump_json(chain_to_json(trim_core(space)));
        } else if (*forest) {
            std::string fmt = pick_format(format, {"json", "dot"}, "json");
            PseudometricSpace space = space_from_text(slurp(input, in));
            TrimChain chain = trim_core(space);
            std::size_t levels = forest->count("--depth")
                                     ? depth
                                     : std::max<std::size_t>(1, chain.height());
            result = render_forest(canonical_forest(chain, levels), fmt);
        } else if (*leafspace) {
            std::string fmt = pick_format(format, {"csv", "json"}, "csv");
            std::string text = slurp(input, in);
            if (!looks_like_json(text))
                throw ParseError("leafspace expects a forest or tree JSON file");
            ordered_json j = json_from_text(text);
            PseudometricSpace space;
            if (j.contains("base"))
                space = leaf_space(forest_from_json(j)).space;
            else if (j.contains("vertices"))
                space = tree_leaf_space(tree_from_json(j));
            else
                throw ParseError("input is neither a forest nor a tree file");
            result = render_space(sorted_by_label(space), fmt);
        } else if (*check) {
            PseudometricSpace space = space_from_text(slurp(input, in));
            result = is_trim(space) ? "true\n" : "false\n";
        } else if (*isometric) {
            PseudometricSpace a = space_from_text(slurp(input, in));
            PseudometricSpace b = space_from_text(slurp(second, in));
            std::ostringstream lines;
            if (auto m = find_isometry(a, b)) {
                for (std::size_t i = 0; i < a.size(); ++i)
                    lines << a.label(i) << " -> " << b.label((*m)[i]) << "\n";
            } else {
                lines << "none\n";
            }
            result = lines.str();
        } else if (*gen) {
            SplitMix64 rng(seed);
            if (kind == "space") {
                std::string fmt = pick_format(format, {"csv", "json"}, "csv");
                result = render_space(random_space(rng, points), fmt);
            } else if (kind == "tree") {
                std::string fmt = pick_format(format, {"json"}, "json");
                (void)fmt;
                result = dump_json(tree_to_json(random_tree(rng, points, true)));
            } else {
                std::string fmt = pick_format(format, {"json", "dot"}, "json");
                result = render_forest(random_forest(rng, points, 2, 4), fmt);
            }
        } else if (*compose) {
            std::string fmt = pick_format(format, {"json", "dot"}, "json");
            MetricForest outer = forest_from_json(json_from_text(slurp(input, in)));
            MetricForest inner = forest_from_json(json_from_text(slurp(second, in)));
            result = render_forest(compose_forests(outer, inner), fmt);
        }

        if (!output.empty()) {
            std::ofstream file(output, std::ios::binary);
            if (!file) throw ParseError("cannot open output file: " + output);
            file << result;
            if (!file) throw ParseError("cannot write output file: " + output);
        } else {
            out << result;
        }
        return 0;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace trimetric
