#include "cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>

#include <CLI11.hpp>

#include "coopcolor/bounds.hpp"
#include "coopcolor/constructions.hpp"
#include "coopcolor/io.hpp"
#include "coopcolor/randomized.hpp"
#include "coopcolor/solver.hpp"

namespace coopcolor::cli {

namespace {

struct Options {
    std::string name;
    std::string file;
    std::string assignment;
    std::string graph_class;
    std::string target;
    unsigned level = 1;
    std::uint64_t d = 0;
    std::optional<std::uint64_t> k;
    std::uint64_t seed = 0;
    std::size_t max_attempts = 10000;
    std::size_t limit = 0;
    unsigned threads = 1;
    bool json = false;
    bool dot = false;
    bool witness = false;
    bool stats = false;
};

void print_colors(std::ostream& out, const CoverAssignment& a) {
    for (std::size_t v = 0; v < a.size(); ++v)
        out << (v ? " " : "") << a[static_cast<Vertex>(v)];
    out << '\n';
}

// COOP_COLOR_THREADS caps whatever --threads asks for.
unsigned effective_threads(unsigned requested) {
    unsigned threads = std::max(1u, requested);
    if (const char* cap = std::getenv("COOP_COLOR_THREADS")) {
        char* end = nullptr;
        auto value = std::strtoul(cap, &end, 10);
        if (end != cap && *end == '\0' && value >= 1)
            threads = std::min<unsigned>(threads, static_cast<unsigned>(value));
    }
    return threads;
}

EdgeColoredMultigraph load_adapted(const std::string& path) {
    auto j = read_json_file(path);
    return detect_format(j) == InstanceFormat::adapted ? adapted_from_json(j) : to_adapted(family_from_json(j));
}

CoverAssignment load_assignment(const std::string& arg) {
    auto first = arg.find_first_not_of(" \t\n");
    if (first != std::string::npos && arg[first] == '{') {
        try {
            return assignment_from_json(Json::parse(arg));
        } catch (const Json::parse_error& e) {
            throw InputError(std::string("assignment: ") + e.what());
        }
    }
    return assignment_from_json(read_json_file(arg));
}

int cmd_gadget(const Options& o, std::ostream& out) {
    EdgeColoredMultigraph g;
    if (o.name == "bipartite_g") {
        g = bipartite_g(o.level);
    } else if (auto id = parse_gadget_id(o.name)) {
        g = gadget(*id);
    } else {
        throw InputError("unknown gadget \"" + o.name + "\"");
    }
    if (o.dot)
        out << to_dot(g);
    else
        out << adapted_to_json(g).dump() << '\n';
    return exit_ok;
}

int cmd_solve(const Options& o, std::ostream& out) {
    auto family = instance_from_json(read_json_file(o.file));
    auto outcome = solve(family, SolveOptions{effective_threads(o.threads)});
    if (o.json) {
        out << outcome_to_json(outcome, o.witness, o.stats).dump() << '\n';
    } else {
        out << (outcome.status == Status::sat ? "SAT" : "UNSAT") << '\n';
        if (o.witness && outcome.witness) {
            out << "witness: ";
            print_colors(out, *outcome.witness);
        }
        if (o.stats)
            out << "nodes=" << outcome.stats.nodes << " propagations=" << outcome.stats.propagations
                << " wall_time_s=" << outcome.stats.wall_time.count() << '\n';
    }
    return outcome.status == Status::sat ? exit_ok : exit_negative;
}

int cmd_check(const Options& o, std::ostream& out) {
    auto family = instance_from_json(read_json_file(o.file));
    auto violations = check_coloring(family, load_assignment(o.assignment));
    if (o.json) {
        out << violations_to_json(violations).dump() << '\n';
    } else if (violations.empty()) {
        out << "valid\n";
    } else {
        for (const auto& v : violations)
            out << "violation: color " << v.color << " edge (" << v.u << "," << v.v << ")\n";
    }
    return violations.empty() ? exit_ok : exit_negative;
}

int cmd_enumerate(const Options& o, std::ostream& out) {
    auto family = instance_from_json(read_json_file(o.file));
    auto all = enumerate(family, o.limit);
    for (const auto& a : all) {
        if (o.json)
            out << assignment_to_json(a).dump() << '\n';
        else
            print_colors(out, a);
    }
    return all.empty() ? exit_negative : exit_ok;
}

int cmd_sample(const Options& o, std::ostream& out) {
    auto family = instance_from_json(read_json_file(o.file));
    auto report = find_coloring_lll(family, o.seed, o.max_attempts);
    if (o.json) {
        out << report_to_json(report).dump() << '\n';
    } else {
        out << "attempts=" << report.attempts << " covered=" << (report.covered ? "true" : "false") << '\n';
        if (!report.uncovered_history.empty())
            out << "last_uncovered=" << report.uncovered_history.back() << '\n';
        if (report.witness) {
            out << "witness: ";
            print_colors(out, *report.witness);
        }
    }
    return report.covered ? exit_ok : exit_negative;
}

int cmd_bounds(const Options& o, std::ostream& out) {
    auto c = parse_graph_class(o.graph_class);
    if (!c)
        throw InputError("unknown class \"" + o.graph_class + "\"");
    auto b = bounds_for(*c, o.d, o.k);
    if (o.json)
        out << bounds_to_json(b).dump() << '\n';
    else
        out << format_bounds(b) << '\n';
    return exit_ok;
}

int cmd_convert(const Options& o, std::ostream& out) {
    auto j = read_json_file(o.file);
    if (o.target == "family")
        out << family_to_json(instance_from_json(j)).dump() << '\n';
    else
        out << adapted_to_json(to_adapted(instance_from_json(j))).dump() << '\n';
    return exit_ok;
}

int cmd_export_dot(const Options& o, std::ostream& out) {
    auto dot = to_dot(load_adapted(o.file));
    if (o.json)
        out << Json{{"dot", dot}}.dump() << '\n';
    else
        out << dot;
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cooperative and adapted coloring toolkit", "coopcolor"};
    app.require_subcommand(1);
    Options o;

    auto* gadget_cmd = app.add_subcommand("gadget", "Emit a built-in construction");
    gadget_cmd->add_option("name", o.name,
                           "h1 | h2 | tree_counterexample | w3_block | wheel_counterexample | bipartite_g")
        ->required();
    gadget_cmd->add_option("--t", o.level, "Level for bipartite_g")->check(CLI::PositiveNumber);
    auto* json_flag = gadget_cmd->add_flag("--json", o.json, "Adapted-JSON output (default)");
    gadget_cmd->add_flag("--dot", o.dot, "Graphviz output")->excludes(json_flag);

    auto* solve_cmd = app.add_subcommand("solve", "Decide whether a cooperative coloring exists");
    solve_cmd->add_option("file", o.file, "Family- or adapted-JSON instance")->required();
    solve_cmd->add_flag("--witness", o.witness, "Print a coloring when SAT");
    solve_cmd->add_flag("--stats", o.stats, "Print search statistics");
    solve_cmd->add_option("--threads", o.threads, "Worker threads (capped by COOP_COLOR_THREADS)")
        ->check(CLI::PositiveNumber);
    solve_cmd->add_flag("--json", o.json);

    auto* check_cmd = app.add_subcommand("check", "List the violations of an assignment");
    check_cmd->add_option("file", o.file, "Family- or adapted-JSON instance")->required();
    check_cmd->add_option("assignment", o.assignment, "Assignment-JSON file or inline JSON")->required();
    check_cmd->add_flag("--json", o.json);

    auto* enum_cmd = app.add_subcommand("enumerate", "List colorings in lexicographic order");
    enum_cmd->add_option("file", o.file, "Family- or adapted-JSON instance")->required();
    enum_cmd->add_option("--limit", o.limit, "Maximum number of colorings")->required()->check(CLI::PositiveNumber);
    enum_cmd->add_flag("--json", o.json);

    auto* sample_cmd = app.add_subcommand("sample-lll", "Random-labeling sampler");
    sample_cmd->add_option("file", o.file, "Family- or adapted-JSON instance")->required();
    sample_cmd->add_option("--seed", o.seed, "64-bit seed");
    sample_cmd->add_option("--max-attempts", o.max_attempts, "Labelings to try")->check(CLI::NonNegativeNumber);
    sample_cmd->add_flag("--json", o.json);

    auto* bounds_cmd = app.add_subcommand("bounds", "Known bounds for a graph class");
    bounds_cmd->add_option("class", o.graph_class, "Class tag")->required();
    bounds_cmd->add_option("d", o.d, "Maximum degree")->required();
    bounds_cmd->add_option("--k", o.k, "Class parameter k");
    bounds_cmd->add_flag("--json", o.json);

    auto* convert_cmd = app.add_subcommand("convert", "Translate between family- and adapted-JSON");
    convert_cmd->add_option("file", o.file, "Input instance")->required();
    convert_cmd->add_option("--to", o.target, "family | adapted")
        ->required()
        ->check(CLI::IsMember({"family", "adapted"}));

    auto* dot_cmd = app.add_subcommand("export-dot", "Render an instance as Graphviz");
    dot_cmd->add_option("file", o.file, "Input instance")->required();
    dot_cmd->add_flag("--json", o.json);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*gadget_cmd) return cmd_gadget(o, out);
        if (*solve_cmd) return cmd_solve(o, out);
        if (*check_cmd) return cmd_check(o, out);
        if (*enum_cmd) return cmd_enumerate(o, out);
        if (*sample_cmd) return cmd_sample(o, out);
        if (*bounds_cmd) return cmd_bounds(o, out);
        if (*convert_cmd) return cmd_convert(o, out);
        if (*dot_cmd) return cmd_export_dot(o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}

}  // namespace coopcolor::cli
