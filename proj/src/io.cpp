#include "coopcolor/io.hpp"

#include <array>
#include <fstream>
#include <sstream>

namespace coopcolor {

namespace {

std::uint64_t read_count(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing key \"") + key + "\"");
    const auto& v = j.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
        throw InputError(std::string("\"") + key + "\" must be a non-negative integer");
    return v.get<std::uint64_t>();
}

std::uint32_t read_index(const Json& v, const char* what) {
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > std::numeric_limits<std::uint32_t>::max())
        throw InputError(std::string(what) + " must be a non-negative integer");
    return v.get<std::uint32_t>();
}

const Json& read_array(const Json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array())
        throw InputError(std::string("\"") + key + "\" must be an array");
    return j.at(key);
}

struct PaletteEntry {
    const char* color;
    const char* style;
};

constexpr std::array<PaletteEntry, 8> palette{{
    {"black", "solid"},
    {"blue", "dashed"},
    {"red", "dotted"},
    {"darkgreen", "bold"},
    {"orange", "solid"},
    {"purple", "dashed"},
    {"brown", "dotted"},
    {"cyan4", "bold"},
}};

}  // namespace

Json family_to_json(const GraphFamily& family) {
    Json graphs = Json::array();
    for (const auto& g : family.members()) {
        Json edges = Json::array();
        for (const auto& e : g.edges())
            edges.push_back({e.u, e.v});
        graphs.push_back(std::move(edges));
    }
    return {{"n", family.vertex_count()}, {"graphs", std::move(graphs)}};
}

GraphFamily family_from_json(const Json& j) {
    const auto n = read_count(j, "n");
    std::vector<Graph> members;
    for (const auto& graph : read_array(j, "graphs")) {
        if (!graph.is_array())
            throw InputError("each entry of \"graphs\" must be an edge array");
        std::vector<Edge> edges;
        for (const auto& e : graph) {
            if (!e.is_array() || e.size() != 2)
                throw InputError("family edges must be [u, v] pairs");
            edges.push_back({read_index(e[0], "vertex"), read_index(e[1], "vertex")});
        }
        members.emplace_back(n, edges);
    }
    return GraphFamily(n, std::move(members));
}

Json adapted_to_json(const EdgeColoredMultigraph& ecm) {
    Json edges = Json::array();
    for (const auto& e : ecm.edges())
        edges.push_back({e.u, e.v, e.color});
    return {{"n", ecm.vertex_count()}, {"m", ecm.color_count()}, {"edges", std::move(edges)}};
}

EdgeColoredMultigraph adapted_from_json(const Json& j) {
    const auto n = read_count(j, "n");
    const auto m = read_count(j, "m");
    if (m > std::numeric_limits<Color>::max())
        throw InputError("\"m\" is too large");
    std::vector<ColoredEdge> edges;
    for (const auto& e : read_array(j, "edges")) {
        if (!e.is_array() || e.size() != 3)
            throw InputError("adapted edges must be [u, v, c] triples");
        edges.push_back({read_index(e[0], "vertex"), read_index(e[1], "vertex"), read_index(e[2], "color")});
    }
    return EdgeColoredMultigraph(n, static_cast<Color>(m), std::move(edges));
}

Json assignment_to_json(const CoverAssignment& a) {
    return {{"colors", std::vector<Color>(a.colors().begin(), a.colors().end())}};
}

CoverAssignment assignment_from_json(const Json& j) {
    if (!j.is_object())
        throw InputError("assignment must be an object");
    std::vector<Color> colors;
    for (const auto& c : read_array(j, "colors"))
        colors.push_back(read_index(c, "color"));
    return CoverAssignment(std::move(colors));
}

InstanceFormat detect_format(const Json& j) {
    if (j.is_object() && j.contains("graphs"))
        return InstanceFormat::family;
    if (j.is_object() && j.contains("edges"))
        return InstanceFormat::adapted;
    throw InputError("not a family (\"graphs\") or adapted (\"edges\") instance");
}

GraphFamily instance_from_json(const Json& j) {
    return detect_format(j) == InstanceFormat::family ? family_from_json(j) : to_family(adapted_from_json(j));
}

Json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open " + path.string());
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw InputError(path.string() + ": " + e.what());
    }
}

Json outcome_to_json(const SolverOutcome& outcome, bool with_witness, bool with_stats) {
    Json j{{"status", outcome.status == Status::sat ? "SAT" : "UNSAT"}};
    if (with_witness && outcome.witness)
        j["witness"] = assignment_to_json(*outcome.witness)["colors"];
    if (with_stats)
        j["stats"] = {{"nodes", outcome.stats.nodes},
                      {"propagations", outcome.stats.propagations},
                      {"wall_time_s", outcome.stats.wall_time.count()}};
    return j;
}

Json violations_to_json(const std::vector<Violation>& violations) {
    Json list = Json::array();
    for (const auto& v : violations)
        list.push_back({v.u, v.v, v.color});
    return {{"valid", violations.empty()}, {"violations", std::move(list)}};
}

Json report_to_json(const SampleReport& report) {
    Json j{{"attempts", report.attempts},
           {"covered", report.covered},
           {"uncovered_history", report.uncovered_history}};
    j["witness"] = report.witness ? assignment_to_json(*report.witness)["colors"] : Json(nullptr);
    return j;
}

Json bounds_to_json(const ClassBounds& b) {
    auto bound = [](const std::optional<Bound>& x) -> Json {
        if (!x)
            return nullptr;
        return {{"value", x->value}, {"kind", to_string(x->kind)}};
    };
    Json j{{"class", to_string(b.graph_class)},
           {"d", b.d},
           {"lower", bound(b.lower)},
           {"upper", bound(b.upper)},
           {"list_lower", bound(b.list_lower)},
           {"list_upper", bound(b.list_upper)},
           {"exact", b.exact()}};
    j["k"] = b.k ? Json(*b.k) : Json(nullptr);
    return j;
}

std::string to_dot(const EdgeColoredMultigraph& ecm) {
    std::ostringstream os;
    os << "graph G {\n  node [shape=circle];\n";
    for (std::size_t v = 0; v < ecm.vertex_count(); ++v)
        os << "  " << v << ";\n";
    for (const auto& e : ecm.edges()) {
        const auto& p = palette[(e.color - 1) % palette.size()];
        os << "  " << e.u << " -- " << e.v << " [color=\"" << p.color << "\", style=\"" << p.style
           << "\", label=\"" << e.color << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace coopcolor
