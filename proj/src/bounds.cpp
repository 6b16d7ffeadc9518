#include "coopcolor/bounds.hpp"

#include <cmath>
#include <cstdio>

#include "coopcolor/graph.hpp"

namespace coopcolor {

namespace {

struct ClassName {
    GraphClass c;
    std::string_view name;
};

constexpr ClassName class_names[] = {
    {GraphClass::general, "general"},
    {GraphClass::chordal, "chordal"},
    {GraphClass::paths, "paths"},
    {GraphClass::trees, "trees"},
    {GraphClass::forests, "forests"},
    {GraphClass::bipartite, "bipartite"},
    {GraphClass::balanced_complete_bipartite, "balanced-complete-bipartite"},
    {GraphClass::bipartite_one_side_k, "bipartite-one-side-k"},
    {GraphClass::k_degenerate, "k-degenerate"},
    {GraphClass::star_forests, "star-forests"},
    {GraphClass::wheels, "wheels"},
    {GraphClass::generalized_theta, "generalized-theta"},
    {GraphClass::wheels_and_fans, "wheels-and-fans"},
    {GraphClass::caterpillars, "caterpillars"},
};

Bound exact(double v) { return {v, BoundKind::exact}; }
Bound asymptotic(double v) { return {v, BoundKind::asymptotic}; }

double log_over_loglog(double d) { return std::log(d) / std::log(std::log(d)); }

void require_min_d(GraphClass c, std::uint64_t d, std::uint64_t min_d) {
    if (d < min_d)
        throw InputError(std::string(to_string(c)) + " bounds need d >= " + std::to_string(min_d) +
                         ", got " + std::to_string(d));
}

std::string format_value(double v) {
    char buf[32];
    if (v == std::floor(v) && std::fabs(v) < 1e15)
        std::snprintf(buf, sizeof buf, "%.0f", v);
    else
        std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

}  // namespace

std::string_view to_string(GraphClass c) {
    for (const auto& entry : class_names)
        if (entry.c == c)
            return entry.name;
    return "";
}

std::optional<GraphClass> parse_graph_class(std::string_view name) {
    for (const auto& entry : class_names)
        if (entry.name == name)
            return entry.c;
    return std::nullopt;
}

const std::vector<GraphClass>& all_graph_classes() {
    static const std::vector<GraphClass> classes = [] {
        std::vector<GraphClass> out;
        for (const auto& entry : class_names)
            out.push_back(entry.c);
        return out;
    }();
    return classes;
}

bool takes_k(GraphClass c) { return c == GraphClass::bipartite_one_side_k || c == GraphClass::k_degenerate; }

std::string_view to_string(BoundKind k) {
    return k == BoundKind::exact ? "exact" : "principal-term-asymptotic";
}

bool ClassBounds::exact() const {
    return lower && upper && lower->kind == BoundKind::exact && upper->kind == BoundKind::exact;
}

ClassBounds bounds_for(GraphClass c, std::uint64_t d, std::optional<std::uint64_t> k) {
    if (takes_k(c) && (!k || *k < 1))
        throw InputError(std::string(to_string(c)) + " needs k >= 1");
    if (!takes_k(c) && k)
        throw InputError(std::string(to_string(c)) + " takes no k");

    ClassBounds b{c, d, k, {}, {}, {}, {}};
    const auto dd = static_cast<double>(d);
    switch (c) {
        case GraphClass::general:
            require_min_d(c, d, 2);
            b.lower = exact(dd + 2);
            b.upper = exact(2 * dd);
            b.list_lower = exact(dd + 2);
            b.list_upper = exact(2 * dd);
            break;
        case GraphClass::chordal:
            require_min_d(c, d, 1);
            b.lower = b.upper = exact(dd + 1);
            break;
        case GraphClass::paths:
            if (d != 2)
                throw InputError("paths bounds are stated only for d = 2");
            b.lower = b.upper = exact(3);
            break;
        case GraphClass::trees:
        case GraphClass::forests:
            require_min_d(c, d, 2);
            if (d == 2) {
                // Maximum degree 2 trees are paths.
                b.lower = b.upper = exact(3);
            } else if (d == 3) {
                b.lower = b.upper = exact(4);
            } else {
                b.lower = exact(std::log2(std::log2(dd)));
                b.upper = asymptotic(std::log(dd) / std::log(4.0 / 3.0));
            }
            break;
        case GraphClass::bipartite:
            require_min_d(c, d, 2);
            b.lower = exact(std::log2(dd));
            b.upper = asymptotic(2 * dd / std::log(dd));
            break;
        case GraphClass::balanced_complete_bipartite:
            require_min_d(c, d, 2);
            b.lower = exact(std::log2(dd));
            b.upper = asymptotic(std::log2(dd));
            break;
        case GraphClass::bipartite_one_side_k:
        case GraphClass::generalized_theta:
            require_min_d(c, d, 3);
            b.lower = b.upper = asymptotic(log_over_loglog(dd));
            b.list_upper = asymptotic(log_over_loglog(dd));
            break;
        case GraphClass::k_degenerate: {
            require_min_d(c, d, 1);
            const auto kd = static_cast<double>(*k) * dd;
            b.upper = exact(13 * (1 + static_cast<double>(*k) * std::log2(kd)));
            break;
        }
        case GraphClass::star_forests:
            require_min_d(c, d, 3);
            b.lower = asymptotic(log_over_loglog(dd));
            break;
        case GraphClass::wheels:
            if (d != 4)
                throw InputError("wheels bounds are stated only for d = 4");
            b.lower = b.upper = exact(5);
            break;
        case GraphClass::wheels_and_fans:
        case GraphClass::caterpillars:
            require_min_d(c, d, 3);
            b.lower = b.upper = asymptotic(log_over_loglog(dd));
            break;
    }
    return b;
}

std::string format_bounds(const ClassBounds& b) {
    auto one = [&](std::string_view name, const std::optional<Bound>& bound, bool with_kind) {
        std::string s(name);
        s += '=';
        if (!bound)
            return s + "none";
        s += format_value(bound->value);
        if (with_kind)
            s += " (" + std::string(to_string(bound->kind)) + ")";
        return s;
    };
    if (b.exact())
        return one("lower", b.lower, false) + " " + one("upper", b.upper, false) + " exact";
    return one("lower", b.lower, true) + " " + one("upper", b.upper, true);
}

}  // namespace coopcolor
