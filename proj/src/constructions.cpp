#include "coopcolor/constructions.hpp"

#include <array>
#include <string>

namespace coopcolor {

namespace {

constexpr Color solid = 1;
constexpr Color dashed = 2;
constexpr Color snake = 3;

class Builder {
public:
    Vertex add_vertex() { return static_cast<Vertex>(n_++); }

    void add(Vertex u, Vertex v, Color c) { edges_.push_back({u, v, c}); }

    // H1 pattern on (s0, v1, v2, v3).
    void add_h1(Vertex s0, Vertex v1, Vertex v2, Vertex v3) {
        add(s0, v1, solid);
        add(v1, v2, solid);
        add(v2, v3, solid);
        add(s0, v2, dashed);
        add(v1, v2, dashed);
        add(v1, v3, dashed);
    }

    // H2 block hanging off `root` (which plays s); allocates u1, u2, u3, t in
    // that order and returns t.
    Vertex add_h2_block(Vertex root) {
        Vertex u1 = add_vertex();
        Vertex u2 = add_vertex();
        Vertex u3 = add_vertex();
        Vertex t = add_vertex();
        add_h1(root, u1, u2, u3);
        add(u3, t, snake);
        add(u2, t, snake);
        add(u1, t, snake);
        return t;
    }

    // Two levels of H2 blocks below `root`, in this order: upper block with
    // its upper and lower leaves, then lower block with its lower and upper
    // leaves. Returns the four leaf terminals in that order.
    std::array<Vertex, 4> add_two_level_tree(Vertex root) {
        Vertex upper = add_h2_block(root);
        Vertex a = add_h2_block(upper);
        Vertex b = add_h2_block(upper);
        Vertex lower = add_h2_block(root);
        Vertex c = add_h2_block(lower);
        Vertex d = add_h2_block(lower);
        return {a, b, c, d};
    }

    EdgeColoredMultigraph build(Color m) { return EdgeColoredMultigraph(n_, m, std::move(edges_)); }

private:
    std::size_t n_ = 0;
    std::vector<ColoredEdge> edges_;
};

// Center block numbering: y0, s, u1, u2, u3, x0.
constexpr Vertex tree_y0 = 0;
constexpr Vertex tree_s = 1;
constexpr Vertex tree_x0 = 5;

struct TreeBuild {
    EdgeColoredMultigraph graph;
    TreeCounterexampleLabels labels;
};

TreeBuild build_tree_counterexample() {
    Builder b;
    for (int i = 0; i < 6; ++i)
        b.add_vertex();
    // Center: H2 on (s, u1, u2, u3, x0) and the snake edge y0-s.
    b.add_h1(tree_s, 2, 3, 4);
    b.add(4, tree_x0, snake);
    b.add(3, tree_x0, snake);
    b.add(2, tree_x0, snake);
    b.add(tree_y0, tree_s, snake);

    // Leaves come back as (x1, x2, x4, x3) resp. (y1, y2, y4, y3).
    auto right = b.add_two_level_tree(tree_x0);
    auto left = b.add_two_level_tree(tree_y0);
    TreeCounterexampleLabels labels{tree_y0, tree_s, tree_x0,
                                    {right[0], right[1], right[3], right[2]},
                                    {left[0], left[1], left[3], left[2]}};
    b.add_h1(labels.x[0], labels.x[1], labels.x[2], labels.x[3]);
    b.add_h1(labels.y[0], labels.y[1], labels.y[2], labels.y[3]);
    return {b.build(3), labels};
}

EdgeColoredMultigraph build_w3_block() {
    std::vector<ColoredEdge> edges;
    for (Vertex a = 0; a < 4; ++a)
        for (Vertex b = a + 1; b < 4; ++b)
            for (Color c = 1; c <= 3; ++c)
                edges.push_back({a, b, c});
    return EdgeColoredMultigraph(4, 3, std::move(edges));
}

EdgeColoredMultigraph build_wheel_counterexample() {
    const auto block = build_w3_block();
    std::vector<ColoredEdge> edges;
    for (Color i = 1; i <= 4; ++i) {
        const Vertex base = 4 * (i - 1);
        for (const auto& e : block.edges())
            edges.push_back({base + e.u, base + e.v, shift(i, 3, e.color)});
        for (Vertex k = 0; k < 4; ++k) {
            edges.push_back({base + k, base + (k + 1) % 4, i});
            edges.push_back({wheel_counterexample_hub, base + k, i});
        }
    }
    return EdgeColoredMultigraph(17, 4, std::move(edges));
}

}  // namespace

std::string_view to_string(GadgetId id) {
    switch (id) {
        case GadgetId::h1: return "h1";
        case GadgetId::h2: return "h2";
        case GadgetId::tree_counterexample: return "tree_counterexample";
        case GadgetId::w3_block: return "w3_block";
        case GadgetId::wheel_counterexample: return "wheel_counterexample";
    }
    return "";
}

std::optional<GadgetId> parse_gadget_id(std::string_view name) {
    for (auto id : {GadgetId::h1, GadgetId::h2, GadgetId::tree_counterexample, GadgetId::w3_block,
                    GadgetId::wheel_counterexample})
        if (name == to_string(id))
            return id;
    return std::nullopt;
}

TreeCounterexampleLabels tree_counterexample_labels() { return build_tree_counterexample().labels; }

EdgeColoredMultigraph gadget(GadgetId id) {
    switch (id) {
        case GadgetId::h1: {
            Builder b;
            for (int i = 0; i < 4; ++i)
                b.add_vertex();
            b.add_h1(0, 1, 2, 3);
            return b.build(2);
        }
        case GadgetId::h2: {
            Builder b;
            Vertex s = b.add_vertex();
            b.add_h2_block(s);
            return b.build(3);
        }
        case GadgetId::tree_counterexample: return build_tree_counterexample().graph;
        case GadgetId::w3_block: return build_w3_block();
        case GadgetId::wheel_counterexample: return build_wheel_counterexample();
    }
    throw InputError("unknown gadget id");
}

Color shift(Color i, Color t, Color x) {
    if (t < 1 || i < 1 || i > t + 1 || x < 1 || x > t)
        throw InputError("shift(i=" + std::to_string(i) + ", t=" + std::to_string(t) +
                         ", x=" + std::to_string(x) + ") out of range");
    return x < i ? x : x + 1;
}

EdgeColoredMultigraph bipartite_g(unsigned t) {
    if (t < 1 || t > max_bipartite_g_level)
        throw InputError("bipartite_g level must be in 1.." + std::to_string(max_bipartite_g_level) +
                         ", got " + std::to_string(t));
    std::size_t n = 4;
    std::vector<ColoredEdge> edges{{0, 1, 1}, {1, 2, 1}, {2, 3, 1}, {3, 0, 1}};
    for (Color level = 1; level < t; ++level) {
        std::vector<ColoredEdge> next;
        next.reserve((level + 1) * edges.size() + 2 * (level + 1) * n);
        for (Color i = 1; i <= level + 1; ++i) {
            const auto base = static_cast<Vertex>((i - 1) * n);
            for (const auto& e : edges)
                next.push_back({base + e.u, base + e.v, shift(i, level, e.color)});
        }
        const auto u = static_cast<Vertex>((level + 1) * n);
        const auto v = u + 1;
        for (Color i = 1; i <= level + 1; ++i) {
            const auto base = static_cast<Vertex>((i - 1) * n);
            for (Vertex y = base; y < base + n; ++y) {
                next.push_back({u, y, i});
                next.push_back({v, y, i});
            }
        }
        n = (level + 1) * n + 2;
        edges = std::move(next);
    }
    return EdgeColoredMultigraph(n, t, std::move(edges));
}

std::uint64_t v_count(unsigned t) {
    if (t < 1 || t > 20)
        throw InputError("v_count is defined for 1 <= t <= 20, got " + std::to_string(t));
    std::uint64_t v = 4;
    for (unsigned k = 2; k <= t; ++k)
        v = k * v + 2;
    return v;
}

std::uint64_t delta_count(unsigned t) {
    if (t < 1 || t > 21)
        throw InputError("delta_count is defined for 1 <= t <= 21, got " + std::to_string(t));
    return t == 1 ? 2 : v_count(t - 1);
}

}  // namespace coopcolor
