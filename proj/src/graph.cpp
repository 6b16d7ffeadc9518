#include "coopcolor/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <sstream>

namespace coopcolor {

namespace {

std::string edge_text(Vertex u, Vertex v) {
    std::ostringstream os;
    os << '(' << u << ',' << v << ')';
    return os.str();
}

}  // namespace

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
    for (const auto& e : edges) {
        if (e.u == e.v)
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= n || e.v >= n)
            throw InputError("edge " + edge_text(e.u, e.v) + " has an endpoint >= n=" + std::to_string(n));
        adjacency_[e.u].push_back(e.v);
        adjacency_[e.v].push_back(e.u);
    }
    for (Vertex v = 0; v < n; ++v) {
        auto& nbrs = adjacency_[v];
        std::sort(nbrs.begin(), nbrs.end());
        auto dup = std::adjacent_find(nbrs.begin(), nbrs.end());
        if (dup != nbrs.end())
            throw InputError("duplicate edge " + edge_text(std::min(v, *dup), std::max(v, *dup)));
    }
    edge_count_ = edges.size();
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    if (u >= order() || v >= order())
        return false;
    const auto& nbrs = adjacency_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < order(); ++u)
        for (Vertex v : adjacency_[u])
            if (u < v)
                out.push_back({u, v});
    return out;
}

GraphFamily::GraphFamily(std::size_t n, std::vector<Graph> members)
    : n_(n), members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].order() != n)
            throw InputError("member " + std::to_string(i + 1) + " has " +
                             std::to_string(members_[i].order()) + " vertices, expected " +
                             std::to_string(n));
    }
}

GraphFamily GraphFamily::with_member(Graph g) const {
    auto members = members_;
    members.push_back(std::move(g));
    return GraphFamily(n_, std::move(members));
}

EdgeColoredMultigraph::EdgeColoredMultigraph(std::size_t n, Color m, std::vector<ColoredEdge> edges)
    : n_(n), m_(m), edges_(std::move(edges)) {
    for (auto& e : edges_) {
        if (e.u == e.v)
            throw InputError("self-loop at vertex " + std::to_string(e.u));
        if (e.u >= n || e.v >= n)
            throw InputError("edge " + edge_text(e.u, e.v) + " has an endpoint >= n=" + std::to_string(n));
        if (e.color < 1 || e.color > m)
            throw InputError("edge " + edge_text(e.u, e.v) + " has color " + std::to_string(e.color) +
                             " outside 1.." + std::to_string(m));
        if (e.u > e.v)
            std::swap(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end())
        throw InputError("duplicate edge " + edge_text(dup->u, dup->v) + " in color " +
                         std::to_string(dup->color));
}

std::vector<Vertex> CoverAssignment::color_class(Color c) const {
    std::vector<Vertex> out;
    for (Vertex v = 0; v < colors_.size(); ++v)
        if (colors_[v] == c)
            out.push_back(v);
    return out;
}

Graph monochromatic_subgraph(const EdgeColoredMultigraph& ecm, Color c) {
    std::vector<Edge> edges;
    for (const auto& e : ecm.edges())
        if (e.color == c)
            edges.push_back({e.u, e.v});
    return Graph(ecm.vertex_count(), edges);
}

GraphFamily to_family(const EdgeColoredMultigraph& ecm) {
    std::vector<std::vector<Edge>> per_color(ecm.color_count());
    for (const auto& e : ecm.edges())
        per_color[e.color - 1].push_back({e.u, e.v});
    std::vector<Graph> members;
    members.reserve(per_color.size());
    for (const auto& edges : per_color)
        members.emplace_back(ecm.vertex_count(), edges);
    return GraphFamily(ecm.vertex_count(), std::move(members));
}

EdgeColoredMultigraph to_adapted(const GraphFamily& family) {
    std::vector<ColoredEdge> edges;
    for (std::size_t i = 0; i < family.member_count(); ++i)
        for (const auto& e : family.member(i).edges())
            edges.push_back({e.u, e.v, static_cast<Color>(i + 1)});
    return EdgeColoredMultigraph(family.vertex_count(), static_cast<Color>(family.member_count()),
                                 std::move(edges));
}

std::size_t max_degree(const Graph& g) {
    std::size_t best = 0;
    for (Vertex v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

bool is_chordal(const Graph& g) {
    const std::size_t n = g.order();
    if (n < 4)
        return true;

    // Maximum cardinality search; ties broken by smallest id.
    std::vector<std::size_t> weight(n, 0);
    std::vector<bool> visited(n, false);
    std::vector<Vertex> visit_order;
    visit_order.reserve(n);
    for (std::size_t step = 0; step < n; ++step) {
        Vertex pick = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v) {
            if (visited[v])
                continue;
            if (!found || weight[v] > weight[pick]) {
                pick = v;
                found = true;
            }
        }
        visited[pick] = true;
        visit_order.push_back(pick);
        for (Vertex w : g.neighbors(pick))
            if (!visited[w])
                ++weight[w];
    }

    // The reverse of the visit order is a perfect elimination ordering iff g
    // is chordal. For each vertex, its earliest-eliminated later neighbor must
    // be adjacent to all of its other later neighbors.
    std::vector<std::size_t> position(n);
    for (std::size_t i = 0; i < n; ++i)
        position[visit_order[n - 1 - i]] = i;
    for (Vertex v = 0; v < n; ++v) {
        std::vector<Vertex> later;
        for (Vertex w : g.neighbors(v))
            if (position[w] > position[v])
                later.push_back(w);
        if (later.size() < 2)
            continue;
        auto parent = *std::min_element(later.begin(), later.end(),
                                        [&](Vertex a, Vertex b) { return position[a] < position[b]; });
        for (Vertex w : later)
            if (w != parent && !g.adjacent(parent, w))
                return false;
    }
    return true;
}

std::string_view to_string(ComponentTag tag) {
    switch (tag) {
        case ComponentTag::tree: return "tree";
        case ComponentTag::path: return "path";
        case ComponentTag::cycle: return "cycle";
        case ComponentTag::wheel: return "wheel";
        case ComponentTag::fan: return "fan";
        case ComponentTag::balanced_complete_bipartite: return "balanced-complete-bipartite";
        case ComponentTag::complete_bipartite: return "complete-bipartite";
        case ComponentTag::generalized_theta: return "generalized-theta";
        case ComponentTag::other: return "other";
    }
    return "other";
}

std::vector<ComponentTag> TagSet::tags() const {
    std::vector<ComponentTag> out;
    for (unsigned t = 0; t <= static_cast<unsigned>(ComponentTag::other); ++t)
        if (contains(static_cast<ComponentTag>(t)))
            out.push_back(static_cast<ComponentTag>(t));
    return out;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    std::vector<std::vector<Vertex>> out;
    std::vector<bool> seen(g.order(), false);
    for (Vertex start = 0; start < g.order(); ++start) {
        if (seen[start])
            continue;
        std::vector<Vertex> comp{start};
        seen[start] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (Vertex w : g.neighbors(comp[head]))
                if (!seen[w]) {
                    seen[w] = true;
                    comp.push_back(w);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

namespace {

// Structural view of one component; `skip` excludes a hub vertex.
struct ComponentView {
    const Graph& g;
    const std::vector<Vertex>& vertices;

    std::size_t degree_without(Vertex v, std::optional<Vertex> skip) const {
        std::size_t d = g.degree(v);
        if (skip && g.adjacent(v, *skip))
            --d;
        return d;
    }

    bool connected_without(std::optional<Vertex> skip) const {
        std::vector<Vertex> rest;
        for (Vertex v : vertices)
            if (!skip || v != *skip)
                rest.push_back(v);
        if (rest.empty())
            return true;
        std::set<Vertex> seen{rest.front()};
        std::vector<Vertex> stack{rest.front()};
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (Vertex w : g.neighbors(v))
                if ((!skip || w != *skip) && seen.insert(w).second)
                    stack.push_back(w);
        }
        return seen.size() == rest.size();
    }

    // Remaining graph after removing `hub` is a single cycle (resp. path)
    // covering every other vertex.
    bool rim_is_cycle(Vertex hub) const {
        if (vertices.size() < 4)
            return false;
        for (Vertex v : vertices)
            if (v != hub && degree_without(v, hub) != 2)
                return false;
        return connected_without(hub);
    }

    bool rim_is_path(Vertex hub) const {
        if (vertices.size() < 3)
            return false;
        std::size_t ends = 0;
        for (Vertex v : vertices) {
            if (v == hub)
                continue;
            auto d = degree_without(v, hub);
            if (d == 1)
                ++ends;
            else if (d != 2)
                return false;
        }
        return ends == 2 && connected_without(hub);
    }

    bool is_theta(std::size_t edge_count) const {
        const std::size_t k = vertices.size();
        std::vector<Vertex> branch;
        for (Vertex v : vertices) {
            auto d = g.degree(v);
            if (d >= 3)
                branch.push_back(v);
            else if (d != 2)
                return false;
        }
        if (branch.empty())
            return k >= 3 && edge_count == k;  // a cycle: two paths between any pair
        if (branch.size() != 2 || g.degree(branch[0]) != g.degree(branch[1]))
            return false;
        const Vertex a = branch[0];
        const Vertex b = branch[1];
        for (Vertex first : g.neighbors(a)) {
            Vertex prev = a;
            Vertex cur = first;
            while (cur != b) {
                if (cur == a || g.degree(cur) != 2)
                    return false;
                auto nbrs = g.neighbors(cur);
                Vertex next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
                prev = cur;
                cur = next;
            }
        }
        return true;
    }
};

}  // namespace

std::vector<ComponentClass> classify_components(const Graph& g) {
    std::vector<ComponentClass> out;
    std::vector<int> side(g.order(), -1);
    for (auto& comp : connected_components(g)) {
        ComponentClass cls;
        const std::size_t k = comp.size();
        std::size_t degree_sum = 0;
        std::size_t max_deg = 0;
        for (Vertex v : comp) {
            degree_sum += g.degree(v);
            max_deg = std::max(max_deg, g.degree(v));
        }
        const std::size_t e = degree_sum / 2;
        ComponentView view{g, comp};

        if (e + 1 == k) {
            cls.tags.insert(ComponentTag::tree);
            if (max_deg <= 2)
                cls.tags.insert(ComponentTag::path);
        }
        if (k >= 3 && e == k && max_deg == 2)
            cls.tags.insert(ComponentTag::cycle);
        for (Vertex hub : comp) {
            if (g.degree(hub) + 1 != k)
                continue;
            if (view.rim_is_cycle(hub))
                cls.tags.insert(ComponentTag::wheel);
            if (view.rim_is_path(hub))
                cls.tags.insert(ComponentTag::fan);
        }

        // Two-coloring by BFS from the smallest vertex.
        bool bipartite = true;
        std::size_t side_count[2] = {0, 0};
        side[comp.front()] = 0;
        std::queue<Vertex> queue;
        queue.push(comp.front());
        while (!queue.empty()) {
            Vertex v = queue.front();
            queue.pop();
            ++side_count[side[v]];
            for (Vertex w : g.neighbors(v)) {
                if (side[w] < 0) {
                    side[w] = 1 - side[v];
                    queue.push(w);
                } else if (side[w] == side[v]) {
                    bipartite = false;
                }
            }
        }
        if (bipartite) {
            auto a = std::min(side_count[0], side_count[1]);
            auto b = std::max(side_count[0], side_count[1]);
            cls.sides = std::make_pair(a, b);
            if (a >= 1 && e == a * b) {
                cls.tags.insert(ComponentTag::complete_bipartite);
                if (a == b)
                    cls.tags.insert(ComponentTag::balanced_complete_bipartite);
            }
        }
        if (view.is_theta(e))
            cls.tags.insert(ComponentTag::generalized_theta);
        if (cls.tags.empty())
            cls.tags.insert(ComponentTag::other);

        cls.vertices = std::move(comp);
        out.push_back(std::move(cls));
    }
    return out;
}

}  // namespace coopcolor
