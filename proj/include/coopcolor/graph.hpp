#ifndef COOPCOLOR_GRAPH_HPP
#define COOPCOLOR_GRAPH_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace coopcolor {

using Vertex = std::uint32_t;

// Colors are 1-based: a family of m graphs uses colors 1..m.
using Color = std::uint32_t;

/// Raised for any malformed input: bad endpoints, out-of-range colors,
/// duplicate edges, or arguments outside an operation's domain.
class InputError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Edge {
    Vertex u;
    Vertex v;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct ColoredEdge {
    Vertex u;
    Vertex v;
    Color color;

    friend bool operator==(const ColoredEdge&, const ColoredEdge&) = default;
    friend auto operator<=>(const ColoredEdge&, const ColoredEdge&) = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Immutable once built. Neighbor lists are kept sorted, so two graphs with the
/// same edge set compare equal regardless of the order edges were supplied in.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);

    /// Throws InputError on a self-loop, an endpoint >= n, or a repeated pair.
    Graph(std::size_t n, std::span<const Edge> edges);
    Graph(std::size_t n, std::initializer_list<Edge> edges)
        : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

    std::size_t order() const { return adjacency_.size(); }
    std::size_t size() const { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
    std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
    bool adjacent(Vertex u, Vertex v) const;

    /// Edges with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

/// m graphs on a shared vertex set 0..n-1. Member i (0-based index) is the
/// graph G_{i+1}, i.e. the one whose independent set gets color i+1.
class GraphFamily {
public:
    GraphFamily() = default;
    explicit GraphFamily(std::size_t n) : n_(n) {}

    /// Throws InputError when a member's vertex count differs from n.
    GraphFamily(std::size_t n, std::vector<Graph> members);

    std::size_t vertex_count() const { return n_; }
    std::size_t member_count() const { return members_.size(); }
    const Graph& member(std::size_t index) const { return members_.at(index); }
    const Graph& graph_for(Color c) const { return members_.at(c - 1); }
    std::span<const Graph> members() const { return members_; }

    /// Copy with one extra member appended.
    GraphFamily with_member(Graph g) const;

    friend bool operator==(const GraphFamily&, const GraphFamily&) = default;

private:
    std::size_t n_ = 0;
    std::vector<Graph> members_;
};

/// Multigraph whose edges carry colors 1..m; the adapted-coloring view of a
/// family. Parallel edges are allowed only when their colors differ.
class EdgeColoredMultigraph {
public:
    EdgeColoredMultigraph() = default;

    /// Throws InputError on self-loops, endpoints >= n, colors outside 1..m,
    /// or a repeated (pair, color) triple. Edges are normalized to u < v and
    /// sorted by (u, v, color).
    EdgeColoredMultigraph(std::size_t n, Color m, std::vector<ColoredEdge> edges);

    std::size_t vertex_count() const { return n_; }
    Color color_count() const { return m_; }
    std::span<const ColoredEdge> edges() const { return edges_; }

    friend bool operator==(const EdgeColoredMultigraph&, const EdgeColoredMultigraph&) = default;

private:
    std::size_t n_ = 0;
    Color m_ = 0;
    std::vector<ColoredEdge> edges_;
};

/// Total map vertex -> color in 1..m. The independent set I_i of a
/// cooperative coloring is the preimage of i.
class CoverAssignment {
public:
    CoverAssignment() = default;
    explicit CoverAssignment(std::vector<Color> colors) : colors_(std::move(colors)) {}

    std::size_t size() const { return colors_.size(); }
    Color operator[](Vertex v) const { return colors_.at(v); }
    std::span<const Color> colors() const { return colors_; }

    /// Vertices assigned color c, ascending.
    std::vector<Vertex> color_class(Color c) const;

    friend bool operator==(const CoverAssignment&, const CoverAssignment&) = default;
    friend auto operator<=>(const CoverAssignment&, const CoverAssignment&) = default;

private:
    std::vector<Color> colors_;
};

GraphFamily to_family(const EdgeColoredMultigraph& ecm);
EdgeColoredMultigraph to_adapted(const GraphFamily& family);

/// The color-c monochromatic subgraph of an edge-colored multigraph.
Graph monochromatic_subgraph(const EdgeColoredMultigraph& ecm, Color c);

std::size_t max_degree(const Graph& g);

/// Chordality via maximum cardinality search followed by a perfect
/// elimination ordering check.
bool is_chordal(const Graph& g);

enum class ComponentTag : std::uint8_t {
    tree,
    path,
    cycle,
    wheel,
    fan,
    balanced_complete_bipartite,
    complete_bipartite,
    generalized_theta,
    other,
};

std::string_view to_string(ComponentTag tag);

class TagSet {
public:
    constexpr TagSet() = default;
    constexpr TagSet(std::initializer_list<ComponentTag> tags) {
        for (auto t : tags) insert(t);
    }

    constexpr void insert(ComponentTag t) { bits_ |= bit(t); }
    constexpr bool contains(ComponentTag t) const { return (bits_ & bit(t)) != 0; }
    constexpr bool empty() const { return bits_ == 0; }
    std::vector<ComponentTag> tags() const;

    friend constexpr bool operator==(TagSet, TagSet) = default;

private:
    static constexpr std::uint16_t bit(ComponentTag t) {
        return static_cast<std::uint16_t>(1u << static_cast<unsigned>(t));
    }
    std::uint16_t bits_ = 0;
};

struct ComponentClass {
    std::vector<Vertex> vertices;  // ascending
    TagSet tags;
    // Side sizes (smaller first) when the component is bipartite.
    std::optional<std::pair<std::size_t, std::size_t>> sides;
};

/// One entry per connected component, ordered by smallest vertex id.
///
/// Tags are not exclusive: K4 is a wheel (W3), C4 is a cycle, a balanced
/// complete bipartite graph and a generalized theta graph. A fan is P_k + K1
/// with k >= 2, a wheel is C_k + K1 with k >= 3. Generalized theta graphs need
/// at least two internally disjoint paths, so a lone path is not one. "other"
/// is reported only when nothing else matched.
std::vector<ComponentClass> classify_components(const Graph& g);

/// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

}  // namespace coopcolor

#endif  // COOPCOLOR_GRAPH_HPP
