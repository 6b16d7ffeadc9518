#ifndef COOPCOLOR_CONSTRUCTIONS_HPP
#define COOPCOLOR_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string_view>

#include "coopcolor/graph.hpp"

namespace coopcolor {

enum class GadgetId {
    h1,
    h2,
    tree_counterexample,
    w3_block,
    wheel_counterexample,
};

std::string_view to_string(GadgetId id);
std::optional<GadgetId> parse_gadget_id(std::string_view name);

/// Vertex ids of the named vertices in gadget(GadgetId::h2).
namespace h2_vertex {
inline constexpr Vertex s = 0;
inline constexpr Vertex u1 = 1;
inline constexpr Vertex u2 = 2;
inline constexpr Vertex u3 = 3;
inline constexpr Vertex t = 4;
}  // namespace h2_vertex

/// Vertex ids of the labelled vertices in gadget(GadgetId::tree_counterexample).
struct TreeCounterexampleLabels {
    Vertex y0;
    Vertex s;
    Vertex x0;
    Vertex x[4];  // x1..x4
    Vertex y[4];  // y1..y4
};
TreeCounterexampleLabels tree_counterexample_labels();

/// Hub of gadget(GadgetId::wheel_counterexample); copy H_i occupies
/// vertices 4(i-1)..4(i-1)+3.
inline constexpr Vertex wheel_counterexample_hub = 16;

/// The fixed edge-colored gadgets. Line styles map to colors as
/// solid = 1, dashed = 2, snake = 3.
///
/// h1:  4 vertices; color 1 path s0-v1-v2-v3, color 2 edges s0v2, v1v2, v1v3.
///      Has no adapted coloring.
/// h2:  h1 on (s,u1,u2,u3) plus t joined to u1,u2,u3 in color 3.
/// tree_counterexample: 54 vertices, every monochromatic subgraph a forest of
///      maximum degree 3, no adapted coloring with colors {1,2,3}.
/// w3_block: K4 with every pair joined in colors 1, 2 and 3.
/// wheel_counterexample: four shifted w3_block copies, a color-i 4-cycle on
///      copy i, and a hub joined to copy i in color i. 17 vertices.
EdgeColoredMultigraph gadget(GadgetId id);

/// The injection {1..t} -> {1..t+1} that skips i: x below i is kept, the rest
/// move up by one. Requires 1 <= i <= t+1 and 1 <= x <= t.
Color shift(Color i, Color t, Color x);

/// Largest t accepted by bipartite_g (v_count(8) = 219202 vertices).
inline constexpr unsigned max_bipartite_g_level = 8;

/// Recursive construction with colors 1..t: level 1 is a color-1 K_{2,2};
/// level t+1 takes t+1 copies of level t, recolors copy i by shift(i, t, .),
/// and joins two new vertices to all of copy i in color i. Copy j occupies a
/// contiguous block in order, the two new vertices come last.
/// Has no adapted coloring.
EdgeColoredMultigraph bipartite_g(unsigned t);

/// Vertex count of bipartite_g(t): 4, then t * v_count(t-1) + 2.
/// Throws InputError for t < 1 or t > 20 (the result would overflow).
std::uint64_t v_count(unsigned t);

/// Largest monochromatic degree in bipartite_g(t): 2, then v_count(t-1).
std::uint64_t delta_count(unsigned t);

}  // namespace coopcolor

#endif  // COOPCOLOR_CONSTRUCTIONS_HPP
