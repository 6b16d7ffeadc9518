#include "oracles.hpp"

#include <bit>
#include <cassert>

namespace coopcolor::testing {

namespace {

struct Member {
    Color color;
    std::vector<Edge> edges;
};

std::vector<Member> edge_lists(const GraphFamily& family) {
    std::vector<Member> out;
    for (std::size_t i = 0; i < family.member_count(); ++i)
        out.push_back({static_cast<Color>(i + 1), family.member(i).edges()});
    return out;
}

bool valid(const std::vector<Member>& members, const std::vector<Color>& colors) {
    for (const auto& m : members)
        for (const auto& e : m.edges)
            if (colors[e.u] == m.color && colors[e.v] == m.color)
                return false;
    return true;
}

// Odometer over 1..m in every position, last position fastest.
bool advance(std::vector<Color>& colors, Color m) {
    for (std::size_t i = colors.size(); i-- > 0;) {
        if (colors[i] < m) {
            ++colors[i];
            return true;
        }
        colors[i] = 1;
    }
    return false;
}

template <class Visit>
void for_each_coloring(const GraphFamily& family, Visit visit) {
    const auto n = family.vertex_count();
    const auto m = static_cast<Color>(family.member_count());
    if (n == 0) {
        visit(std::vector<Color>{});
        return;
    }
    if (m == 0)
        return;
    auto members = edge_lists(family);
    std::vector<Color> colors(n, 1);
    do {
        if (valid(members, colors) && !visit(colors))
            return;
    } while (advance(colors, m));
}

}  // namespace

std::vector<std::vector<Color>> brute_force_colorings(const GraphFamily& family) {
    std::vector<std::vector<Color>> out;
    for_each_coloring(family, [&](const std::vector<Color>& c) {
        out.push_back(c);
        return true;
    });
    return out;
}

bool brute_force_colorable(const GraphFamily& family) {
    bool found = false;
    for_each_coloring(family, [&](const std::vector<Color>&) {
        found = true;
        return false;
    });
    return found;
}

bool has_chordless_long_cycle(const Graph& g) {
    const auto n = g.order();
    assert(n <= 20);
    std::vector<std::uint32_t> adj(n, 0);
    for (const auto& e : g.edges()) {
        adj[e.u] |= 1u << e.v;
        adj[e.v] |= 1u << e.u;
    }
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        if (std::popcount(s) < 4)
            continue;
        bool two_regular = true;
        std::uint32_t first = 0;
        for (std::size_t v = 0; v < n && two_regular; ++v)
            if (s >> v & 1u) {
                if (!first)
                    first = 1u << v;
                two_regular = std::popcount(adj[v] & s) == 2;
            }
        if (!two_regular)
            continue;
        // A connected 2-regular induced subgraph is a single cycle.
        std::uint32_t reached = first;
        for (std::uint32_t frontier = first; frontier;) {
            std::uint32_t next = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (frontier >> v & 1u)
                    next |= adj[v] & s;
            frontier = next & ~reached;
            reached |= next;
        }
        if (reached == s)
            return true;
    }
    return false;
}

std::uint64_t v_count_closed_form(unsigned t) {
    // 2 t!/k! = 2 (k+1)(k+2)...t
    std::uint64_t total = 0;
    for (unsigned k = 0; k <= t; ++k) {
        std::uint64_t term = 2;
        for (unsigned j = k + 1; j <= t; ++j)
            term *= j;
        total += term;
    }
    return total;
}

}  // namespace coopcolor::testing
