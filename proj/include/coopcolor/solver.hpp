#ifndef COOPCOLOR_SOLVER_HPP
#define COOPCOLOR_SOLVER_HPP

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "coopcolor/graph.hpp"

namespace coopcolor {

/// An edge of member `color` whose endpoints were both assigned `color`.
struct Violation {
    Color color;
    Vertex u;
    Vertex v;

    friend bool operator==(const Violation&, const Violation&) = default;
};

/// Every monochromatic-conflict edge; empty iff `a` is a cooperative coloring.
/// Throws InputError if `a` is not total on the family's vertices or uses a
/// color outside 1..m.
std::vector<Violation> check_coloring(const GraphFamily& family, const CoverAssignment& a);

enum class Status { sat, unsat };

struct SearchStats {
    std::uint64_t nodes = 0;
    std::uint64_t propagations = 0;
    std::chrono::duration<double> wall_time{0};
};

struct SolverOutcome {
    Status status = Status::unsat;
    std::optional<CoverAssignment> witness;  // present iff status == sat
    SearchStats stats;
};

struct SolveOptions {
    // Number of worker threads for the root split; 1 keeps the search
    // single-threaded. Status and witness do not depend on this value.
    unsigned threads = 1;
};

/// Largest family size the search supports (domains are 64-bit masks).
inline constexpr std::size_t max_solver_colors = 64;

/// Complete backtracking search with forward checking and
/// minimum-remaining-values branching (ties to the smaller vertex id,
/// colors tried in ascending order).
SolverOutcome solve(const GraphFamily& family, const SolveOptions& options = {});

/// All cooperative colorings in lexicographic order of the color vector,
/// truncated after `limit` results.
std::vector<CoverAssignment> enumerate(const GraphFamily& family, std::size_t limit);

/// Sequential greedy coloring by vertex id; class j holds the vertices that
/// received color j+1. Uses at most max_degree(g) + 1 classes.
std::vector<std::vector<Vertex>> greedy_identical(const Graph& g);

}  // namespace coopcolor

#endif  // COOPCOLOR_SOLVER_HPP
