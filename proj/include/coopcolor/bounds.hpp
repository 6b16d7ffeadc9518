#ifndef COOPCOLOR_BOUNDS_HPP
#define COOPCOLOR_BOUNDS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace coopcolor {

enum class GraphClass {
    general,
    chordal,
    paths,
    trees,
    forests,
    bipartite,
    balanced_complete_bipartite,
    bipartite_one_side_k,
    k_degenerate,
    star_forests,
    wheels,
    generalized_theta,
    wheels_and_fans,
    caterpillars,
};

std::string_view to_string(GraphClass c);
std::optional<GraphClass> parse_graph_class(std::string_view name);
const std::vector<GraphClass>& all_graph_classes();

/// Whether the class is parameterised by k (one-side size or degeneracy).
bool takes_k(GraphClass c);

enum class BoundKind {
    exact,       // a proven value or inequality with explicit constants
    asymptotic,  // principal term only; the (1 + o(1)) factor is dropped
};

std::string_view to_string(BoundKind k);

struct Bound {
    double value;
    BoundKind kind;
};

/// Known bounds on m_G(d), and on the list variant l_G(d) where one is
/// stated. Natural log wherever the formula says "log".
struct ClassBounds {
    GraphClass graph_class;
    std::uint64_t d;
    std::optional<std::uint64_t> k;
    std::optional<Bound> lower;
    std::optional<Bound> upper;
    std::optional<Bound> list_lower;
    std::optional<Bound> list_upper;

    /// Both bounds present and exact.
    bool exact() const;
};

/// Throws InputError for d below the row's domain, a missing or spurious k,
/// or a (class, d) pair with no stated bound (paths only at d = 2, wheels
/// only at d = 4).
///
/// Domains: chordal and k-degenerate d >= 1; general, trees, forests,
/// bipartite and balanced-complete-bipartite d >= 2; the log d / log log d
/// rows d >= 3, where log log d is positive.
ClassBounds bounds_for(GraphClass c, std::uint64_t d, std::optional<std::uint64_t> k = std::nullopt);

/// "lower=4 upper=4 exact" when both bounds are exact, otherwise each bound
/// carries its own kind, e.g. "lower=1 (exact) upper=6.0056 (principal-term-asymptotic)".
/// Missing bounds print as "none".
std::string format_bounds(const ClassBounds& b);

}  // namespace coopcolor

#endif  // COOPCOLOR_BOUNDS_HPP
