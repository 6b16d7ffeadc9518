#include "coopcolor/solver.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <thread>

namespace coopcolor {

std::vector<Violation> check_coloring(const GraphFamily& family, const CoverAssignment& a) {
    const auto n = family.vertex_count();
    const auto m = family.member_count();
    if (a.size() != n)
        throw InputError("assignment covers " + std::to_string(a.size()) + " vertices, family has " +
                         std::to_string(n));
    for (Vertex v = 0; v < n; ++v)
        if (a[v] < 1 || a[v] > m)
            throw InputError("vertex " + std::to_string(v) + " has color " + std::to_string(a[v]) +
                             " outside 1.." + std::to_string(m));

    std::vector<Violation> out;
    for (std::size_t i = 0; i < m; ++i) {
        const auto c = static_cast<Color>(i + 1);
        for (const auto& e : family.member(i).edges())
            if (a[e.u] == c && a[e.v] == c)
                out.push_back({c, e.u, e.v});
    }
    return out;
}

namespace {

using Domain = std::uint64_t;

constexpr Domain color_bit(Color c) { return Domain{1} << (c - 1); }

// Forward-checking search state. Assigning color c to v removes c from the
// domain of every unassigned G_c-neighbor of v; an emptied domain is a
// dead end.
class Search {
public:
    explicit Search(const GraphFamily& family)
        : n_(family.vertex_count()),
          m_(family.member_count()),
          neighbors_(n_ * m_),
          domain_(n_, m_ == 64 ? ~Domain{0} : (Domain{1} << m_) - 1),
          value_(n_, 0) {
        for (std::size_t i = 0; i < m_; ++i)
            for (const auto& e : family.member(i).edges()) {
                neighbors_[e.u * m_ + i].push_back(e.v);
                neighbors_[e.v * m_ + i].push_back(e.u);
            }
    }

    SearchStats& stats() { return stats_; }

    CoverAssignment assignment() const { return CoverAssignment(value_); }

    std::size_t mark() const { return trail_.size(); }

    // Returns false on a wipe-out. The caller must undo() either way.
    bool assign(Vertex v, Color c) {
        value_[v] = c;
        const auto bit = color_bit(c);
        for (Vertex u : neighbors_[v * m_ + (c - 1)]) {
            if (value_[u] != 0 || (domain_[u] & bit) == 0)
                continue;
            trail_.emplace_back(u, domain_[u]);
            domain_[u] &= ~bit;
            ++stats_.propagations;
            if (domain_[u] == 0)
                return false;
        }
        return true;
    }

    void undo(std::size_t mark, Vertex v) {
        while (trail_.size() > mark) {
            auto [u, d] = trail_.back();
            trail_.pop_back();
            domain_[u] = d;
        }
        value_[v] = 0;
    }

    Domain domain(Vertex v) const { return domain_[v]; }

    // Minimum remaining values, ties to the smaller id. n_ when complete.
    Vertex pick_mrv() const {
        Vertex best = static_cast<Vertex>(n_);
        int best_size = 65;
        for (Vertex v = 0; v < n_; ++v) {
            if (value_[v] != 0)
                continue;
            int size = std::popcount(domain_[v]);
            if (size < best_size) {
                best = v;
                best_size = size;
                if (size <= 1)
                    break;
            }
        }
        return best;
    }

    bool solve_from_here() {
        ++stats_.nodes;
        Vertex v = pick_mrv();
        if (v == n_)
            return true;
        for (Domain d = domain_[v]; d != 0; d &= d - 1) {
            const auto c = static_cast<Color>(std::countr_zero(d) + 1);
            auto m = mark();
            if (assign(v, c) && solve_from_here())
                return true;
            undo(m, v);
        }
        return false;
    }

    // Static order 0..n-1 with ascending colors gives lexicographic output.
    void enumerate_from(Vertex v, std::size_t limit, std::vector<CoverAssignment>& out) {
        if (out.size() >= limit)
            return;
        ++stats_.nodes;
        if (v == n_) {
            out.push_back(assignment());
            return;
        }
        for (Domain d = domain_[v]; d != 0 && out.size() < limit; d &= d - 1) {
            const auto c = static_cast<Color>(std::countr_zero(d) + 1);
            auto m = mark();
            if (assign(v, c))
                enumerate_from(v + 1, limit, out);
            undo(m, v);
        }
    }

private:
    std::size_t n_;
    std::size_t m_;
    std::vector<std::vector<Vertex>> neighbors_;  // index v * m + (color - 1)
    std::vector<Domain> domain_;
    std::vector<Color> value_;
    std::vector<std::pair<Vertex, Domain>> trail_;
    SearchStats stats_;
};

void check_solvable_size(const GraphFamily& family) {
    if (family.member_count() > max_solver_colors)
        throw InputError("solver supports at most " + std::to_string(max_solver_colors) +
                         " members, got " + std::to_string(family.member_count()));
}

struct Branch {
    bool sat = false;
    std::optional<CoverAssignment> witness;
    SearchStats stats;
};

// Root split: each color of the first MRV vertex is an independent subtree.
// Taking the smallest satisfiable color reproduces the sequential answer.
SolverOutcome solve_parallel(const GraphFamily& family, unsigned threads) {
    Search root(family);
    SolverOutcome out;
    const Vertex v = root.pick_mrv();
    std::vector<Color> colors;
    for (Domain d = root.domain(v); d != 0; d &= d - 1)
        colors.push_back(static_cast<Color>(std::countr_zero(d) + 1));

    std::vector<Branch> branches(colors.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t k = next++; k < colors.size(); k = next++) {
            Search search(family);
            ++search.stats().nodes;
            auto& b = branches[k];
            b.sat = search.assign(v, colors[k]) && search.solve_from_here();
            if (b.sat)
                b.witness = search.assignment();
            b.stats = search.stats();
        }
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < std::min<std::size_t>(threads, colors.size()); ++t)
        pool.emplace_back(worker);
    pool.clear();

    out.stats.nodes = 1;
    for (auto& b : branches) {
        out.stats.nodes += b.stats.nodes;
        out.stats.propagations += b.stats.propagations;
        if (b.sat && out.status != Status::sat) {
            out.status = Status::sat;
            out.witness = std::move(b.witness);
        }
    }
    return out;
}

}  // namespace

SolverOutcome solve(const GraphFamily& family, const SolveOptions& options) {
    check_solvable_size(family);
    const auto start = std::chrono::steady_clock::now();
    SolverOutcome out;
    if (family.vertex_count() == 0) {
        out.status = Status::sat;
        out.witness = CoverAssignment{};
    } else if (family.member_count() == 0) {
        out.status = Status::unsat;
    } else if (options.threads > 1) {
        out = solve_parallel(family, options.threads);
    } else {
        Search search(family);
        if (search.solve_from_here()) {
            out.status = Status::sat;
            out.witness = search.assignment();
        }
        out.stats = search.stats();
    }
    out.stats.wall_time = std::chrono::steady_clock::now() - start;
    return out;
}

std::vector<CoverAssignment> enumerate(const GraphFamily& family, std::size_t limit) {
    check_solvable_size(family);
    std::vector<CoverAssignment> out;
    if (limit == 0 || (family.member_count() == 0 && family.vertex_count() > 0))
        return out;
    Search search(family);
    search.enumerate_from(0, limit, out);
    return out;
}

std::vector<std::vector<Vertex>> greedy_identical(const Graph& g) {
    std::vector<std::vector<Vertex>> classes;
    std::vector<std::size_t> color(g.order(), 0);
    std::vector<bool> used;
    for (Vertex v = 0; v < g.order(); ++v) {
        used.assign(classes.size() + 1, false);
        for (Vertex w : g.neighbors(v))
            if (w < v)
                used[color[w]] = true;
        std::size_t c = 0;
        while (used[c])
            ++c;
        if (c == classes.size())
            classes.emplace_back();
        classes[c].push_back(v);
        color[v] = c;
    }
    return classes;
}

}  // namespace coopcolor
