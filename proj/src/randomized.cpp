#include "coopcolor/randomized.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace coopcolor {

Labeling::Labeling(std::vector<std::uint32_t> labels) : labels_(std::move(labels)) {
    std::vector<bool> seen(labels_.size() + 1, false);
    for (auto l : labels_) {
        if (l < 1 || l > labels_.size() || seen[l])
            throw InputError("labeling is not a permutation of 1.." + std::to_string(labels_.size()));
        seen[l] = true;
    }
}

Labeling Labeling::identity(std::size_t n) {
    std::vector<std::uint32_t> labels(n);
    std::iota(labels.begin(), labels.end(), 1u);
    return Labeling(std::move(labels));
}

Labeling Labeling::reversed() const {
    auto labels = labels_;
    const auto top = static_cast<std::uint32_t>(labels.size() + 1);
    for (auto& l : labels)
        l = top - l;
    return Labeling(std::move(labels));
}

std::uint64_t LabelSampler::below(std::uint64_t bound) {
    if (bound == 0)
        throw InputError("sampling bound must be positive");
    // Reject the top partial bucket so every residue is equally likely.
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = engine_();
    } while (x >= limit);
    return x % bound;
}

Labeling LabelSampler::next(std::size_t n) {
    std::vector<std::uint32_t> labels(n);
    std::iota(labels.begin(), labels.end(), 1u);
    for (std::size_t i = n; i > 1; --i)
        std::swap(labels[i - 1], labels[below(i)]);
    return Labeling(std::move(labels));
}

bool is_balanced_complete_bipartite_family(const GraphFamily& family) {
    for (const auto& g : family.members())
        for (const auto& comp : classify_components(g))
            if (!comp.tags.contains(ComponentTag::balanced_complete_bipartite))
                return false;
    return true;
}

namespace {

// Distance-1 and distance-2 neighborhoods of every (member, vertex), flattened.
class Neighborhoods {
public:
    explicit Neighborhoods(const GraphFamily& family)
        : n_(family.vertex_count()), m_(family.member_count()), spans_(n_ * m_) {
        std::vector<std::size_t> stamp(n_, 0);
        std::size_t round = 0;
        for (std::size_t i = 0; i < m_; ++i) {
            const auto& g = family.member(i);
            for (Vertex v = 0; v < n_; ++v) {
                auto& span = spans_[i * n_ + v];
                span.begin = flat_.size();
                stamp[v] = ++round;
                for (Vertex w : g.neighbors(v)) {
                    stamp[w] = round;
                    flat_.push_back(w);
                }
                span.n1_end = flat_.size();
                for (Vertex w : g.neighbors(v))
                    for (Vertex x : g.neighbors(w))
                        if (stamp[x] != round) {
                            stamp[x] = round;
                            flat_.push_back(x);
                        }
                span.end = flat_.size();
            }
        }
    }

    std::vector<std::vector<Vertex>> x_sets(const Labeling& labeling) const {
        std::vector<std::vector<Vertex>> sets(m_);
        for (std::size_t i = 0; i < m_; ++i)
            for (Vertex v = 0; v < n_; ++v)
                if (in_x_set(i, v, labeling))
                    sets[i].push_back(v);
        return sets;
    }

    bool in_x_set(std::size_t member, Vertex v, const Labeling& labeling) const {
        const auto& span = spans_[member * n_ + v];
        if (span.begin == span.n1_end)
            return false;
        std::uint32_t best_n1 = std::numeric_limits<std::uint32_t>::max();
        for (std::size_t k = span.begin; k < span.n1_end; ++k)
            best_n1 = std::min(best_n1, labeling[flat_[k]]);
        std::uint32_t best_rest = labeling[v];
        for (std::size_t k = span.n1_end; k < span.end; ++k)
            best_rest = std::min(best_rest, labeling[flat_[k]]);
        return best_n1 < best_rest;
    }

private:
    struct Span {
        std::size_t begin = 0;
        std::size_t n1_end = 0;
        std::size_t end = 0;
    };
    std::size_t n_;
    std::size_t m_;
    std::vector<Span> spans_;
    std::vector<Vertex> flat_;
};

void require_balanced_family(const GraphFamily& family) {
    if (!is_balanced_complete_bipartite_family(family))
        throw InputError("every member must be a disjoint union of balanced complete bipartite graphs");
}

}  // namespace

std::vector<std::vector<Vertex>> build_x_sets(const GraphFamily& family, const Labeling& labeling) {
    if (labeling.size() != family.vertex_count())
        throw InputError("labeling has " + std::to_string(labeling.size()) + " entries, family has " +
                         std::to_string(family.vertex_count()) + " vertices");
    require_balanced_family(family);
    return Neighborhoods(family).x_sets(labeling);
}

double lll_value(std::uint64_t m, std::uint64_t d) {
    return std::ldexp(std::numbers::e * 2.0 * static_cast<double>(m) * static_cast<double>(d),
                      -static_cast<int>(std::min<std::uint64_t>(m, 4096)));
}

bool lll_condition(std::uint64_t m, std::uint64_t d) { return lll_value(m, d) <= 1.0; }

SampleReport find_coloring_lll(const GraphFamily& family, std::uint64_t seed, std::size_t max_attempts) {
    require_balanced_family(family);
    SampleReport report;
    const auto n = family.vertex_count();
    if (n == 0) {
        report.covered = true;
        report.witness = CoverAssignment{};
        return report;
    }
    const Neighborhoods hoods(family);
    LabelSampler sampler(seed);
    std::vector<Color> colors(n);
    while (report.attempts < max_attempts) {
        ++report.attempts;
        auto sets = hoods.x_sets(sampler.next(n));
        std::fill(colors.begin(), colors.end(), Color{0});
        for (std::size_t i = sets.size(); i-- > 0;)
            for (Vertex v : sets[i])
                colors[v] = static_cast<Color>(i + 1);
        auto uncovered = static_cast<std::size_t>(std::count(colors.begin(), colors.end(), Color{0}));
        report.uncovered_history.push_back(uncovered);
        if (uncovered == 0) {
            report.covered = true;
            report.witness = CoverAssignment(colors);
            break;
        }
    }
    return report;
}

}  // namespace coopcolor
