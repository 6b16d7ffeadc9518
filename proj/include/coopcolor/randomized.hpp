#ifndef COOPCOLOR_RANDOMIZED_HPP
#define COOPCOLOR_RANDOMIZED_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "coopcolor/graph.hpp"

namespace coopcolor {

/// Bijection vertex -> label in 1..n.
class Labeling {
public:
    /// Throws InputError unless `labels` is a permutation of 1..labels.size().
    explicit Labeling(std::vector<std::uint32_t> labels);

    static Labeling identity(std::size_t n);

    std::size_t size() const { return labels_.size(); }
    std::uint32_t operator[](Vertex v) const { return labels_.at(v); }
    std::span<const std::uint32_t> labels() const { return labels_; }

    /// v -> n + 1 - label(v).
    Labeling reversed() const;

private:
    std::vector<std::uint32_t> labels_;
};

/// Reproducible sampling: std::mt19937_64 seeded with the 64-bit seed,
/// bounded integers by rejection on the raw 64-bit output, and a
/// Fisher-Yates shuffle running from the last position down. None of the
/// implementation-defined std distributions are involved, so a seed gives
/// the same labels on every standard library.
class LabelSampler {
public:
    explicit LabelSampler(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound);

    Labeling next(std::size_t n);

private:
    std::mt19937_64 engine_;
};

/// True when every component of every member is a balanced complete
/// bipartite graph K_{s,s} with s >= 1.
bool is_balanced_complete_bipartite_family(const GraphFamily& family);

/// X_i = vertices v whose minimum label over {v} + N1_i(v) + N2_i(v) sits in
/// N1_i(v), with N1/N2 the distance-1/distance-2 neighborhoods in member i.
/// Result index i-1 holds X_i, ascending.
///
/// Throws InputError if the family is not a balanced complete bipartite
/// family or the labeling has the wrong size.
std::vector<std::vector<Vertex>> build_x_sets(const GraphFamily& family, const Labeling& labeling);

/// e * 2md / 2^m <= 1, evaluated in double precision.
bool lll_condition(std::uint64_t m, std::uint64_t d);

/// Left-hand side of lll_condition.
double lll_value(std::uint64_t m, std::uint64_t d);

struct SampleReport {
    std::size_t attempts = 0;
    bool covered = false;
    std::optional<CoverAssignment> witness;
    std::vector<std::size_t> uncovered_history;  // vertices outside every X_i, per attempt
};

/// Draws labelings from LabelSampler(seed) until the X sets cover every
/// vertex or `max_attempts` draws have failed. The witness gives each vertex
/// the smallest i with v in X_i.
///
/// The vertex labelled 1 is the minimum of its own neighborhood in every
/// member, so it never joins any X_i: for n >= 1 no attempt can succeed and
/// the report always ends with covered == false.
SampleReport find_coloring_lll(const GraphFamily& family, std::uint64_t seed, std::size_t max_attempts);

}  // namespace coopcolor

#endif  // COOPCOLOR_RANDOMIZED_HPP
