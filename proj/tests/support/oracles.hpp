#ifndef COOPCOLOR_TESTS_ORACLES_HPP
#define COOPCOLOR_TESTS_ORACLES_HPP

#include <cstdint>
#include <vector>

#include "coopcolor/graph.hpp"

// Reference implementations that share no code with the library search.
namespace coopcolor::testing {

/// Every color vector in 1..m^n, in lexicographic order, that leaves no
/// member-i edge with both ends colored i.
std::vector<std::vector<Color>> brute_force_colorings(const GraphFamily& family);

/// Same test, stopping at the first hit.
bool brute_force_colorable(const GraphFamily& family);

/// Some vertex subset of size >= 4 induces a cycle, i.e. a cycle of length
/// > 3 without a chord exists. Bitmask enumeration; n <= 20.
bool has_chordless_long_cycle(const Graph& g);

/// 2 t! (1/0! + 1/1! + ... + 1/t!) as an exact integer sum of 2 t!/k!.
std::uint64_t v_count_closed_form(unsigned t);

}  // namespace coopcolor::testing

#endif  // COOPCOLOR_TESTS_ORACLES_HPP
