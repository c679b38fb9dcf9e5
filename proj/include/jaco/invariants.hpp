#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "jaco/core.hpp"

namespace jaco {

struct JaconianReport {
    std::int64_t delta = 0;                    // maximum underlying degree
    std::vector<std::int64_t> jaconian_set;    // ascending, non-empty
    std::int64_t prime_jaconian = 0;           // min(jaconian_set)
    std::int64_t hope_first = 1, hope_last = 0;  // empty when first > last
    bool hope_is_complete = true;              // vacuously true when empty
    std::int64_t edge_count = 0;

    bool hope_empty() const { return hope_first > hope_last; }
};

JaconianReport analyze(const JacoGraph& g);

std::int64_t edge_count(const JacoGraph& g);

// Edge counts of J_1..J_n_max computed two ways: through the prime-Jaconian
// recursion (branching on whether the prime Jaconian vertex is saturated)
// and directly. Index 0 of each vector is unused.
struct EdgeCountSeries {
    std::vector<std::int64_t> recursive;
    std::vector<std::int64_t> direct;
};
EdgeCountSeries edge_count_recursive(const LinearFunction& f, std::int64_t n_max);

// Weakly connected components, as consecutive 1-based index ranges.
// Arcs only span forward over contiguous intervals, so components are
// always runs of consecutive vertices.
std::vector<std::pair<std::int64_t, std::int64_t>> components(const JacoGraph& g);

// Delta(J_1..J_n_max); index 0 unused. Requires m >= 1.
std::vector<std::int64_t> delta_series(const LinearFunction& f, std::int64_t n_max);

// Least n <= n_cap whose Jaconian set is exactly {v_{m+c+1}} with
// Delta = f(m+c+1); nullopt when no such n exists in range.
std::optional<std::pair<std::int64_t, std::int64_t>> smallest_unique_jaconian(
    const LinearFunction& f, std::int64_t n_cap);

}  // namespace jaco
