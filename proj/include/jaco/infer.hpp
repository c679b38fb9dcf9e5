#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "jaco/core.hpp"

namespace jaco {

using Arc = std::pair<std::int64_t, std::int64_t>;

struct InferenceResult {
    enum class Status { unique, ambiguous, not_a_jaco_graph };

    Status status = Status::not_a_jaco_graph;
    LinearFunction f;                         // meaningful when unique
    std::vector<LinearFunction> candidates;   // meaningful when ambiguous
    std::string constraint;                   // e.g. "m + c >= 2" for K_n inputs
    bool validated = false;                   // full reconstruction matched
    std::string diagnostic;                   // why the input is not a Jaco graph
};

std::string to_string(InferenceResult::Status s);

// Recovers the generating function from a presented arc list on vertices
// 1..n. A saturated pair of vertices pins (m, c) via
//   m*1 + c = d(v_1),  m*2 + c = d(v_2);
// complete inputs K_n are ambiguous (any m + c >= n-1), and disjoint unions
// of cliques are matched against the m = 0 classes. Every answer is
// validated by reconstructing the graph and comparing arc sets exactly.
// Malformed arc lists (out of range, i >= j, duplicates) are rejected.
InferenceResult infer(const std::vector<Arc>& arcs, std::int64_t n);

// The k+1 generators with m + c = k, ordered by m; m = 0 members are relaxed.
std::vector<LinearFunction> f_related(std::int64_t k);

// Materialises the arc list, ascending by (i, j).
std::vector<Arc> arcs_of(const JacoGraph& g);

// For consecutive saturated vertices v_i, v_{i+1}, the largest arc targets
// i' and j' and their gap j' - i'.
struct SaturatedPairGap {
    std::int64_t i_prime = 0;
    std::int64_t j_prime = 0;
    std::int64_t gap = 0;
};
SaturatedPairGap saturated_pair_check(const JacoGraph& g, std::int64_t i,
                                      std::int64_t j);

}  // namespace jaco
