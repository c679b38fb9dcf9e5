#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "jaco/core.hpp"

namespace jaco {

// Parameter ranges a verification run sweeps. Graph-level claims use
// m_lo..m_hi x c_lo..c_hi x n <= n_max; sequence-level claims run to
// seq_n_max; claims about the relaxed m = 0 classes use the c range only.
struct GridSpec {
    std::int64_t m_lo = 1, m_hi = 5;
    std::int64_t c_lo = 0, c_hi = 5;
    std::int64_t n_max = 500;
    std::int64_t seq_n_max = 10000;
    int witness_cap = 10;
};

enum class ClaimStatus { verified_on_grid, counterexample, not_applicable };
std::string to_string(ClaimStatus s);

struct Witness {
    std::int64_t m = 0, c = 0, n = 0;
    std::string expected, actual;
};
bool operator==(const Witness& a, const Witness& b);

struct ClaimResult {
    std::string id;
    std::string grid_summary;
    ClaimStatus status = ClaimStatus::not_applicable;
    std::vector<Witness> witnesses;   // capped; `failures` holds the true count
    std::int64_t points_checked = 0;
    std::int64_t failures = 0;
    std::string note;
};

struct Claim {
    std::string id;
    std::string description;
    std::string anchor;         // catalogue anchor, e.g. "Lemma 1.1(b)"
    std::string applicability;  // where the statement claims to hold
    std::function<ClaimResult(const GridSpec&)> checker;
    std::function<double(const GridSpec&)> cost;  // rough op-count estimate
};

// The full catalogue, ordered by id. Ids are stable; anchors are unique per
// numbered statement (several claims may share one anchor when a statement
// admits more than one reading).
const std::vector<Claim>& registry();

// Runs one claim. Throws on unknown ids and on grids whose estimated cost
// exceeds the configured bound.
ClaimResult check(const std::string& claim_id, const GridSpec& grid);

// Runs every claim on its applicable sub-grid; results ordered by id.
// Cost overruns are reported as not-applicable rather than thrown.
std::vector<ClaimResult> verify_all(const GridSpec& grid);

}  // namespace jaco
