#include "jaco/infer.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace jaco {

namespace {

struct ArcProfile {
    std::vector<std::int64_t> in_count, in_min, in_max;
    std::vector<std::int64_t> out_count, out_min, out_max;
    std::vector<std::int64_t> observed_reach;  // max arc target, or i itself
    std::vector<std::int64_t> degree;
    std::int64_t total_arcs = 0;
};

ArcProfile profile(const std::vector<Arc>& arcs, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("vertex count must be >= 1");
    const std::int64_t none = std::numeric_limits<std::int64_t>::max();
    ArcProfile p;
    const auto sz = static_cast<std::size_t>(n) + 1;
    p.in_count.assign(sz, 0);
    p.in_min.assign(sz, none);
    p.in_max.assign(sz, 0);
    p.out_count.assign(sz, 0);
    p.out_min.assign(sz, none);
    p.out_max.assign(sz, 0);
    for (const auto& [i, j] : arcs) {
        if (i < 1 || j < 1 || i > n || j > n)
            throw std::invalid_argument("arc endpoint out of range");
        if (i >= j) throw std::invalid_argument("arcs must satisfy i < j");
        ++p.out_count[i];
        p.out_min[i] = std::min(p.out_min[i], j);
        p.out_max[i] = std::max(p.out_max[i], j);
        ++p.in_count[j];
        p.in_min[j] = std::min(p.in_min[j], i);
        p.in_max[j] = std::max(p.in_max[j], i);
    }
    std::vector<Arc> sorted = arcs;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw std::invalid_argument("duplicate arc in input");
    p.total_arcs = static_cast<std::int64_t>(arcs.size());
    p.observed_reach.assign(sz, 0);
    p.degree.assign(sz, 0);
    for (std::int64_t v = 1; v <= n; ++v) {
        p.observed_reach[v] = p.out_count[v] > 0 ? p.out_max[v] : v;
        p.degree[v] = p.in_count[v] + p.out_count[v];
    }
    return p;
}

// Structural conditions every Jaco graph satisfies; returns a diagnostic for
// the first violation, empty string otherwise.
std::string structural_violation(const ArcProfile& p, std::int64_t n) {
    for (std::int64_t j = 1; j <= n; ++j) {
        if (p.in_count[j] > 0 &&
            (p.in_max[j] != j - 1 || p.in_min[j] != j - p.in_count[j]))
            return "in-neighbourhood of v" + std::to_string(j) +
                   " is not a contiguous suffix of lower vertices";
        if (p.out_count[j] > 0 &&
            (p.out_min[j] != j + 1 || p.out_max[j] != j + p.out_count[j]))
            return "out-neighbourhood of v" + std::to_string(j) +
                   " is not a contiguous run above it";
        if (j > 1 && p.observed_reach[j] < p.observed_reach[j - 1])
            return "observed reach decreases at v" + std::to_string(j);
    }
    return "";
}

// With contiguity already established, the arc set is determined by the
// per-vertex out-counts; compare those against a candidate reconstruction.
bool matches(const JacoGraph& g, const ArcProfile& p) {
    for (std::int64_t i = 1; i <= g.n; ++i) {
        const std::int64_t expect = std::max<std::int64_t>(0, std::min(g.reach[i], g.n) - i);
        if (expect != p.out_count[i]) return false;
    }
    return true;
}

InferenceResult not_a_jaco(std::string why) {
    InferenceResult r;
    r.status = InferenceResult::Status::not_a_jaco_graph;
    r.diagnostic = std::move(why);
    return r;
}

}  // namespace

std::string to_string(InferenceResult::Status s) {
    switch (s) {
        case InferenceResult::Status::unique: return "unique";
        case InferenceResult::Status::ambiguous: return "ambiguous";
        case InferenceResult::Status::not_a_jaco_graph: return "not-a-jaco-graph";
    }
    return "?";
}

InferenceResult infer(const std::vector<Arc>& arcs, std::int64_t n) {
    const ArcProfile p = profile(arcs, n);
    if (std::string why = structural_violation(p, n); !why.empty())
        return not_a_jaco(std::move(why));

    // Component boundaries sit after every vertex whose observed reach does
    // not pass it (valid because observed reach is non-decreasing here).
    std::vector<std::pair<std::int64_t, std::int64_t>> comps;
    std::int64_t start = 1;
    for (std::int64_t j = 1; j <= n; ++j)
        if (p.observed_reach[j] <= j || j == n) {
            comps.emplace_back(start, j);
            start = j + 1;
        }

    if (comps.size() >= 2) {
        // Only m = 0 generators produce disconnected graphs: equal cliques
        // K_{c+1} followed by at most one remainder clique.
        const std::int64_t c = comps.front().second - comps.front().first;  // size - 1
        LinearFunction cand{0, c, true};
        const JacoGraph g = construct(cand, n);
        if (!matches(g, p))
            return not_a_jaco("disconnected input does not match the m = 0 class f(x) = " +
                              cand.str());
        InferenceResult r;
        r.status = InferenceResult::Status::unique;
        r.f = cand;
        r.validated = true;
        return r;
    }

    if (p.total_arcs == n * (n - 1) / 2) {
        // K_n: every generator with m + c >= n-1 reproduces it.
        InferenceResult r;
        r.status = InferenceResult::Status::ambiguous;
        r.candidates = f_related(n - 1);
        r.constraint = "m + c >= " + std::to_string(n - 1);
        r.validated = true;
        for (const LinearFunction& f : r.candidates)
            if (!matches(construct(f, n), p)) r.validated = false;
        return r;
    }

    // Prime Jaconian vertex of the presented graph.
    std::int64_t best = -1, prime = 1;
    for (std::int64_t v = 1; v <= n; ++v)
        if (p.degree[v] > best) { best = p.degree[v]; prime = v; }
    if (prime < 2)
        return not_a_jaco("prime Jaconian vertex is v1 but the graph is not complete");

    // v_1 and v_2 are saturated, so d(v_1) = m + c and d(v_2) = 2m + c.
    const std::int64_t m = p.degree[2] - p.degree[1];
    const std::int64_t c = p.degree[1] - m;
    if (m < 1 || c < 0)
        return not_a_jaco("saturated-vertex equations give no admissible function (m = " +
                          std::to_string(m) + ", c = " + std::to_string(c) + ")");
    LinearFunction cand{m, c, false};
    const JacoGraph g = construct(cand, n);
    if (!matches(g, p))
        return not_a_jaco("reconstruction with f(x) = " + cand.str() +
                          " does not match the input");
    InferenceResult r;
    r.status = InferenceResult::Status::unique;
    r.f = cand;
    r.validated = true;
    return r;
}

std::vector<Arc> arcs_of(const JacoGraph& g) {
    std::vector<Arc> out;
    for (std::int64_t i = 1; i <= g.n; ++i) {
        const std::int64_t hi = std::min(g.reach[i], g.n);
        for (std::int64_t j = i + 1; j <= hi; ++j) out.emplace_back(i, j);
    }
    return out;
}

std::vector<LinearFunction> f_related(std::int64_t k) {
    if (k < 0) throw std::invalid_argument("k must be >= 0");
    std::vector<LinearFunction> out;
    out.reserve(static_cast<std::size_t>(k) + 1);
    for (std::int64_t m = 0; m <= k; ++m)
        out.push_back(LinearFunction{m, k - m, m == 0});
    return out;
}

SaturatedPairGap saturated_pair_check(const JacoGraph& g, std::int64_t i,
                                      std::int64_t j) {
    if (i < 1 || j != i + 1 || j > g.n)
        throw std::invalid_argument("requires consecutive in-range vertices i and j = i+1");
    if (degrees(g, i).underlying != g.f(i))
        throw std::invalid_argument("v" + std::to_string(i) + " is not saturated");
    if (degrees(g, j).underlying != g.f(j))
        throw std::invalid_argument("v" + std::to_string(j) + " is not saturated");
    if (g.reach[i] <= i)
        throw std::invalid_argument("v" + std::to_string(i) + " has no outgoing arc");
    SaturatedPairGap out;
    out.i_prime = g.reach[i];  // saturation puts reach within the graph
    out.j_prime = g.reach[j];
    out.gap = out.j_prime - out.i_prime;
    return out;
}

}  // namespace jaco
