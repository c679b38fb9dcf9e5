#include "jaco/invariants.hpp"

#include <algorithm>
#include <stdexcept>

namespace jaco {

namespace {

// Walks the prefixes J_1..J_n of a constructed graph, maintaining the
// underlying degree of every vertex of the current prefix. Appending
// vertex k bumps each tail in {k - in_degree[k] .. k-1} by one.
class PrefixDegrees {
 public:
    explicit PrefixDegrees(const JacoGraph& g)
        : g_(g), deg_(static_cast<std::size_t>(g.n) + 1, 0) {}

    void step(std::int64_t k) {
        deg_[k] = g_.in_degree[k];
        for (std::int64_t i = k - g_.in_degree[k]; i < k; ++i) ++deg_[i];
    }

    const std::vector<std::int64_t>& deg() const { return deg_; }

 private:
    const JacoGraph& g_;
    std::vector<std::int64_t> deg_;
};

}  // namespace

JaconianReport analyze(const JacoGraph& g) {
    JaconianReport r;
    r.delta = -1;
    for (std::int64_t i = 1; i <= g.n; ++i) {
        const VertexDegrees d = degrees(g, i);
        r.edge_count += d.in;
        if (d.underlying > r.delta) {
            r.delta = d.underlying;
            r.jaconian_set.assign(1, i);
        } else if (d.underlying == r.delta) {
            r.jaconian_set.push_back(i);
        }
    }
    r.prime_jaconian = r.jaconian_set.front();
    const std::int64_t p = r.prime_jaconian;
    if (p >= g.n) {
        r.hope_first = 1;
        r.hope_last = 0;
        r.hope_is_complete = true;
    } else {
        r.hope_first = p + 1;
        r.hope_last = g.n;
        // reach is non-decreasing, so the induced subgraph on {p+1..n} is
        // complete iff its lowest vertex already covers v_n.
        r.hope_is_complete = (g.n - p < 2) || g.reach[p + 1] >= g.n;
    }
    return r;
}

std::int64_t edge_count(const JacoGraph& g) {
    std::int64_t total = 0;
    for (std::int64_t i = 1; i <= g.n; ++i) total += g.in_degree[i];
    return total;
}

EdgeCountSeries edge_count_recursive(const LinearFunction& f, std::int64_t n_max) {
    if (f.c != 0) throw std::invalid_argument("edge-count recursion requires c = 0");
    if (f.m < 1) throw std::invalid_argument("edge-count recursion requires m >= 1");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const JacoGraph g = construct(f, n_max);
    EdgeCountSeries s;
    s.direct.assign(static_cast<std::size_t>(n_max) + 1, 0);
    s.recursive.assign(static_cast<std::size_t>(n_max) + 1, 0);
    for (std::int64_t k = 1; k <= n_max; ++k)
        s.direct[k] = s.direct[k - 1] + g.in_degree[k];

    PrefixDegrees pd(g);
    for (std::int64_t k = 1; k <= n_max; ++k) {
        pd.step(k);
        if (k == n_max) break;
        std::int64_t best = -1, p = 1;
        for (std::int64_t i = 1; i <= k; ++i)
            if (pd.deg()[i] > best) { best = pd.deg()[i]; p = i; }
        const bool saturated = best == f.m * p;  // d(v_p) = f(p), c = 0
        s.recursive[k + 1] = s.recursive[k] - p + (saturated ? k : k + 1);
    }
    return s;
}

std::vector<std::pair<std::int64_t, std::int64_t>> components(const JacoGraph& g) {
    std::vector<std::pair<std::int64_t, std::int64_t>> out;
    std::int64_t start = 1;
    for (std::int64_t j = 1; j <= g.n; ++j) {
        // No arc spans the j -> j+1 boundary iff reach[j] <= j (reach is
        // non-decreasing, so vertex j carries the running maximum).
        if (g.reach[j] <= j || j == g.n) {
            out.emplace_back(start, j);
            start = j + 1;
        }
    }
    return out;
}

std::vector<std::int64_t> delta_series(const LinearFunction& f, std::int64_t n_max) {
    if (f.m < 1) throw std::invalid_argument("delta series requires m >= 1");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    const JacoGraph g = construct(f, n_max);
    PrefixDegrees pd(g);
    std::vector<std::int64_t> out(static_cast<std::size_t>(n_max) + 1, 0);
    std::int64_t best = 0;
    for (std::int64_t k = 1; k <= n_max; ++k) {
        pd.step(k);
        // Degrees never decrease as the prefix grows, so only the entries
        // touched by this step can raise the maximum.
        best = std::max(best, pd.deg()[k]);
        for (std::int64_t i = k - g.in_degree[k]; i < k; ++i)
            best = std::max(best, pd.deg()[i]);
        out[k] = best;
    }
    return out;
}

std::optional<std::pair<std::int64_t, std::int64_t>> smallest_unique_jaconian(
    const LinearFunction& f, std::int64_t n_cap) {
    if (f.m < 1) throw std::invalid_argument("search requires m >= 1");
    if (n_cap < 1) return std::nullopt;
    const std::int64_t v = f.m + f.c + 1;
    const std::int64_t target = f(v);
    const JacoGraph g = construct(f, n_cap);
    PrefixDegrees pd(g);
    for (std::int64_t k = 1; k <= n_cap; ++k) {
        pd.step(k);
        if (v > k) continue;
        std::int64_t delta = -1, count = 0, first = 0;
        for (std::int64_t i = 1; i <= k; ++i) {
            const std::int64_t d = pd.deg()[i];
            if (d > delta) { delta = d; count = 1; first = i; }
            else if (d == delta) ++count;
        }
        if (delta == target && count == 1 && first == v)
            return std::make_pair(k, v);
    }
    return std::nullopt;
}

}  // namespace jaco
