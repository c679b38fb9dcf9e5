#include "jaco/core.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace jaco {

std::string LinearFunction::str() const {
    return std::to_string(m) + "x+" + std::to_string(c);
}

bool operator==(const LinearFunction& a, const LinearFunction& b) {
    return a.m == b.m && a.c == b.c && a.relaxed == b.relaxed;
}

bool operator==(const JacoGraph& a, const JacoGraph& b) {
    return a.n == b.n && a.f == b.f && a.in_degree == b.in_degree && a.reach == b.reach;
}

namespace {

void validate(const LinearFunction& f, std::int64_t n) {
    if (f.m < 0 || f.c < 0)
        throw std::invalid_argument("linear function needs m >= 0 and c >= 0");
    if (f.m == 0 && !f.relaxed)
        throw std::invalid_argument("m = 0 requires the relaxed flag");
    if (n < 1) throw std::invalid_argument("vertex count must be a positive integer");
    const __int128 top = static_cast<__int128>(f.m) * n + f.c + n;
    if (top > std::numeric_limits<std::int64_t>::max())
        throw std::overflow_error("f(n) + n exceeds the signed 64-bit range");
}

// Appends vertices until the 1-based arrays hold 1..n. The in-neighbourhood
// of v_j is the suffix {tail .. j-1} of vertices whose reach covers j, and
// tail only ever advances: in-degree rises by at most 1 per vertex, so
// reach[j] - reach[j-1] >= m >= 0. Both facts are re-checked as we go.
void grow(const LinearFunction& f, std::int64_t n,
          std::vector<std::int64_t>& in_degree, std::vector<std::int64_t>& reach) {
    const auto built = static_cast<std::int64_t>(in_degree.size()) - 1;
    in_degree.reserve(static_cast<std::size_t>(n) + 1);
    reach.reserve(static_cast<std::size_t>(n) + 1);
    std::int64_t tail = built > 0 ? built - in_degree[built] : 1;
    for (std::int64_t j = built + 1; j <= n; ++j) {
        while (tail < j && reach[tail] < j) ++tail;
        const std::int64_t d_in = j - tail;
        const std::int64_t r = f(j) + j - d_in;
        if (r < j || (j > 1 && r < reach[j - 1]))
            throw std::logic_error("reach monotonicity violated during construction");
        in_degree.push_back(d_in);
        reach.push_back(r);
    }
}

}  // namespace

JacoGraph construct(const LinearFunction& f, std::int64_t n) {
    validate(f, n);
    JacoGraph g;
    g.n = n;
    g.f = f;
    g.in_degree.assign(1, 0);
    g.reach.assign(1, 0);
    grow(f, n, g.in_degree, g.reach);
    return g;
}

JacoGraph construct_naive(const LinearFunction& f, std::int64_t n) {
    validate(f, n);
    JacoGraph g;
    g.n = n;
    g.f = f;
    g.in_degree.assign(static_cast<std::size_t>(n) + 1, 0);
    g.reach.assign(static_cast<std::size_t>(n) + 1, 0);
    // d^-(v_i) is final before any test that reads it: every in-arc of v_i
    // comes from a lower index, and j runs in ascending order.
    for (std::int64_t j = 2; j <= n; ++j)
        for (std::int64_t i = 1; i < j; ++i)
            if (f(i) + i - g.in_degree[i] >= j) ++g.in_degree[j];
    for (std::int64_t i = 1; i <= n; ++i) g.reach[i] = f(i) + i - g.in_degree[i];
    return g;
}

bool has_arc(const JacoGraph& g, std::int64_t i, std::int64_t j) {
    if (i < 1 || i > g.n || j < 1 || j > g.n)
        throw std::out_of_range("vertex index out of range");
    return i < j && g.reach[i] >= j;
}

VertexDegrees degrees(const JacoGraph& g, std::int64_t i) {
    if (i < 1 || i > g.n) throw std::out_of_range("vertex index out of range");
    VertexDegrees d;
    d.in = g.in_degree[i];
    d.out = std::max<std::int64_t>(0, std::min(g.reach[i], g.n) - i);
    d.underlying = d.in + d.out;
    return d;
}

JacoGraph extend(const JacoGraph& g, std::int64_t n_new) {
    if (g.n < 1 || static_cast<std::int64_t>(g.in_degree.size()) != g.n + 1 ||
        static_cast<std::int64_t>(g.reach.size()) != g.n + 1)
        throw std::invalid_argument("extend requires a constructed graph");
    if (n_new < g.n) throw std::invalid_argument("extend cannot shrink a graph");
    validate(g.f, n_new);
    JacoGraph out = g;
    out.n = n_new;
    grow(g.f, n_new, out.in_degree, out.reach);
    return out;
}

}  // namespace jaco
