#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace jaco {

// Generator f(x) = m*x + c. m >= 1 unless `relaxed` permits m == 0.
struct LinearFunction {
    std::int64_t m = 1;
    std::int64_t c = 0;
    bool relaxed = false;

    std::int64_t operator()(std::int64_t i) const { return m * i + c; }
    bool valid() const { return c >= 0 && m >= (relaxed ? 0 : 1); }
    std::string str() const;
};

bool operator==(const LinearFunction& a, const LinearFunction& b);

// J_n(f(x)) in compact form. Arcs are never stored: (v_i, v_j) is an arc
// iff 1 <= i < j <= n and reach[i] >= j, where
//   reach[i] = f(i) + i - in_degree[i]
// is the highest index v_i ever feeds. Both values are independent of n
// (appending vertices never adds in-arcs to existing ones), so reach may
// point past n; the finite out-degree is min(reach[i], n) - i.
// Arrays are 1-based; slot 0 is unused.
struct JacoGraph {
    std::int64_t n = 0;
    LinearFunction f;
    std::vector<std::int64_t> in_degree;
    std::vector<std::int64_t> reach;
};

bool operator==(const JacoGraph& a, const JacoGraph& b);

struct VertexDegrees {
    std::int64_t in = 0;
    std::int64_t out = 0;
    std::int64_t underlying = 0;
};

// Single ascending pass with an advancing tail pointer; O(n) time and memory.
JacoGraph construct(const LinearFunction& f, std::int64_t n);

// Literal arc-rule oracle: tests every pair against the defining inequality,
// assuming nothing about monotone structure. Quadratic; meant for cross-checks.
JacoGraph construct_naive(const LinearFunction& f, std::int64_t n);

bool has_arc(const JacoGraph& g, std::int64_t i, std::int64_t j);
VertexDegrees degrees(const JacoGraph& g, std::int64_t i);

// construct(g.f, n_new), reusing the already-built prefix unchanged.
JacoGraph extend(const JacoGraph& g, std::int64_t n_new);

}  // namespace jaco
