#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "jaco/core.hpp"

namespace jaco {

// The minimal-tail recursion comes in two forms:
//   corrected: L(n) = min{ k < n : m*k + c + L(k) >= n }
//   printed:   L(n) = min{ k < n : m*k     + L(k) >= n }
// They agree when c = 0. `a_series` tags the m = 1, c = 0 specialisation
// a(n) = min{ k < n : k + a(k) >= n }, which equals both.
enum class SequenceVariant { corrected, printed, a_series };
std::string to_string(SequenceVariant v);

// values[n] for n in 0..n_max, with values[0] = 0 and values[1] = 1.
struct SequenceTable {
    LinearFunction f;
    SequenceVariant variant = SequenceVariant::corrected;
    std::vector<std::int64_t> values;
};

// Linear-time table build; the qualifying k advances monotonically with n.
// Rejects m = 0 (no k satisfies the condition once n is large).
SequenceTable ell_sequence(const LinearFunction& f, std::int64_t n_max,
                           SequenceVariant variant);
SequenceTable a_sequence(std::int64_t n_max);

// Closed form for the out-degree of v_n in the unbounded graph:
// (m-1)*n + c + L(n) for n >= 2, and f(1) for n = 1.
std::int64_t dplus_closed(const LinearFunction& f, std::int64_t n);
std::int64_t dplus_closed(const LinearFunction& f, std::int64_t n,
                          SequenceVariant variant);

// f_1 = f_2 = 1, f_i = f_{i-1} + f_{i-2}; rejects indices past the
// signed 64-bit range (i > 92).
std::int64_t fib(std::int64_t i);

// value = sum of fib(indices[j]); indices strictly decreasing, each >= 2,
// no two consecutive. Unique for every positive integer.
struct ZeckendorfRep {
    std::int64_t value = 0;
    std::vector<std::int64_t> indices;
};
ZeckendorfRep zeckendorf(std::int64_t n);

// Index-shifted Zeckendorf sum: sum of fib(i - 1) over the representation
// of n. Equals the out-degree of v_n in the unbounded graph of f(x) = x.
std::int64_t bettina_dplus(std::int64_t n);

// n(n+1)/2 - sum_{i=1..n} bettina_dplus(i); the edge count of J_n(x).
std::int64_t edge_count_fib(std::int64_t n);

// true iff a(i + a(i)) == i and a(i + a(i-1)) == i.
bool lemma36_check(std::int64_t i, std::int64_t n_cap);

}  // namespace jaco
