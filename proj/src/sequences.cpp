#include "jaco/sequences.hpp"

#include <limits>
#include <stdexcept>

namespace jaco {

namespace {

constexpr std::int64_t kInt64Max = std::numeric_limits<std::int64_t>::max();
constexpr int kMaxFibIndex = 92;  // f_92 is the largest Fibonacci number in int64

const std::vector<std::int64_t>& fib_table() {
    static const std::vector<std::int64_t> t = [] {
        std::vector<std::int64_t> v(kMaxFibIndex + 1, 0);
        v[1] = 1;
        v[2] = 1;
        for (int i = 3; i <= kMaxFibIndex; ++i) v[i] = v[i - 1] + v[i - 2];
        return v;
    }();
    return t;
}

}  // namespace

std::string to_string(SequenceVariant v) {
    switch (v) {
        case SequenceVariant::corrected: return "corrected";
        case SequenceVariant::printed: return "printed";
        case SequenceVariant::a_series: return "a_series";
    }
    return "?";
}

SequenceTable ell_sequence(const LinearFunction& f, std::int64_t n_max,
                           SequenceVariant variant) {
    if (f.m < 1 || f.c < 0)
        throw std::invalid_argument("minimal-tail sequence requires m >= 1 and c >= 0");
    if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
    if (variant == SequenceVariant::a_series && (f.m != 1 || f.c != 0))
        throw std::invalid_argument("the a-series is the m = 1, c = 0 sequence");
    const __int128 top = static_cast<__int128>(f.m) * n_max + f.c + n_max;
    if (top > kInt64Max)
        throw std::overflow_error("m*n_max + c + n_max exceeds the signed 64-bit range");

    const std::int64_t add = variant == SequenceVariant::printed ? 0 : f.c;
    SequenceTable t;
    t.f = f;
    t.variant = variant;
    t.values.assign(static_cast<std::size_t>(n_max) + 1, 0);
    t.values[1] = 1;
    // span(k) = m*k + add + values[k] is strictly increasing in k, so the
    // least qualifying k only advances as n grows.
    std::int64_t k = 1;
    for (std::int64_t n = 2; n <= n_max; ++n) {
        while (f.m * k + add + t.values[k] < n) ++k;
        t.values[n] = k;
    }
    return t;
}

SequenceTable a_sequence(std::int64_t n_max) {
    SequenceTable t = ell_sequence(LinearFunction{1, 0, false}, n_max,
                                   SequenceVariant::corrected);
    t.variant = SequenceVariant::a_series;
    return t;
}

std::int64_t dplus_closed(const LinearFunction& f, std::int64_t n,
                          SequenceVariant variant) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (n == 1) return f(1);
    const SequenceTable t = ell_sequence(f, n, variant);
    return (f.m - 1) * n + f.c + t.values[n];
}

std::int64_t dplus_closed(const LinearFunction& f, std::int64_t n) {
    return dplus_closed(f, n, SequenceVariant::corrected);
}

std::int64_t fib(std::int64_t i) {
    if (i < 1) throw std::invalid_argument("Fibonacci index must be >= 1");
    if (i > kMaxFibIndex)
        throw std::overflow_error("fib(i) exceeds the signed 64-bit range for i > 92");
    return fib_table()[i];
}

ZeckendorfRep zeckendorf(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("Zeckendorf representation needs n >= 1");
    ZeckendorfRep z;
    z.value = n;
    const auto& t = fib_table();
    int i = kMaxFibIndex;
    std::int64_t rest = n;
    // Greedy: subtracting the largest f_i <= rest leaves rest < f_{i-1},
    // which forces the non-consecutive index gaps. The scan stops at index 2
    // before reaching the duplicate f_1 = 1.
    while (rest > 0) {
        while (t[i] > rest) --i;
        z.indices.push_back(i);
        rest -= t[i];
    }
    return z;
}

std::int64_t bettina_dplus(std::int64_t n) {
    const ZeckendorfRep z = zeckendorf(n);
    std::int64_t sum = 0;
    for (std::int64_t idx : z.indices) sum += fib_table()[idx - 1];
    return sum;
}

std::int64_t edge_count_fib(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    const __int128 total = static_cast<__int128>(n) * (n + 1) / 2;
    if (total > kInt64Max)
        throw std::overflow_error("n(n+1)/2 exceeds the signed 64-bit range");
    std::int64_t sum = 0;  // bounded by total: each term is at most i
    for (std::int64_t i = 1; i <= n; ++i) sum += bettina_dplus(i);
    return static_cast<std::int64_t>(total) - sum;
}

bool lemma36_check(std::int64_t i, std::int64_t n_cap) {
    if (i < 1) throw std::invalid_argument("i must be >= 1");
    if (n_cap < i) throw std::invalid_argument("n_cap must cover i");
    const SequenceTable a = a_sequence(n_cap);
    const std::int64_t ai = a.values[i];
    if (i + ai > n_cap) throw std::invalid_argument("n_cap too small: i + a(i) exceeds it");
    const std::int64_t a_prev = a.values[i - 1];  // a(0) = 0
    return a.values[i + ai] == i && a.values[i + a_prev] == i;
}

}  // namespace jaco
