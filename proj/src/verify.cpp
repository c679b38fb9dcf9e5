#include "jaco/verify.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "jaco/infer.hpp"
#include "jaco/invariants.hpp"
#include "jaco/sequences.hpp"

namespace jaco {

std::string to_string(ClaimStatus s) {
    switch (s) {
        case ClaimStatus::verified_on_grid: return "verified-on-grid";
        case ClaimStatus::counterexample: return "counterexample";
        case ClaimStatus::not_applicable: return "not-applicable";
    }
    return "?";
}

bool operator==(const Witness& a, const Witness& b) {
    return a.m == b.m && a.c == b.c && a.n == b.n && a.expected == b.expected &&
           a.actual == b.actual;
}

namespace {

constexpr double kCostBound = 4e9;

std::string istr(std::int64_t v) { return std::to_string(v); }

std::string set_str(const std::vector<std::int64_t>& xs) {
    std::string out = "{";
    const std::size_t shown = std::min<std::size_t>(xs.size(), 8);
    for (std::size_t i = 0; i < shown; ++i) {
        if (i) out += ",";
        out += istr(xs[i]);
    }
    if (xs.size() > shown) out += ",...";
    return out + "}";
}

struct Builder {
    ClaimResult r;
    int cap;

    Builder(std::string id, std::string grid, int witness_cap) : cap(witness_cap) {
        r.id = std::move(id);
        r.grid_summary = std::move(grid);
    }
    void point() { ++r.points_checked; }
    void fail(std::int64_t m, std::int64_t c, std::int64_t n, std::string exp,
              std::string act) {
        ++r.failures;
        if (static_cast<int>(r.witnesses.size()) < cap)
            r.witnesses.push_back(Witness{m, c, n, std::move(exp), std::move(act)});
    }
    void expect(bool ok, std::int64_t m, std::int64_t c, std::int64_t n,
                const std::string& exp, const std::string& act) {
        point();
        if (!ok) fail(m, c, n, exp, act);
    }
    ClaimResult done() {
        if (r.points_checked == 0) {
            r.status = ClaimStatus::not_applicable;
            if (r.note.empty()) r.note = "no applicable grid points";
        } else if (r.failures == 0) {
            r.status = ClaimStatus::verified_on_grid;
        } else {
            r.status = ClaimStatus::counterexample;
            if (r.failures > static_cast<std::int64_t>(r.witnesses.size()))
                r.note = istr(r.failures) + " failing points; first " +
                         istr(static_cast<std::int64_t>(r.witnesses.size())) + " recorded";
        }
        return r;
    }
};

// Generators with m >= 1 inside the grid.
std::vector<LinearFunction> fns_m1(const GridSpec& g) {
    std::vector<LinearFunction> out;
    for (std::int64_t m = std::max<std::int64_t>(1, g.m_lo); m <= g.m_hi; ++m)
        for (std::int64_t c = std::max<std::int64_t>(0, g.c_lo); c <= g.c_hi; ++c)
            out.push_back(LinearFunction{m, c, false});
    return out;
}

// Relaxed m = 0 generators over the grid's c range.
std::vector<LinearFunction> fns_m0(const GridSpec& g) {
    std::vector<LinearFunction> out;
    for (std::int64_t c = std::max<std::int64_t>(0, g.c_lo); c <= g.c_hi; ++c)
        out.push_back(LinearFunction{0, c, true});
    return out;
}

double pairs_m1(const GridSpec& g) {
    const double ms = std::max<std::int64_t>(0, g.m_hi - std::max<std::int64_t>(1, g.m_lo) + 1);
    const double cs = std::max<std::int64_t>(0, g.c_hi - std::max<std::int64_t>(0, g.c_lo) + 1);
    return ms * cs;
}

double cs_count(const GridSpec& g) {
    return std::max<std::int64_t>(0, g.c_hi - std::max<std::int64_t>(0, g.c_lo) + 1);
}

std::string grid_m1(const GridSpec& g, std::int64_t n_cap) {
    return "m=" + istr(std::max<std::int64_t>(1, g.m_lo)) + ".." + istr(g.m_hi) +
           ", c=" + istr(std::max<std::int64_t>(0, g.c_lo)) + ".." + istr(g.c_hi) +
           ", n<=" + istr(n_cap);
}

std::string grid_seq(std::int64_t n_cap) { return "f(x)=x, n<=" + istr(n_cap); }

std::int64_t graph_cap(const GridSpec& g, std::int64_t hard) {
    return std::min(g.n_max, hard);
}

// ---------------------------------------------------------------------------
// Ground-truth gate: the fast construction is used by every checker below
// only once it has been shown equal to the literal oracle on the default
// equivalence grid (m 0..5 relaxed at 0, c 0..5, n 1..500).

ClaimResult run_construction_equivalence(const GridSpec& grid) {
    Builder b("def-2.1-construction",
              "m=0.." + istr(grid.m_hi) + " (0 relaxed), c=" +
                  istr(std::max<std::int64_t>(0, grid.c_lo)) + ".." + istr(grid.c_hi) +
                  ", n<=" + istr(grid.n_max),
              grid.witness_cap);
    std::vector<LinearFunction> fs = fns_m0(grid);
    for (const LinearFunction& f : fns_m1(grid)) fs.push_back(f);
    for (const LinearFunction& f : fs) {
        for (std::int64_t n = 1; n <= grid.n_max; ++n) {
            const JacoGraph fast = construct(f, n);
            const JacoGraph slow = construct_naive(f, n);
            b.point();
            if (!(fast == slow)) {
                std::int64_t k = 1;
                while (k <= n && fast.in_degree[k] == slow.in_degree[k]) ++k;
                b.fail(f.m, f.c, n, "in_degree[" + istr(k) + "]=" + istr(slow.in_degree[k]),
                       istr(fast.in_degree[k]));
            }
        }
    }
    return b.done();
}

bool gate_ok() {
    static const bool ok =
        run_construction_equivalence(GridSpec{}).status == ClaimStatus::verified_on_grid;
    return ok;
}

bool gated(Builder& b) {
    if (!gate_ok()) {
        b.r.note = "construction equivalence gate failed";
        return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Checkers. Every quantity on the "actual" side comes from constructed
// graphs (post-gate); the "expected" side is the claim's formula.

ClaimResult chk_cor_1_2(const GridSpec& g) {
    const std::int64_t cap = g.seq_n_max;
    Builder b("cor-1.2", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        const JacoGraph gr = construct(f, cap);
        std::int64_t prev = 1;  // least tail of v_1, by convention
        for (std::int64_t n = 2; n <= cap; ++n) {
            const std::int64_t tail = n - gr.in_degree[n];
            const std::int64_t step = tail - prev;
            b.expect(step == 0 || step == 1, f.m, f.c, n,
                     "tail step in {0,1}", "step=" + istr(step));
            prev = tail;
        }
    }
    return b.done();
}

ClaimResult chk_cor_3_3(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("cor-3.3", "c=0, m=" + istr(std::max<std::int64_t>(1, g.m_lo)) + ".." +
                             istr(g.m_hi) + ", n<=" + istr(cap),
              g.witness_cap);
    if (!gated(b)) return b.done();
    if (g.c_lo > 0) { b.r.note = "claim applies to c = 0 only, outside grid"; return b.done(); }
    for (std::int64_t m = std::max<std::int64_t>(1, g.m_lo); m <= g.m_hi; ++m) {
        const EdgeCountSeries s = edge_count_recursive(LinearFunction{m, 0, false}, cap);
        for (std::int64_t n = 1; n <= cap; ++n)
            b.expect(s.recursive[n] == s.direct[n], m, 0, n, istr(s.recursive[n]),
                     istr(s.direct[n]));
    }
    return b.done();
}

ClaimResult chk_cor_3_5(const GridSpec& g) {
    const std::int64_t cap = g.seq_n_max;
    Builder b("cor-3.5", grid_seq(cap), g.witness_cap);
    if (!gated(b)) return b.done();
    const JacoGraph gr = construct(LinearFunction{1, 0, false}, cap + 1);
    for (std::int64_t n = 1; n <= cap; ++n) {
        const std::int64_t d0 = gr.reach[n] - n;
        const std::int64_t d1 = gr.reach[n + 1] - (n + 1);
        b.expect(d1 == d0 || d1 == d0 + 1, 1, 0, n, "a(n+1) in {a(n), a(n)+1}",
                 "a(n)=" + istr(d0) + ", a(n+1)=" + istr(d1));
    }
    return b.done();
}

ClaimResult chk_def_1_2(const GridSpec& g) {
    const std::int64_t cap = g.seq_n_max;
    Builder b("def-1.2-minimal-tail", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        const SequenceTable t = ell_sequence(f, cap, SequenceVariant::corrected);
        const JacoGraph gr = construct(f, cap);
        for (std::int64_t n = 1; n <= cap; ++n)
            b.expect(t.values[n] == n - gr.in_degree[n], f.m, f.c, n,
                     "L(n)=" + istr(t.values[n]), istr(n - gr.in_degree[n]));
    }
    return b.done();
}

ClaimResult chk_hope_complete(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("def-2.4-hope-complete", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        JacoGraph gr = construct(f, 1);
        for (std::int64_t n = 1; n <= cap; ++n) {
            gr = extend(gr, n);
            const JaconianReport rep = analyze(gr);
            b.expect(rep.hope_is_complete, f.m, f.c, n, "complete",
                     "incomplete above v" + istr(rep.prime_jaconian));
        }
    }
    return b.done();
}

ClaimResult chk_delta_increase(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("delta-increase-m",
              grid_m1(g, cap) + " plus m=0 relaxed", g.witness_cap);
    if (!gated(b)) return b.done();
    std::vector<LinearFunction> fs = fns_m1(g);
    for (const LinearFunction& f : fns_m0(g)) fs.push_back(f);
    for (const LinearFunction& f : fs) {
        std::int64_t prev = 0;
        for (std::int64_t n = 1; n <= cap; ++n) {
            const std::int64_t delta = analyze(construct(f, n)).delta;
            if (n > 1 && delta != prev)
                b.expect(delta - prev == f.m, f.m, f.c, n,
                         "increase of " + istr(f.m), "increase of " + istr(delta - prev));
            prev = delta;
        }
    }
    return b.done();
}

ClaimResult chk_illustration_1(const GridSpec& g) {
    Builder b("illustration-1", "single point (m,c,n)=(2,1,11)", g.witness_cap);
    if (!gated(b)) return b.done();
    const JaconianReport r = analyze(construct(LinearFunction{2, 1, false}, 11));
    b.expect(r.delta == 9, 2, 1, 11, "Delta=9", "Delta=" + istr(r.delta));
    b.expect(r.jaconian_set == std::vector<std::int64_t>{4, 5, 6}, 2, 1, 11,
             "J={4,5,6}", "J=" + set_str(r.jaconian_set));
    b.expect(r.prime_jaconian == 4, 2, 1, 11, "prime=v4",
             "prime=v" + istr(r.prime_jaconian));
    return b.done();
}

ClaimResult chk_illustration_2(const GridSpec& g) {
    Builder b("illustration-2", "single point (m,c,n)=(1,0,15)", g.witness_cap);
    if (!gated(b)) return b.done();
    const JacoGraph g15 = construct(LinearFunction{1, 0, false}, 15);
    b.expect(edge_count(g15) == 44, 1, 0, 15, "eps=44", "eps=" + istr(edge_count(g15)));
    const JacoGraph g30 = construct(LinearFunction{1, 0, false}, 30);
    std::int64_t sum = 0;
    for (std::int64_t i = 2; i <= 15; ++i) sum += std::min(g30.reach[i], g30.n) - i;
    b.expect(sum == 75, 1, 0, 15, "sum d+=75", "sum d+=" + istr(sum));
    std::int64_t fib_sum = 0;
    for (std::int64_t i = 2; i <= 15; ++i) fib_sum += bettina_dplus(i);
    b.expect(fib_sum == sum, 1, 0, 15, "Fibonacci route sum=" + istr(sum),
             istr(fib_sum));
    b.expect(edge_count_fib(15) == edge_count(g15), 1, 0, 15,
             "Fibonacci route eps=" + istr(edge_count(g15)), istr(edge_count_fib(15)));
    return b.done();
}

ClaimResult chk_illustration_3(const GridSpec& g) {
    Builder b("illustration-3", "single point (m,c,n)=(0,3,15) relaxed", g.witness_cap);
    if (!gated(b)) return b.done();
    const JacoGraph gr = construct(LinearFunction{0, 3, true}, 15);
    const auto comps = components(gr);
    const std::vector<std::pair<std::int64_t, std::int64_t>> want{
        {1, 4}, {5, 8}, {9, 12}, {13, 15}};
    b.expect(comps == want, 0, 3, 15, "blocks 4,4,4,3", "blocks differ");
    bool complete = true;
    for (const auto& [lo, hi] : comps)
        for (std::int64_t i = lo; i <= hi; ++i)
            for (std::int64_t j = i + 1; j <= hi; ++j)
                complete = complete && has_arc(gr, i, j);
    b.expect(complete, 0, 3, 15, "every block complete", "missing arc");
    return b.done();
}

ClaimResult chk_lemma_1_1a(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("lemma-1.1a", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        const JacoGraph gr = construct(f, f(cap) + cap);
        for (std::int64_t n = 1; n <= cap; ++n) {
            const std::int64_t dplus = std::min(gr.reach[n], gr.n) - n;
            b.expect(dplus + gr.in_degree[n] == f(n), f.m, f.c, n,
                     "f(n)=" + istr(f(n)), "d+ + d- = " + istr(dplus + gr.in_degree[n]));
        }
    }
    return b.done();
}

ClaimResult chk_lemma_1_1b(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("lemma-1.1b", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        const JacoGraph gr = construct(f, cap + 1);
        for (std::int64_t n = 1; n <= cap; ++n) {
            const std::int64_t step = gr.in_degree[n + 1] - gr.in_degree[n];
            b.expect(step == 0 || step == 1, f.m, f.c, n, "in-degree step in {0,1}",
                     "step=" + istr(step));
        }
    }
    return b.done();
}

ClaimResult chk_lemma_1_1c(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("lemma-1.1c", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        const JacoGraph gr = construct(f, cap);
        for (std::int64_t k = 2; k <= cap; ++k) {
            bool seen = false, contiguous = true;
            for (std::int64_t i = 1; i < k; ++i) {
                const bool arc = gr.reach[i] >= k;
                if (seen && !arc) contiguous = false;
                seen = seen || arc;
            }
            b.expect(contiguous, f.m, f.c, k, "tails of v" + istr(k) + " contiguous",
                     "gap in tail range");
        }
    }
    return b.done();
}

ClaimResult chk_lemma_1_1d(const GridSpec& g, SequenceVariant variant) {
    const std::int64_t cap = g.n_max;
    const std::string id = variant == SequenceVariant::printed
                               ? "lemma-1.1d-printed"
                               : "lemma-1.1d-corrected";
    Builder b(id, grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        const SequenceTable t = ell_sequence(f, cap, variant);
        const JacoGraph gr = construct(f, f(cap) + cap);
        for (std::int64_t n = 2; n <= cap; ++n) {
            const std::int64_t expected = (f.m - 1) * n + f.c + t.values[n];
            const std::int64_t actual = std::min(gr.reach[n], gr.n) - n;
            b.expect(expected == actual, f.m, f.c, n, istr(expected), istr(actual));
        }
    }
    return b.done();
}

ClaimResult chk_lemma_2_1(const GridSpec& g) {
    Builder b("lemma-2.1", grid_m1(g, g.n_max), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        for (std::int64_t i = 1; i <= std::min(f(1) + 1, g.n_max); ++i) {
            const JacoGraph gr = construct(f, i);
            bool complete = true;
            for (std::int64_t u = 1; u <= i && complete; ++u)
                for (std::int64_t v = u + 1; v <= i; ++v)
                    complete = complete && has_arc(gr, u, v);
            const JaconianReport rep = analyze(gr);
            std::vector<std::int64_t> all(static_cast<std::size_t>(i));
            for (std::int64_t v = 1; v <= i; ++v) all[v - 1] = v;
            b.expect(complete && rep.delta == i - 1 && rep.jaconian_set == all, f.m,
                     f.c, i, "K_" + istr(i) + " with Delta=" + istr(i - 1),
                     "Delta=" + istr(rep.delta) + ", J=" + set_str(rep.jaconian_set));
        }
    }
    return b.done();
}

ClaimResult chk_lemma_2_3(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("lemma-2.3", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        for (std::int64_t n = 2; n <= cap; ++n) {
            const JacoGraph gr = construct(f, n);
            if (gr.in_degree[n] == 0) continue;
            const std::int64_t tail = n - gr.in_degree[n];
            if (degrees(gr, tail).underlying != f(tail)) continue;
            const JaconianReport rep = analyze(gr);
            b.expect(rep.prime_jaconian == tail, f.m, f.c, n, "prime=v" + istr(tail),
                     "prime=v" + istr(rep.prime_jaconian));
        }
    }
    return b.done();
}

ClaimResult chk_lemma_2_4(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("lemma-2.4", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        JacoGraph gr = construct(f, 1);
        for (std::int64_t n = 2; n <= cap; ++n) {
            gr = extend(gr, n);
            bool ok = true;
            std::int64_t bad = 0;
            for (std::int64_t i = 2; i <= n; ++i) {
                const std::int64_t diff =
                    degrees(gr, i).underlying - degrees(gr, i - 1).underlying;
                if (diff > f.m || diff < -f.m) { ok = false; bad = i; break; }
            }
            b.expect(ok, f.m, f.c, n, "|degree step| <= " + istr(f.m),
                     ok ? "" : "violated at v" + istr(bad));
        }
    }
    return b.done();
}

ClaimResult chk_lemma_3_4(const GridSpec& g) {
    const std::int64_t cap = g.seq_n_max;
    Builder b("lemma-3.4", grid_seq(cap), g.witness_cap);
    if (!gated(b)) return b.done();
    const SequenceTable a = a_sequence(cap);
    const JacoGraph gr = construct(LinearFunction{1, 0, false}, 2 * cap + 2);
    for (std::int64_t n = 2; n <= cap; ++n) {
        const std::int64_t actual = std::min(gr.reach[n], gr.n) - n;
        b.expect(a.values[n] == actual, 1, 0, n, "a(n)=" + istr(a.values[n]),
                 "d+=" + istr(actual));
    }
    return b.done();
}

ClaimResult chk_lemma_3_6(const GridSpec& g) {
    const std::int64_t cap = g.seq_n_max;
    Builder b("lemma-3.6", grid_seq(cap), g.witness_cap);
    if (!gated(b)) return b.done();
    const JacoGraph gr = construct(LinearFunction{1, 0, false}, 2 * cap + 2);
    const auto dplus = [&](std::int64_t v) { return std::min(gr.reach[v], gr.n) - v; };
    for (std::int64_t i = 1; i <= cap; ++i) {
        const std::int64_t di = dplus(i);
        if (i + di > cap) break;
        const std::int64_t prev = i == 1 ? 0 : dplus(i - 1);
        const std::int64_t first = dplus(i + di);
        const std::int64_t second = dplus(i + prev);
        b.expect(first == i && second == i, 1, 0, i,
                 "d+(v_{i+d+(v_i)})=i and d+(v_{i+d+(v_{i-1})})=i",
                 istr(first) + " and " + istr(second));
    }
    return b.done();
}

ClaimResult chk_prop_1_3(const GridSpec& g, bool two_function_reading) {
    const std::int64_t k_cap = std::min<std::int64_t>(200, g.n_max);
    const std::string id = two_function_reading ? "prop-1.3-twofunc" : "prop-1.3-offset";
    Builder b(id, grid_m1(g, k_cap) + " (k range)", g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        const JacoGraph gr = construct(f, f(k_cap) + k_cap);
        const auto tail = [&](std::int64_t v) { return v - gr.in_degree[v]; };
        for (std::int64_t k = 1; k <= k_cap; ++k) {
            const std::int64_t base = f.m * k + tail(k);
            const std::int64_t t_lo = two_function_reading ? k : 0;
            for (std::int64_t t = t_lo; t < f(k); ++t) {
                const std::int64_t target = base - t;
                if (target < 1) continue;
                b.expect(tail(target) == k, f.m, f.c, target,
                         "L(" + istr(target) + ")=" + istr(k) + " (k=" + istr(k) +
                             ", t=" + istr(t) + ")",
                         "L=" + istr(tail(target)));
            }
        }
    }
    return b.done();
}

ClaimResult chk_prop_2_2(const GridSpec& g) {
    Builder b("prop-2.2", grid_m1(g, g.n_max) + " (n = f(i), 1<=i<=f(1))", g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        for (std::int64_t i = 1; i <= f(1); ++i) {
            if (f(i) > std::max<std::int64_t>(g.n_max, 100)) break;
            const JaconianReport rep = analyze(construct(f, f(i)));
            std::vector<std::int64_t> want;
            for (std::int64_t v = i; v <= f(1) + 1; ++v) want.push_back(v);
            b.expect(rep.prime_jaconian == i && rep.jaconian_set == want, f.m, f.c,
                     f(i),
                     "prime=v" + istr(i) + ", J=v" + istr(i) + "..v" + istr(f(1) + 1),
                     "prime=v" + istr(rep.prime_jaconian) + ", J=" +
                         set_str(rep.jaconian_set));
        }
    }
    return b.done();
}

ClaimResult chk_prop_2_5(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("prop-2.5", grid_m1(g, cap) + " (n = f(i), i >= f(1)+1)", g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        for (std::int64_t i = f(1) + 1; f(i) <= cap; ++i) {
            const JaconianReport rep = analyze(construct(f, f(i)));
            b.expect(rep.prime_jaconian <= i, f.m, f.c, f(i), "prime index <= " + istr(i),
                     "prime=v" + istr(rep.prime_jaconian));
        }
    }
    return b.done();
}

ClaimResult chk_prop_3_1(const GridSpec& g) {
    Builder b("prop-3.1", "c=0, m=" + istr(std::max<std::int64_t>(1, g.m_lo)) + ".." +
                              istr(g.m_hi) + ", l<=m+1",
              g.witness_cap);
    if (!gated(b)) return b.done();
    if (g.c_lo > 0) { b.r.note = "claim applies to c = 0 only, outside grid"; return b.done(); }
    for (std::int64_t m = std::max<std::int64_t>(1, g.m_lo); m <= g.m_hi; ++m) {
        for (std::int64_t l = 1; l <= std::min(m + 1, g.n_max); ++l) {
            const std::int64_t eps = edge_count(construct(LinearFunction{m, 0, false}, l));
            b.expect(eps == l * (l - 1) / 2, m, 0, l, istr(l * (l - 1) / 2), istr(eps));
        }
    }
    return b.done();
}

ClaimResult chk_prop_3_9(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("prop-3.9", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        const JacoGraph gr = construct(f, cap);
        for (std::int64_t i = 1; i + 1 <= cap; ++i) {
            if (degrees(gr, i).underlying != f(i)) continue;
            if (degrees(gr, i + 1).underlying != f(i + 1)) continue;
            const SaturatedPairGap sp = saturated_pair_check(gr, i, i + 1);
            b.expect(sp.gap == f.m || sp.gap == f.m + 1, f.m, f.c, i,
                     "gap in {" + istr(f.m) + "," + istr(f.m + 1) + "}",
                     "gap=" + istr(sp.gap));
        }
    }
    return b.done();
}

ClaimResult chk_property_1(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("property-1", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        JacoGraph gr = construct(f, 1);
        for (std::int64_t n = 1; n <= cap; ++n) {
            gr = extend(gr, n);
            const JaconianReport rep = analyze(gr);
            const std::int64_t p = rep.prime_jaconian;
            if (degrees(gr, p).underlying != f(p)) continue;
            bool ok = true;
            std::int64_t bad = 0;
            for (std::int64_t q = 1; q <= p; ++q)
                if (degrees(gr, q).underlying != f(q)) { ok = false; bad = q; break; }
            b.expect(ok, f.m, f.c, n, "v1..v" + istr(p) + " all saturated",
                     ok ? "" : "v" + istr(bad) + " unsaturated");
        }
    }
    return b.done();
}

ClaimResult chk_property_2(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("property-2", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        const std::vector<std::int64_t> d = delta_series(f, cap);
        for (std::int64_t n = 2; n <= cap; ++n)
            b.expect(d[n] >= d[n - 1], f.m, f.c, n,
                     "Delta(J_" + istr(n) + ") >= Delta(J_" + istr(n - 1) + ")",
                     istr(d[n]) + " < " + istr(d[n - 1]));
    }
    return b.done();
}

ClaimResult chk_property_3(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("property-3", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        JacoGraph gr = construct(f, 1);
        for (std::int64_t n = 1; n <= cap; ++n) {
            gr = extend(gr, n);
            std::int64_t lo = degrees(gr, 1).underlying;
            for (std::int64_t v = 2; v <= n; ++v)
                lo = std::min(lo, degrees(gr, v).underlying);
            b.expect(lo >= 0 && lo <= f(1), f.m, f.c, n, "0 <= delta <= " + istr(f(1)),
                     "delta=" + istr(lo));
        }
    }
    return b.done();
}

ClaimResult chk_property_4(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("property-4", grid_m1(g, cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        const JacoGraph full = construct(f, cap);
        for (std::int64_t k = 1; k <= cap; ++k) {
            const JacoGraph gk = construct(f, k);
            b.expect(degrees(gk, k).underlying == full.in_degree[k], f.m, f.c, k,
                     "d-(v_k)=" + istr(full.in_degree[k]),
                     "d(v_k) in J_k = " + istr(degrees(gk, k).underlying));
        }
    }
    return b.done();
}

ClaimResult chk_f_related(const GridSpec& g) {
    const std::int64_t k_cap = std::min<std::int64_t>(10, g.m_hi + g.c_hi);
    Builder b("sec-3.1-f-related", "k=0.." + istr(k_cap), g.witness_cap);
    if (!gated(b)) return b.done();
    for (std::int64_t k = 0; k <= k_cap; ++k) {
        const std::vector<LinearFunction> fam = f_related(k);
        b.expect(static_cast<std::int64_t>(fam.size()) == k + 1, k, 0, k,
                 istr(k + 1) + " members", istr(static_cast<std::int64_t>(fam.size())));
        for (const LinearFunction& f : fam) {
            const JacoGraph gr = construct(f, k + 1);
            bool complete = true;
            for (std::int64_t u = 1; u <= k + 1 && complete; ++u)
                for (std::int64_t v = u + 1; v <= k + 1; ++v)
                    complete = complete && has_arc(gr, u, v);
            b.expect(complete, f.m, f.c, k + 1, "J_" + istr(k + 1) + " is K_" + istr(k + 1),
                     "incomplete");
        }
    }
    return b.done();
}

ClaimResult chk_infer_roundtrip(const GridSpec& g) {
    const std::int64_t cap = graph_cap(g, 300);
    Builder b("sec-3.1-infer", grid_m1(g, cap) + " (n >= f(2)+1), K_n up to f(1)+1",
              g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        for (std::int64_t n = 1; n <= std::min(f(1) + 1, cap); ++n) {
            const InferenceResult r = infer(arcs_of(construct(f, n)), n);
            b.expect(r.status == InferenceResult::Status::ambiguous && r.validated,
                     f.m, f.c, n, "ambiguous", to_string(r.status));
        }
        for (std::int64_t n = f(2) + 1; n <= cap; ++n) {
            const InferenceResult r = infer(arcs_of(construct(f, n)), n);
            const bool ok = r.status == InferenceResult::Status::unique &&
                            r.f.m == f.m && r.f.c == f.c && r.validated;
            b.expect(ok, f.m, f.c, n, "unique " + f.str(),
                     r.status == InferenceResult::Status::unique ? r.f.str()
                                                                 : to_string(r.status));
        }
    }
    return b.done();
}

ClaimResult chk_m0_classes(const GridSpec& g) {
    const std::int64_t cap = g.n_max;
    Builder b("sec-3.1-m0", "m=0 relaxed, c=" + istr(std::max<std::int64_t>(0, g.c_lo)) +
                                ".." + istr(g.c_hi) + ", n<=" + istr(cap),
              g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m0(g)) {
        for (std::int64_t n = 1; n <= cap; ++n) {
            const JacoGraph gr = construct(f, n);
            const auto comps = components(gr);
            if (f.c == 0) {
                b.expect(edge_count(gr) == 0 &&
                             static_cast<std::int64_t>(comps.size()) == n,
                         0, 0, n, "edgeless, " + istr(n) + " singletons",
                         istr(edge_count(gr)) + " arcs, " +
                             istr(static_cast<std::int64_t>(comps.size())) + " components");
                continue;
            }
            const std::int64_t full = n / (f.c + 1);
            const std::int64_t rem = n % (f.c + 1);
            std::vector<std::pair<std::int64_t, std::int64_t>> want;
            for (std::int64_t bidx = 0; bidx < full; ++bidx)
                want.emplace_back(bidx * (f.c + 1) + 1, (bidx + 1) * (f.c + 1));
            if (rem > 0) want.emplace_back(full * (f.c + 1) + 1, n);
            bool ok = comps == want;
            for (const auto& [lo, hi] : comps)
                for (std::int64_t u = lo; u <= hi && ok; ++u)
                    for (std::int64_t v = u + 1; v <= hi; ++v)
                        ok = ok && has_arc(gr, u, v);
            b.expect(ok, 0, f.c, n,
                     istr(full) + " blocks of K_" + istr(f.c + 1) +
                         (rem ? " plus K_" + istr(rem) : ""),
                     "component structure differs");
        }
    }
    return b.done();
}

ClaimResult chk_thm_2_6(const GridSpec& g) {
    Builder b("thm-2.6", grid_m1(g, g.n_max) + " (scan to 4(f(m+c+1)+1))", g.witness_cap);
    if (!gated(b)) return b.done();
    for (const LinearFunction& f : fns_m1(g)) {
        const std::int64_t v = f.m + f.c + 1;
        const std::int64_t predicted = f(v) + 1;
        const auto hit = smallest_unique_jaconian(f, 4 * predicted);
        const bool ok = hit.has_value() && hit->first == predicted && hit->second == v;
        b.expect(ok, f.m, f.c, predicted,
                 "least n = " + istr(predicted) + " with unique Jaconian v" + istr(v),
                 hit ? "n=" + istr(hit->first) + ", v" + istr(hit->second)
                     : "no such n in scan range");
    }
    return b.done();
}

ClaimResult chk_thm_3_2(const GridSpec& g, bool delta_reading) {
    const std::int64_t cap = g.n_max;
    const std::string id = delta_reading ? "thm-3.2-delta" : "thm-3.2-prime-idx";
    Builder b(id, "c=0, m=" + istr(std::max<std::int64_t>(1, g.m_lo)) + ".." +
                      istr(g.m_hi) + ", n<=" + istr(cap),
              g.witness_cap);
    if (!gated(b)) return b.done();
    if (g.c_lo > 0) { b.r.note = "claim applies to c = 0 only, outside grid"; return b.done(); }
    for (std::int64_t m = std::max<std::int64_t>(1, g.m_lo); m <= g.m_hi; ++m) {
        const LinearFunction f{m, 0, false};
        JacoGraph gr = construct(f, 1);
        for (std::int64_t n = 1; n <= cap; ++n) {
            gr = extend(gr, n);
            const JaconianReport rep = analyze(gr);
            const std::int64_t p = rep.prime_jaconian;
            const std::int64_t k = delta_reading ? rep.delta : p;
            if (k > n) continue;
            std::int64_t sum = 0;
            for (std::int64_t i = 1; i <= k; ++i) sum += degrees(gr, i).out;
            std::int64_t rhs;
            if (delta_reading) {
                std::int64_t eps_hope = 0;
                for (std::int64_t i = p + 1; i <= n; ++i) eps_hope += degrees(gr, i).out;
                rhs = eps_hope + sum;
            } else {
                rhs = (n - p) * (n - p - 1) / 2 + sum;
            }
            b.expect(edge_count(gr) == rhs, m, 0, n, "eps=" + istr(edge_count(gr)),
                     "formula=" + istr(rhs));
        }
    }
    return b.done();
}

ClaimResult chk_thm_3_7(const GridSpec& g) {
    const std::int64_t cap = g.seq_n_max;
    Builder b("thm-3.7", grid_seq(cap), g.witness_cap);
    if (!gated(b)) return b.done();
    const JacoGraph gr = construct(LinearFunction{1, 0, false}, 2 * cap + 2);
    for (std::int64_t n = 1; n <= cap; ++n) {
        const std::int64_t actual = std::min(gr.reach[n], gr.n) - n;
        const std::int64_t expected = bettina_dplus(n);
        b.expect(expected == actual, 1, 0, n, istr(expected), istr(actual));
    }
    return b.done();
}

ClaimResult chk_thm_3_8(const GridSpec& g, bool alternative) {
    const std::string id = alternative ? "thm-3.8-alt" : "thm-3.8-main";
    Builder b(id, grid_m1(g, g.n_max) + " (one n per function)", g.witness_cap);
    if (!gated(b)) return b.done();
    const auto clique = [](std::int64_t s) { return s * (s - 1) / 2; };
    for (const LinearFunction& f : fns_m1(g)) {
        std::int64_t n0, expected;
        if (alternative) {
            n0 = f.m * f.m + f.m * (f.c + 1) + 2;
            const std::int64_t s2 = f.m * f.m + f.m * (f.c - 1) - f.c + 2;
            expected = clique(f.m + f.c + 1) + clique(s2) +
                       f.m * (f.m + f.c) * (f.m + f.c - 1) / 2;
        } else {
            n0 = f(f(1) + 1) + 1;
            const std::int64_t s2 = f(f(1) + 1) - f(1);
            expected = clique(f(1) + 1) + clique(s2) + f.m * f(1) * (f(1) - 1) / 2;
        }
        const std::int64_t actual = edge_count(construct(f, n0));
        b.expect(expected == actual, f.m, f.c, n0, istr(expected), istr(actual));
    }
    return b.done();
}

std::vector<Claim> build_registry() {
    std::vector<Claim> cs;
    const auto quad = [](double per_pair_sq) {
        return [per_pair_sq](const GridSpec& g) {
            return pairs_m1(g) * static_cast<double>(g.n_max) * static_cast<double>(g.n_max) *
                   per_pair_sq;
        };
    };
    const auto seq_cost = [](const GridSpec& g) {
        return static_cast<double>(g.seq_n_max) * 200.0;
    };
    const auto small_cost = [](const GridSpec&) { return 1e6; };

    cs.push_back({"cor-1.2",
                  "the minimal-tail sequence is well-defined and ascends in steps of 0 or 1",
                  "Corollary 1.2", "m >= 1, c >= 0",
                  chk_cor_1_2,
                  [](const GridSpec& g) { return pairs_m1(g) * static_cast<double>(g.seq_n_max); }});
    cs.push_back({"cor-3.3",
                  "edge counts of J_n(mx) obey the prime-Jaconian recursion",
                  "Corollary 3.3", "m >= 1, c = 0", chk_cor_3_3, quad(2.0)});
    cs.push_back({"cor-3.5", "a(n+1) is a(n) or a(n)+1", "Corollary 3.5",
                  "f(x) = x", chk_cor_3_5, seq_cost});
    cs.push_back({"def-1.2-minimal-tail",
                  "the corrected recursion equals the least in-neighbour index of v_n",
                  "Definition 1.2", "m >= 1, c >= 0", chk_def_1_2,
                  [](const GridSpec& g) { return pairs_m1(g) * static_cast<double>(g.seq_n_max); }});
    cs.push_back({"def-2.1-construction",
                  "the ascending-order construction equals the literal arc-rule oracle",
                  "Definition 1.1; Definition 2.1", "m >= 0 (0 relaxed), c >= 0",
                  run_construction_equivalence,
                  [](const GridSpec& g) {
                      const double n = static_cast<double>(g.n_max);
                      return (pairs_m1(g) + cs_count(g)) * n * n * n / 6.0;
                  }});
    cs.push_back({"def-2.4-hope-complete",
                  "vertices above the prime Jaconian vertex induce a complete subgraph",
                  "Definition 2.4", "m >= 1", chk_hope_complete, quad(1.0)});
    cs.push_back({"delta-increase-m",
                  "every strict increase of Delta(J_n) as n grows equals m",
                  "Proposition 2.5", "m >= 1, plus relaxed m = 0 (unstated)",
                  chk_delta_increase, quad(2.0)});
    cs.push_back({"illustration-1",
                  "J_11(2x+1): Delta = 9, Jaconian set {v4,v5,v6}, prime v4",
                  "Illustration 1; Definition 2.2; Definition 2.3", "(m,c,n) = (2,1,11)",
                  chk_illustration_1, small_cost});
    cs.push_back({"illustration-2",
                  "eps(J_15(x)) = 44 and sum d+(v_2..v_15) = 75, directly and via Fibonacci",
                  "Illustration 2", "(m,c,n) = (1,0,15)", chk_illustration_2, small_cost});
    cs.push_back({"illustration-3", "J_15(0x+3) = K_4 u K_4 u K_4 u K_3",
                  "Illustration 3", "(m,c,n) = (0,3,15) relaxed", chk_illustration_3,
                  small_cost});
    cs.push_back({"lemma-1.1a", "d+(v_n) + d-(v_n) = f(n) in the unbounded graph",
                  "Lemma 1.1(a)", "m >= 1", chk_lemma_1_1a,
                  [](const GridSpec& g) {
                      return pairs_m1(g) * static_cast<double>(g.m_hi + 2) *
                             static_cast<double>(g.n_max);
                  }});
    cs.push_back({"lemma-1.1b", "d-(v_{n+1}) - d-(v_n) is 0 or 1", "Lemma 1.1(b)",
                  "m >= 1", chk_lemma_1_1b,
                  [](const GridSpec& g) {
                      return pairs_m1(g) * static_cast<double>(g.n_max);
                  }});
    cs.push_back({"lemma-1.1c",
                  "in-neighbours of any vertex form a contiguous index range",
                  "Lemma 1.1(c)", "m >= 1", chk_lemma_1_1c, quad(0.5)});
    cs.push_back({"lemma-1.1d-corrected",
                  "d+(v_n) = (m-1)n + c + L(n), corrected minimal-tail L",
                  "Lemma 1.1(d)", "m >= 1, n >= 2",
                  [](const GridSpec& g) { return chk_lemma_1_1d(g, SequenceVariant::corrected); },
                  [](const GridSpec& g) {
                      return pairs_m1(g) * static_cast<double>(g.m_hi + 2) *
                             static_cast<double>(g.n_max);
                  }});
    cs.push_back({"lemma-1.1d-printed",
                  "d+(v_n) = (m-1)n + c + L(n), printed minimal-tail L",
                  "Lemma 1.1(d)", "m >= 1, n >= 2",
                  [](const GridSpec& g) { return chk_lemma_1_1d(g, SequenceVariant::printed); },
                  [](const GridSpec& g) {
                      return pairs_m1(g) * static_cast<double>(g.m_hi + 2) *
                             static_cast<double>(g.n_max);
                  }});
    cs.push_back({"lemma-2.1",
                  "J_i is complete with Delta = i-1 and every vertex Jaconian, i <= f(1)+1",
                  "Lemma 2.1", "m >= 1, i <= f(1)+1", chk_lemma_2_1, small_cost});
    cs.push_back({"lemma-2.3",
                  "a saturated least in-neighbour of v_n is the prime Jaconian vertex",
                  "Lemma 2.3", "m >= 1", chk_lemma_2_3, quad(1.0)});
    cs.push_back({"lemma-2.4", "|d(v_i) - d(v_{i-1})| <= m in the underlying graph",
                  "Lemma 2.4", "m >= 1, n >= 2", chk_lemma_2_4, quad(1.0)});
    cs.push_back({"lemma-3.4", "d+(v_n) = a(n) for f(x) = x", "Lemma 3.4",
                  "f(x) = x, n >= 2", chk_lemma_3_4, seq_cost});
    cs.push_back({"lemma-3.6", "a(i + a(i)) = i and a(i + a(i-1)) = i", "Lemma 3.6",
                  "f(x) = x", chk_lemma_3_6, seq_cost});
    cs.push_back({"prop-1.3-offset",
                  "L(mk + L(k) - t) = k for every integer 0 <= t < f(k)",
                  "Proposition 1.3", "m >= 1, k >= 1",
                  [](const GridSpec& g) { return chk_prop_1_3(g, false); },
                  [](const GridSpec& g) {
                      return pairs_m1(g) * static_cast<double>(g.m_hi + 2) * 200.0 * 200.0;
                  }});
    cs.push_back({"prop-1.3-twofunc",
                  "L(mk + L(k) - g(k)) = k for linear g with 0 <= g(k) < f(k)",
                  "Proposition 1.3", "m >= 1, k >= 1",
                  [](const GridSpec& g) { return chk_prop_1_3(g, true); },
                  [](const GridSpec& g) {
                      return pairs_m1(g) * static_cast<double>(g.m_hi + 2) * 200.0 * 200.0;
                  }});
    cs.push_back({"prop-2.2",
                  "J_{f(i)} has prime Jaconian v_i and Jaconian set {v_i..v_{f(1)+1}}, i <= f(1)",
                  "Proposition 2.2", "m >= 1, 1 <= i <= f(1)", chk_prop_2_2, small_cost});
    cs.push_back({"prop-2.5",
                  "J_{f(i)} has prime Jaconian index <= i for i >= f(1)+1",
                  "Proposition 2.5", "m >= 1, i >= f(1)+1", chk_prop_2_5, quad(1.0)});
    cs.push_back({"prop-3.1", "eps(J_l(mx)) = l(l-1)/2 for l <= m+1",
                  "Proposition 3.1", "m >= 1, c = 0, l <= m+1", chk_prop_3_1, small_cost});
    cs.push_back({"prop-3.9",
                  "largest arc targets of consecutive saturated vertices differ by m or m+1",
                  "Proposition 3.9", "m >= 1", chk_prop_3_9, quad(0.5)});
    cs.push_back({"property-1",
                  "a saturated prime Jaconian vertex makes every lower vertex saturated",
                  "Property 1", "m >= 1", chk_property_1, quad(1.0)});
    cs.push_back({"property-2", "Delta(J_k) <= Delta(J_n) for k <= n", "Property 2",
                  "m >= 1", chk_property_2, quad(0.5)});
    cs.push_back({"property-3", "0 <= delta(J_n) <= f(1)", "Property 3", "m >= 1",
                  chk_property_3, quad(1.0)});
    cs.push_back({"property-4",
                  "d-(v_k) equals the underlying degree of v_k in J_k", "Property 4",
                  "m >= 1", chk_property_4, quad(0.5)});
    cs.push_back({"sec-3.1-f-related",
                  "the k+1 generators with m + c = k all produce the complete graph K_{k+1}",
                  "Section 3.1", "k >= 0, relaxed m >= 0", chk_f_related, small_cost});
    cs.push_back({"sec-3.1-infer",
                  "saturated-vertex equations recover the generator for n >= f(2)+1",
                  "Section 3.1", "m >= 1, n >= f(2)+1; K_n ambiguous below f(1)+2",
                  chk_infer_roundtrip,
                  [](const GridSpec& g) {
                      const double n = std::min<std::int64_t>(g.n_max, 300);
                      return pairs_m1(g) * n * n * n / 3.0;
                  }});
    cs.push_back({"sec-3.1-m0",
                  "J_n(0x+c) is floor(n/(c+1)) copies of K_{c+1} plus a remainder clique",
                  "Section 3.1", "m = 0 relaxed, c >= 0", chk_m0_classes, quad(1.0)});
    cs.push_back({"thm-2.6",
                  "the least n with Delta = f(m+c+1) and unique Jaconian v_{m+c+1} is f(m+c+1)+1",
                  "Theorem 2.6", "m >= 1", chk_thm_2_6,
                  [](const GridSpec& g) {
                      const double n0 = 4.0 * (static_cast<double>(g.m_hi) *
                                                   (g.m_hi + g.c_hi + 1) +
                                               g.c_hi + 1);
                      return pairs_m1(g) * n0 * n0;
                  }});
    cs.push_back({"thm-3.2-delta",
                  "eps(J_n(mx)) = eps(Hope) + sum d+(v_1..v_k) with k = Delta",
                  "Theorem 3.2", "m >= 1, c = 0",
                  [](const GridSpec& g) { return chk_thm_3_2(g, true); }, quad(1.0)});
    cs.push_back({"thm-3.2-prime-idx",
                  "eps(J_n(mx)) = (n-k)(n-k-1)/2 + sum d+(v_1..v_k) with k = prime index",
                  "Theorem 3.2", "m >= 1, c = 0",
                  [](const GridSpec& g) { return chk_thm_3_2(g, false); }, quad(1.0)});
    cs.push_back({"thm-3.7", "d+(v_n) is the index-shifted Zeckendorf sum of n",
                  "Theorem 3.7", "f(x) = x", chk_thm_3_7, seq_cost});
    cs.push_back({"thm-3.8-alt",
                  "eps at n = m^2+m(c+1)+2 equals the clique-sum formula (alternative form)",
                  "Theorem 3.8", "m >= 1, single n per function",
                  [](const GridSpec& g) { return chk_thm_3_8(g, true); }, small_cost});
    cs.push_back({"thm-3.8-main",
                  "eps at n = f(f(1)+1)+1 equals the clique-sum formula (main form)",
                  "Theorem 3.8", "m >= 1, single n per function",
                  [](const GridSpec& g) { return chk_thm_3_8(g, false); }, small_cost});

    std::sort(cs.begin(), cs.end(),
              [](const Claim& a, const Claim& b) { return a.id < b.id; });
    return cs;
}

}  // namespace

const std::vector<Claim>& registry() {
    static const std::vector<Claim> r = build_registry();
    return r;
}

ClaimResult check(const std::string& claim_id, const GridSpec& grid) {
    for (const Claim& cl : registry()) {
        if (cl.id != claim_id) continue;
        if (cl.cost && cl.cost(grid) > kCostBound)
            throw std::length_error("grid for claim '" + claim_id +
                                    "' exceeds the configured cost bound");
        return cl.checker(grid);
    }
    throw std::invalid_argument("unknown claim id: " + claim_id);
}

std::vector<ClaimResult> verify_all(const GridSpec& grid) {
    std::vector<ClaimResult> out;
    out.reserve(registry().size());
    for (const Claim& cl : registry()) {
        if (cl.cost && cl.cost(grid) > kCostBound) {
            ClaimResult r;
            r.id = cl.id;
            r.grid_summary = "not run";
            r.status = ClaimStatus::not_applicable;
            r.note = "grid exceeds the configured cost bound";
            out.push_back(std::move(r));
        } else {
            out.push_back(cl.checker(grid));
        }
    }
    return out;
}

}  // namespace jaco
