#pragma once

#include "igr/errors.hpp"
#include "igr/graph.hpp"
#include "igr/prng.hpp"
#include "igr/sampler.hpp"

#include "igr/bigmath.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace igr {

// Elimination ordering obtained by repeatedly removing a minimum-degree
// vertex (ties broken by lowest index). forward_degree[i] counts the
// neighbors of order[i] appearing later in the order; the maximum over
// these equals the graph's degeneracy exactly.
struct DegeneracyCertificate {
    std::vector<int> order;
    std::vector<int> forward_degree;
    int degeneracy = 0;
};

inline DegeneracyCertificate peel_ordering(const Graph& g) {
    const int n = g.size();
    std::vector<int> deg(n + 1, 0);
    std::vector<bool> removed(n + 1, false);
    for (int v = 1; v <= n; ++v) deg[v] = g.degree(v);

    DegeneracyCertificate cert;
    cert.order.reserve(n);
    cert.forward_degree.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 1; v <= n; ++v)
            if (!removed[v] && (best == -1 || deg[v] < deg[best])) best = v;
        removed[best] = true;
        cert.order.push_back(best);
        cert.forward_degree.push_back(deg[best]);
        cert.degeneracy = std::max(cert.degeneracy, deg[best]);
        for (int u : g.neighbors(best))
            if (!removed[u]) --deg[u];
    }
    return cert;
}

inline bool is_k_degenerate(const Graph& g, int k) {
    if (k < 0) throw input_error("is_k_degenerate: negative k");
    return peel_ordering(g).degeneracy <= k;
}

// Query for an induced subgraph of minimum degree >= min_degree on at
// most size_cap vertices. budget caps the number of node expansions of
// the exact search; exhaustion is reported as a value, not an error.
struct BadSubgraphQuery {
    int min_degree = 1;
    int size_cap = 1;
    long long budget = 10'000'000;
};

enum class SearchKind { found, none, budget_exceeded };

struct BadSubgraphResult {
    SearchKind kind = SearchKind::none;
    std::vector<int> witness;     // nonempty iff kind == found
    long long expansions = 0;
};

namespace detail {

// Maximal induced subgraph of minimum degree >= c. Every vertex set of
// minimum internal degree >= c survives the peeling, so the search may
// restrict itself to the core.
inline std::vector<int> core_vertices(const Graph& g, int c) {
    const int n = g.size();
    std::vector<int> deg(n + 1, 0);
    std::vector<bool> removed(n + 1, false);
    for (int v = 1; v <= n; ++v) deg[v] = g.degree(v);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int v = 1; v <= n; ++v) {
            if (!removed[v] && deg[v] < c) {
                removed[v] = true;
                changed = true;
                for (int u : g.neighbors(v))
                    if (!removed[u]) --deg[u];
            }
        }
    }
    std::vector<int> core;
    for (int v = 1; v <= n; ++v)
        if (!removed[v]) core.push_back(v);
    return core;
}

struct BadSearch {
    const Graph& g;
    int c;
    int cap;
    long long budget;
    long long expansions = 0;
    std::vector<int> chosen;
    std::vector<int> avail;       // candidate vertices still allowed
    bool out_of_budget = false;

    bool satisfied(int v) const {
        int d = 0;
        for (int u : chosen)
            if (g.adjacent(v, u)) ++d;
        return d >= c;
    }

    int deficiency(int v) const {
        int d = 0;
        for (int u : chosen)
            if (g.adjacent(v, u)) ++d;
        return c - d;
    }

    bool extend() {
        if (++expansions > budget) {
            out_of_budget = true;
            return false;
        }
        // Branch on the most constrained deficient member.
        int pick = -1, pick_def = 0, pick_slack = 0;
        for (int v : chosen) {
            const int def = deficiency(v);
            if (def <= 0) continue;
            if (static_cast<int>(chosen.size()) + def > cap) return false;
            int cands = 0;
            for (int w : avail)
                if (g.adjacent(v, w)) ++cands;
            if (cands < def) return false;
            const int slack = cands - def;
            if (pick == -1 || slack < pick_slack) {
                pick = v;
                pick_def = def;
                pick_slack = slack;
            }
        }
        (void)pick_def;
        if (pick == -1) return true;  // every member has internal degree >= c

        std::vector<int> branch;
        for (int w : avail)
            if (g.adjacent(pick, w)) branch.push_back(w);

        std::vector<int> saved = avail;
        for (int w : branch) {
            avail.erase(std::find(avail.begin(), avail.end(), w));
            chosen.push_back(w);
            if (extend()) return true;
            chosen.pop_back();
            if (out_of_budget) break;
            // w stays excluded: subsets containing w were fully covered.
        }
        avail = std::move(saved);
        return false;
    }
};

} // namespace detail

// Exact search for a witness set S, |S| <= q.size_cap, with every vertex
// of induced(S) of degree >= q.min_degree. Restricts to the c-core, then
// branches over inclusion/exclusion anchored at the minimum member of S.
inline BadSubgraphResult find_bad_subgraph(const Graph& g, const BadSubgraphQuery& q) {
    if (q.min_degree < 1 || q.size_cap < 1 || q.budget < 1)
        throw input_error("find_bad_subgraph: c, sizeCap and budget must be >= 1");

    BadSubgraphResult result;
    // Min degree >= c needs at least c+1 vertices.
    if (q.size_cap <= q.min_degree) return result;

    const auto core = detail::core_vertices(g, q.min_degree);
    long long spent = 0;
    for (std::size_t i = 0; i < core.size(); ++i) {
        detail::BadSearch search{g, q.min_degree, q.size_cap, q.budget - spent};
        search.chosen = {core[i]};
        search.avail.assign(core.begin() + i + 1, core.end());
        const bool found = search.extend();
        spent += search.expansions;
        if (found) {
            result.kind = SearchKind::found;
            result.witness = search.chosen;
            std::sort(result.witness.begin(), result.witness.end());
            result.expansions = spent;
            return result;
        }
        if (search.out_of_budget) {
            result.kind = SearchKind::budget_exceeded;
            result.expansions = spent;
            return result;
        }
    }
    result.kind = SearchKind::none;
    result.expansions = spent;
    return result;
}

// Goodness parameters derived from (eps, eps'): the degree threshold
// c = ceil(4/(eps-eps')) and the size cap s = floor(N^{eps'}) where N is
// the total vertex count of the graph under test.
//
// Note: with the family-construction defaults eps = 1/2 + delta/2 and
// eps' = 1/2, the threshold evaluates to ceil(8/delta) -- 8/delta, not
// 8*delta, which the shorthand "8d" is sometimes misread as. Everything
// here computes c from the 4/(eps-eps') formula directly.
struct GoodnessParams {
    int min_degree = 0;
    int size_cap = 0;
};

inline GoodnessParams goodness_params(int total_vertices, double eps, double eps_prime) {
    if (!(0.0 <= eps_prime && eps_prime < eps && eps < 1.0))
        throw input_error("goodness: require 0 <= eps' < eps < 1");
    GoodnessParams p;
    p.min_degree = static_cast<int>(std::ceil(4.0 / (eps - eps_prime)));
    p.size_cap = std::max(1, static_cast<int>(std::floor(std::pow(static_cast<double>(total_vertices), eps_prime))));
    return p;
}

struct GoodnessResult {
    SearchKind kind = SearchKind::none;  // none = good, found = bad
    std::vector<int> witness;
    GoodnessParams params;
    long long expansions = 0;

    bool good() const { return kind == SearchKind::none; }
};

inline GoodnessResult is_good(const BipartiteGraph& g, double eps, double eps_prime,
                              long long budget = 10'000'000) {
    const auto params = goodness_params(2 * g.half(), eps, eps_prime);
    const auto r = find_bad_subgraph(g.to_graph(), {params.min_degree, params.size_cap, budget});
    return {r.kind, r.witness, params, r.expansions};
}

namespace detail {

inline mpq_class mpq_pow(const mpq_class& base, unsigned long e) {
    mpq_class out;
    mpz_pow_ui(out.get_num_mpz_t(), base.get_num().get_mpz_t(), e);
    mpz_pow_ui(out.get_den_mpz_t(), base.get_den().get_mpz_t(), e);
    out.canonicalize();
    return out;
}

} // namespace detail

// Exact finite union bound on the probability that a uniform member of
// B(n,m) contains an induced subgraph on at most size_cap vertices with
// minimum degree >= c:
//   sum over 1 <= a,b <= size_cap of
//     C(n,a) * C(n,b) * [ (m*b/n^2)^(a*c) + (m*a/n^2)^(b*c) ],
// each (a,b) term clipped at 1 since it bounds a probability.
inline mpq_class union_bound_exact(int n, long long m, int c, int size_cap) {
    if (n < 1 || m < 0 || c < 1 || size_cap < 1)
        throw input_error("union_bound_exact: parameters out of range");
    const long long cells = static_cast<long long>(n) * n;
    if (m > cells) throw input_error("union_bound_exact: m > n^2");

    mpq_class total = 0;
    mpz_class choose_a, choose_b;
    for (int a = 1; a <= size_cap; ++a) {
        mpz_bin_uiui(choose_a.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(a));
        for (int b = 1; b <= size_cap; ++b) {
            mpz_bin_uiui(choose_b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(b));
            const mpq_class pa = detail::mpq_pow(mpq_class(to_mpz(m) * b, to_mpz(cells)),
                                                 static_cast<unsigned long>(a) * c);
            const mpq_class pb = detail::mpq_pow(mpq_class(to_mpz(m) * a, to_mpz(cells)),
                                                 static_cast<unsigned long>(b) * c);
            mpq_class term = mpq_class(choose_a) * mpq_class(choose_b) * (pa + pb);
            if (term > 1) term = 1;
            total += term;
        }
    }
    return total;
}

// Empirical check of the small-subgraph degeneracy lemma: sample trials
// graphs from B(n,m), search each for a bad subgraph, and report the
// empirical bad frequency next to the exact union bound.
struct Lemma21Report {
    int n = 0;
    long long m = 0;
    int min_degree = 0;
    int size_cap = 0;
    std::uint64_t seed = 0;
    long long trials = 0;
    long long bad_count = 0;
    long long unknown_count = 0;
    mpq_class union_bound;

    double bad_frequency() const {
        return trials == 0 ? 0.0 : static_cast<double>(bad_count) / static_cast<double>(trials);
    }
};

inline Lemma21Report monte_carlo_lemma21(int n, long long m, int c, int size_cap,
                                         long long trials, std::uint64_t seed,
                                         long long budget = 10'000'000) {
    if (trials < 1) throw input_error("monte_carlo_lemma21: trials must be >= 1");
    Lemma21Report report{n, m, c, size_cap, seed, trials, 0, 0, union_bound_exact(n, m, c, size_cap)};

    // Per-trial streams: trial t is seeded with output t+1 of the master
    // generator, so trials are independent and order-insensitive.
    SplitMix64 master(seed);
    for (long long t = 0; t < trials; ++t) {
        const auto g = sample_bipartite(n, m, master.next());
        const auto r = find_bad_subgraph(g.to_graph(), {c, size_cap, budget});
        if (r.kind == SearchKind::found) ++report.bad_count;
        if (r.kind == SearchKind::budget_exceeded) ++report.unknown_count;
    }
    return report;
}

} // namespace igr
