#pragma once

#include "igr/bigmath.hpp"
#include "igr/canonical.hpp"
#include "igr/degeneracy.hpp"
#include "igr/errors.hpp"
#include "igr/graph.hpp"
#include "igr/prng.hpp"
#include "igr/sampler.hpp"
#include "igr/universal.hpp"

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace igr {

// --- Counting c-degenerate graphs -----------------------------------------

// Exact count of labeled c-degenerate graphs on {1..n}, by exhaustive
// enumeration. The count is checked against the explicit n! * n^{cn}
// bound before being returned.
inline long long count_degenerate(int n, int c) {
    if (n > 5) throw cap_error("count_degenerate: n=" + std::to_string(n) + " exceeds exhaustive cap 5");
    if (n < 0 || c < 0) throw input_error("count_degenerate: negative parameter");
    long long count = 0;
    enumerate_graphs(n, [&](const Graph& g) {
        if (is_k_degenerate(g, c)) ++count;
    });
    if (n >= 1) {
        const mpz_class bound = factorial(static_cast<unsigned long>(n)) *
                                pow_mpz(mpz_class(n), static_cast<unsigned long>(c) * n);
        if (to_mpz(count) > bound)
            throw std::logic_error("count_degenerate: count exceeds the n!*n^{cn} bound");
    }
    return count;
}

// --- Hereditary-closure speed ----------------------------------------------

// Per-n exact counts of distinct labeled graphs on {1..n} lying in the
// hereditary closure of the seed family, next to the factorial-speed
// comparator n! * n^{cn}.
struct ClosureSpeedReport {
    int n_max = 0;
    int c = 1;
    std::vector<mpz_class> counts;            // counts[i] is the count at n = i+1
    std::vector<mpz_class> factorial_bound;   // n! * n^{cn}
};

namespace detail {

template <typename F>
void for_each_subset(int total, int pick, F&& visit) {
    std::vector<int> subset(static_cast<std::size_t>(pick));
    auto rec = [&](auto&& self, int start, int depth) -> void {
        if (depth == pick) {
            visit(subset);
            return;
        }
        for (int v = start; v <= total - (pick - depth - 1); ++v) {
            subset[static_cast<std::size_t>(depth)] = v;
            self(self, v + 1, depth + 1);
        }
    };
    rec(rec, 1, 0);
}

} // namespace detail

// Counts labeled members of the hereditary closure by collecting the
// canonical forms of all size-n induced subgraphs of the seeds and
// summing n!/|Aut| per isomorphism class.
inline ClosureSpeedReport closure_speed(const std::vector<Graph>& seeds, int n_max, int c = 1) {
    if (n_max > 6) throw cap_error("closure_speed: nMax=" + std::to_string(n_max) + " exceeds exact cap 6");
    if (n_max < 1 || c < 0) throw input_error("closure_speed: parameters out of range");
    for (const auto& g : seeds)
        if (g.size() > 12)
            throw cap_error("closure_speed: seed with " + std::to_string(g.size()) + " vertices exceeds cap 12");

    ClosureSpeedReport report{n_max, c, {}, {}};
    for (int n = 1; n <= n_max; ++n) {
        std::map<std::string, long long> classes;  // canonical bytes -> |Aut|
        for (const auto& seed : seeds) {
            if (seed.size() < n) continue;
            detail::for_each_subset(seed.size(), n, [&](const std::vector<int>& subset) {
                const auto code = canonical_form(seed.induced(subset));
                classes.emplace(code.bytes, code.aut_count);
            });
        }
        mpz_class count = 0;
        const mpz_class n_fact = factorial(static_cast<unsigned long>(n));
        for (const auto& [bytes, aut] : classes) count += n_fact / to_mpz(aut);
        report.counts.push_back(count);
        report.factorial_bound.push_back(n_fact * pow_mpz(mpz_class(n), static_cast<unsigned long>(c) * n));
    }
    return report;
}

// --- Certified binomial lower bound ----------------------------------------

// Certified lower bound on log2 C(a,b) as an exact dyadic rational:
// exact big-integer evaluation when a <= 10^4, otherwise the inequality
// C(a,b) >= (a/b)^b with every rounding step directed downward.
inline mpq_class log_binom_lower(const mpz_class& a, long long b, mpfr_prec_t prec = 64) {
    if (b < 0 || a < to_mpz(b)) throw input_error("log_binom_lower: require 0 <= b <= a");
    if (b == 0 || a == to_mpz(b)) return mpq_class(0);
    if (a <= 10000)
        return log2_bound(binomial(a, static_cast<unsigned long>(b)), /*lower=*/true, prec);
    // log2(a/b) >= log2_lower(a) - log2_upper(b); both sides are exact
    // dyadics, so the combination needs no further rounding.
    const mpq_class diff = log2_bound(a, true, prec) - log2_bound(to_mpz(b), false, prec);
    if (diff < 0) return mpq_class(0);  // C(a,b) >= 1 always
    return mpq_class(to_mpz(b)) * diff;
}

// --- The counting ledger -----------------------------------------------------

enum class PoolMode { all_bipartite, good_lower_bound };

inline std::string pool_mode_name(PoolMode m) {
    return m == PoolMode::all_bipartite ? "allBipartite" : "goodLowerBound";
}

// Exact record of both sides of the counting inequality at a concrete
// (n, u, k): lhsLog2 bounds from above the log2 of the number of
// k-collections any u-vertex universal graph can account for
// (2^{u^2} * u^{nk}); rhsLog2 bounds from below the log2 of the number
// of k-subsets of the candidate pool. Directed rounding makes a true
// verdict sound under exact real arithmetic.
struct CertificateLedger {
    int n = 0;
    int u = 0;
    long long k = 0;
    double eps = 0;
    double eps_prime = 0;
    PoolMode pool_mode = PoolMode::all_bipartite;
    long long pool_edges = 0;       // m of the pool B(n/2, m)
    mpz_class pool_size_lower;
    mpq_class lhs_log2;             // rounded up
    mpq_class rhs_log2;             // rounded down
    bool verdict = false;           // rhs > lhs
    long prec = 64;
};

inline CertificateLedger ledger(int n, int u, long long k, double eps, double eps_prime,
                                PoolMode mode, mpfr_prec_t prec = 64) {
    if (n < 2 || n % 2 != 0) throw input_error("ledger: n must be even and >= 2");
    if (u < 1 || k < 1) throw input_error("ledger: require u >= 1 and k >= 1");
    if (!(0 < eps && eps < 2)) throw input_error("ledger: eps out of range (0,2)");

    CertificateLedger led;
    led.n = n;
    led.u = u;
    led.k = k;
    led.eps = eps;
    led.eps_prime = eps_prime;
    led.pool_mode = mode;
    led.prec = static_cast<long>(prec);

    const int half = n / 2;
    const mpz_class m_z = floor_pow(half, 2.0 - eps, prec >= 128 ? prec : 128);
    if (m_z > mpz_class(half) * half) throw input_error("ledger: pool edge count exceeds n^2/4");
    led.pool_edges = static_cast<long long>(m_z.get_si());

    const mpz_class pool_all = binomial(mpz_class(half) * half, static_cast<unsigned long>(led.pool_edges));
    if (mode == PoolMode::all_bipartite) {
        led.pool_size_lower = pool_all;
    } else {
        const auto params = goodness_params(n, eps, eps_prime);
        const mpq_class ub = union_bound_exact(half, led.pool_edges, params.min_degree, params.size_cap);
        if (ub >= 1)
            throw cap_error("ledger: union bound " + ub.get_str() +
                            " >= 1; goodLowerBound mode certifies nothing here");
        mpq_class lower = (mpq_class(1) - ub) * mpq_class(pool_all);
        mpz_class num = lower.get_num(), den = lower.get_den();
        mpz_class q;
        mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
        led.pool_size_lower = q;
    }

    if (to_mpz(k) > led.pool_size_lower)
        throw input_error("ledger: k exceeds the pool-size lower bound " + led.pool_size_lower.get_str());

    // lhs = u^2 + n*k*log2(u), rounded up.
    led.lhs_log2 = mpq_class(static_cast<long>(u)) * u +
                   mpq_class(n) * mpq_class(static_cast<long>(k)) * log2_bound(mpz_class(u), /*lower=*/false, prec);
    // rhs = certified lower bound on log2 C(pool, k).
    led.rhs_log2 = log_binom_lower(led.pool_size_lower, k, prec);
    led.verdict = led.rhs_log2 > led.lhs_log2;
    return led;
}

// Grid sweep over even n and powers of two for u and k, searching for
// verdict-true ledgers. u ranges up to 2^ceil(n^{u_exponent}) and k up
// to 2^ceil(sqrt(n)).
inline std::vector<CertificateLedger> ledger_sweep(int n_max, double u_exponent, double eps,
                                                   double eps_prime, PoolMode mode,
                                                   mpfr_prec_t prec = 64) {
    std::vector<CertificateLedger> out;
    for (int n = 4; n <= n_max; n += 2) {
        mpz_class u_bits;  // ceil(n^{u_exponent})
        {
            mpfr_t x, e;
            mpfr_init2(x, 128);
            mpfr_init2(e, 128);
            mpfr_set_si(x, n, MPFR_RNDN);
            mpfr_set_d(e, u_exponent, MPFR_RNDN);
            mpfr_pow(x, x, e, MPFR_RNDU);
            mpfr_ceil(x, x);
            mpfr_get_z(u_bits.get_mpz_t(), x, MPFR_RNDN);
            mpfr_clear(x);
            mpfr_clear(e);
        }
        const long u_bits_l = u_bits.get_si();
        long k_bits = 1;
        while (k_bits * k_bits < n) ++k_bits;  // ceil(sqrt(n))

        for (long ub = 1; ub <= u_bits_l && ub < 20; ++ub) {
            const int u = 1 << ub;
            for (long kb = 0; kb <= k_bits && kb < 30; ++kb) {
                const long long k = 1LL << kb;
                try {
                    out.push_back(ledger(n, u, k, eps, eps_prime, mode, prec));
                } catch (const input_error&) {
                    // k exceeded the pool; skip this cell.
                } catch (const cap_error&) {
                    // goodLowerBound refused (union bound >= 1); skip.
                }
            }
        }
    }
    return out;
}

// --- Non-representable collections -----------------------------------------

// Seeded search for a k-collection of distinct n-vertex graphs that no
// carrier of size <= u represents, verified exhaustively over carriers.
struct CounterexampleSearch {
    long long attempts_used = 0;
    std::optional<std::vector<Graph>> collection;
};

inline CounterexampleSearch search_counterexample_exhaustive(int n, int u, long long k,
                                                             std::uint64_t seed, long long attempts) {
    if (n > 6) throw cap_error("search_counterexample: n=" + std::to_string(n) + " exceeds cap 6");
    if (u > 5) throw cap_error("search_counterexample: u=" + std::to_string(u) + " exceeds cap 5");
    if (n < 1 || k < 1 || attempts < 1) throw input_error("search_counterexample: parameters out of range");
    const int e = n * (n - 1) / 2;
    if (k > (1LL << e)) throw input_error("search_counterexample: k exceeds the number of distinct n-vertex graphs");

    SplitMix64 rng(seed);
    CounterexampleSearch result;
    for (long long attempt = 0; attempt < attempts; ++attempt) {
        ++result.attempts_used;
        std::set<std::uint64_t> masks;
        while (static_cast<long long>(masks.size()) < k)
            masks.insert(rng.next() & ((std::uint64_t{1} << e) - 1));
        std::vector<Graph> collection;
        for (auto mask : masks) collection.push_back(Graph::from_edge_bits(n, mask));
        if (!min_universal_size(collection, u)) {
            result.collection = std::move(collection);
            return result;
        }
    }
    return result;
}

// --- Family construction -----------------------------------------------------

// Per-n record of a sampled-and-filtered family slice.
struct FamilyEntry {
    int n = 0;
    long long pool_edges = 0;
    mpz_class k_formula;        // ceil(2^sqrt(n)) before capping
    long long k_capped = 0;
    long long sampled = 0;
    long long budget_exceeded = 0;
    std::vector<BipartiteGraph> members;  // the good ones
};

struct FamilyReport {
    double delta = 0;
    double eps = 0;
    double eps_prime = 0;
    std::uint64_t seed = 0;
    long long cap = 0;
    std::vector<FamilyEntry> entries;
};

// Samples up to min(k_n, cap) graphs per n from B(n/2, floor((n/2)^{2-eps}))
// with eps = 1/2 + delta/2, and retains those passing the goodness test
// with eps' = 1/2.
inline FamilyReport build_family(const std::vector<int>& n_list, double delta, std::uint64_t seed,
                                 long long cap, long long budget = 10'000'000) {
    if (!(0 < delta && delta < 1)) throw input_error("build_family: delta must lie in (0,1)");
    if (cap < 1) throw input_error("build_family: cap must be >= 1");

    FamilyReport report;
    report.delta = delta;
    report.eps = 0.5 + delta / 2;
    report.eps_prime = 0.5;
    report.seed = seed;
    report.cap = cap;

    SplitMix64 master(seed);
    for (int n : n_list) {
        if (n < 2 || n % 2 != 0) throw input_error("build_family: every n must be even and >= 2");
        FamilyEntry entry;
        entry.n = n;
        const int half = n / 2;
        entry.pool_edges = static_cast<long long>(floor_pow(half, 2.0 - report.eps).get_si());
        entry.k_formula = k_n_formula(n);
        entry.k_capped = entry.k_formula > to_mpz(cap) ? cap : static_cast<long long>(entry.k_formula.get_si());

        for (long long i = 0; i < entry.k_capped; ++i) {
            const auto g = sample_bipartite(half, entry.pool_edges, master.next());
            const auto verdict = is_good(g, report.eps, report.eps_prime, budget);
            ++entry.sampled;
            if (verdict.kind == SearchKind::budget_exceeded)
                ++entry.budget_exceeded;
            else if (verdict.good())
                entry.members.push_back(g);
        }
        report.entries.push_back(std::move(entry));
    }
    return report;
}

} // namespace igr
