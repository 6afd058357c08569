#pragma once

#include "igr/errors.hpp"
#include "igr/graph.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace igr {

// Largest n for which brute-force canonicalization over all n!
// relabelings is allowed. All closure/counting oracles run at n <= 6,
// so 8 leaves headroom without inviting factorial blowups.
inline constexpr int canonical_cap = 8;

// Canonical invariant of a graph: two graphs on the same vertex count
// share `bytes` iff they are isomorphic (guaranteed for n <= canonical_cap).
struct CanonicalCode {
    std::string bytes;
    long long aut_count = 0;

    bool operator==(const CanonicalCode&) const = default;
};

// Brute force over all n! relabelings: the code is the lexicographically
// least edge-indicator mask, and aut_count is the number of permutations
// fixing the graph.
inline CanonicalCode canonical_form(const Graph& g) {
    const int n = g.size();
    if (n > canonical_cap)
        throw cap_error("canonical_form: n=" + std::to_string(n) + " exceeds canonical_cap=" + std::to_string(canonical_cap));

    const std::uint64_t self = g.edge_bits();
    std::uint64_t best = ~std::uint64_t{0};
    long long aut = 0;

    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        const std::uint64_t mask = g.relabeled(perm).edge_bits();
        best = std::min(best, mask);
        if (mask == self) ++aut;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (n == 0) {
        best = 0;
        aut = 1;
    }

    CanonicalCode code;
    code.bytes = std::to_string(n) + ":" + std::to_string(best);
    code.aut_count = aut;
    return code;
}

// All 2^{C(n,2)} labeled graphs on {1..n}, each exactly once, in
// lexicographic edge-indicator order (the indicator string read with
// pair (1,2) first).
template <typename F>
void enumerate_graphs(int n, F&& visit) {
    if (n > 6) throw cap_error("enumerate_graphs: n=" + std::to_string(n) + " exceeds cap 6");
    if (n < 0) throw input_error("enumerate_graphs: negative n");
    const int e = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << e;
    for (std::uint64_t lex = 0; lex < total; ++lex) {
        // from_edge_bits counts bit 0 as pair (1,2); reverse so that the
        // enumeration order is lexicographic in the indicator string.
        std::uint64_t mask = 0;
        for (int j = 0; j < e; ++j)
            if (lex >> (e - 1 - j) & 1) mask |= std::uint64_t{1} << j;
        visit(Graph::from_edge_bits(n, mask));
    }
}

inline std::vector<Graph> all_graphs(int n) {
    std::vector<Graph> out;
    enumerate_graphs(n, [&](Graph g) { out.push_back(std::move(g)); });
    return out;
}

} // namespace igr
