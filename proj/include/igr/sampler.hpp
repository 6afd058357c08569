#pragma once

#include "igr/errors.hpp"
#include "igr/graph.hpp"
#include "igr/prng.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace igr {

// Uniform sample from B(n,m): a partial Fisher-Yates over the n^2 cell
// indices 0..n^2-1, driven by SplitMix64. Step i swaps positions i and
// i + (next mod (n^2 - i)); the first m positions are the chosen cells.
// Deterministic in (n, m, seed).
inline BipartiteGraph sample_bipartite(int n, long long m, std::uint64_t seed) {
    const long long cells = static_cast<long long>(n) * n;
    if (m < 0 || m > cells)
        throw input_error("sample_bipartite: m=" + std::to_string(m) + " outside 0..n^2=" + std::to_string(cells));

    std::vector<long long> cell(cells);
    std::iota(cell.begin(), cell.end(), 0);
    SplitMix64 rng(seed);
    for (long long i = 0; i < m; ++i) {
        const long long j = i + static_cast<long long>(rng.next_below(static_cast<std::uint64_t>(cells - i)));
        std::swap(cell[i], cell[j]);
    }

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        const long long k = cell[i];
        edges.emplace_back(static_cast<int>(k / n) + 1, n + static_cast<int>(k % n) + 1);
    }
    return BipartiteGraph(n, std::move(edges));
}

} // namespace igr
