#pragma once

#include "igr/canonical.hpp"
#include "igr/errors.hpp"
#include "igr/graph.hpp"
#include "igr/labeling.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

namespace igr {

// Largest carrier a scheme is allowed to expand into (2^width vertices).
inline constexpr std::uint64_t universal_build_cap = std::uint64_t{1} << 20;

struct UniversalGraph {
    Graph carrier;
    std::string provenance;  // "scheme:<name>:<n>" or "explicit"
};

// Carrier on all 2^width codes of a scheme at size n, with edges exactly
// where the decoder answers true. Every graph the scheme can label then
// embeds into the carrier via its own codes.
inline UniversalGraph universal_from_scheme(const SchemeId& s, int n) {
    const int width = scheme_width(s, n);
    if (width >= 64 || (std::uint64_t{1} << width) > universal_build_cap)
        throw cap_error("universal_from_scheme: 2^" + std::to_string(width) + " vertices exceeds build cap 2^20");
    const int u = 1 << width;

    std::vector<std::string> codes;
    codes.reserve(static_cast<std::size_t>(u));
    for (int i = 0; i < u; ++i) codes.push_back(detail::to_bits(static_cast<unsigned long>(i), width));

    std::vector<Edge> edges;
    for (int i = 0; i < u; ++i)
        for (int j = i + 1; j < u; ++j)
            if (decode(s, width, codes[static_cast<std::size_t>(i)], codes[static_cast<std::size_t>(j)]))
                edges.emplace_back(i + 1, j + 1);
    return {Graph(u, edges), "scheme:" + s.name() + ":" + std::to_string(n)};
}

// Vertex of the carrier a given code denotes (code i maps to vertex i+1).
inline int code_vertex(const std::string& code) {
    return static_cast<int>(detail::field(code, 0, static_cast<int>(code.size()))) + 1;
}

// Injective map from V(F) into V(U) preserving edges and non-edges.
struct Embedding {
    std::vector<int> map;  // map[i] = image of vertex i+1

    int operator()(int v) const { return map[static_cast<std::size_t>(v - 1)]; }
};

inline bool is_induced_embedding(const Graph& f, const Graph& u, const Embedding& emb) {
    if (static_cast<int>(emb.map.size()) != f.size()) return false;
    std::vector<bool> used(static_cast<std::size_t>(u.size()) + 1, false);
    for (int img : emb.map) {
        if (img < 1 || img > u.size() || used[static_cast<std::size_t>(img)]) return false;
        used[static_cast<std::size_t>(img)] = true;
    }
    for (int a = 1; a <= f.size(); ++a)
        for (int b = a + 1; b <= f.size(); ++b)
            if (f.adjacent(a, b) != u.adjacent(emb(a), emb(b))) return false;
    return true;
}

// Exhaustive backtracking for an induced embedding of F into U. F's
// vertices are placed in decreasing-degree order; candidates are
// filtered by degree feasibility and adjacency consistency with the
// partial map.
inline std::optional<Embedding> find_induced_embedding(const Graph& f, const Graph& u) {
    if (f.size() > u.size()) throw input_error("find_induced_embedding: |F| > |U|");
    const int nf = f.size();

    std::vector<int> order(static_cast<std::size_t>(nf));
    for (int i = 0; i < nf; ++i) order[static_cast<std::size_t>(i)] = i + 1;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const int da = f.degree(a), db = f.degree(b);
        return da != db ? da > db : a < b;
    });

    std::vector<int> image(static_cast<std::size_t>(nf) + 1, 0);
    std::vector<bool> used(static_cast<std::size_t>(u.size()) + 1, false);

    auto place = [&](auto&& self, int depth) -> bool {
        if (depth == nf) return true;
        const int v = order[static_cast<std::size_t>(depth)];
        for (int cand = 1; cand <= u.size(); ++cand) {
            if (used[static_cast<std::size_t>(cand)]) continue;
            if (u.degree(cand) < f.degree(v)) continue;
            bool ok = true;
            for (int i = 0; i < depth && ok; ++i) {
                const int w = order[static_cast<std::size_t>(i)];
                ok = f.adjacent(v, w) == u.adjacent(cand, image[static_cast<std::size_t>(w)]);
            }
            if (!ok) continue;
            image[static_cast<std::size_t>(v)] = cand;
            used[static_cast<std::size_t>(cand)] = true;
            if (self(self, depth + 1)) return true;
            used[static_cast<std::size_t>(cand)] = false;
        }
        return false;
    };
    if (!place(place, 0)) return std::nullopt;

    Embedding emb;
    emb.map.assign(image.begin() + 1, image.end());
    return emb;
}

// Labels F by the binary indices of its images in U; the decoder is
// adjacency lookup in the carrier.
inline Labeling labels_from_universal(const UniversalGraph& u, const Graph& f, const Embedding& emb) {
    if (!is_induced_embedding(f, u.carrier, emb)) {
        for (int a = 1; a <= f.size(); ++a)
            for (int b = a + 1; b <= f.size(); ++b)
                if (static_cast<int>(emb.map.size()) == f.size() &&
                    f.adjacent(a, b) != u.carrier.adjacent(emb(a), emb(b)))
                    throw input_error("labels_from_universal: embedding violates pair (" + std::to_string(a) +
                                      "," + std::to_string(b) + ")");
        throw input_error("labels_from_universal: map is not a valid embedding");
    }
    const int width = id_bits(u.carrier.size() - 1);  // indices 0..u-1
    Labeling lab{{SchemeKind::universal, 0}, f.size(), width, {}};
    for (int v = 1; v <= f.size(); ++v)
        lab.codes.push_back(detail::to_bits(static_cast<unsigned long>(emb(v) - 1), width));
    return lab;
}

// Decoder for universal-index labelings: adjacency lookup in the carrier.
inline bool verify_labeling_universal(const Graph& f, const Labeling& lab, const Graph& carrier) {
    if (static_cast<int>(lab.codes.size()) != f.size())
        throw input_error("verify_labeling_universal: code count != vertex count");
    for (int a = 1; a <= f.size(); ++a)
        for (int b = a + 1; b <= f.size(); ++b) {
            const int va = static_cast<int>(detail::field(lab.codes[static_cast<std::size_t>(a - 1)], 0, lab.width)) + 1;
            const int vb = static_cast<int>(detail::field(lab.codes[static_cast<std::size_t>(b - 1)], 0, lab.width)) + 1;
            if (carrier.adjacent(va, vb) != f.adjacent(a, b)) return false;
        }
    return true;
}

// True iff every family member has an induced embedding into u.
inline bool represents(const Graph& u, const std::vector<Graph>& family) {
    for (const auto& f : family) {
        if (f.size() > u.size()) return false;
        if (!find_induced_embedding(f, u)) return false;
    }
    return true;
}

// Does any u-vertex carrier represent the family? With prune, carriers
// are deduplicated by canonical form (representability is isomorphism-
// invariant); without, all 2^{C(u,2)} labeled carriers are scanned.
inline bool any_carrier_represents(const std::vector<Graph>& family, int u, bool prune = true) {
    if (u > 6) throw cap_error("any_carrier_represents: u=" + std::to_string(u) + " exceeds exhaustive cap 6");
    bool found = false;
    std::unordered_set<std::string> seen;
    enumerate_graphs(u, [&](const Graph& carrier) {
        if (found) return;
        if (prune && !seen.insert(canonical_form(carrier).bytes).second) return;
        if (represents(carrier, family)) found = true;
    });
    return found;
}

// Smallest u <= u_max such that some u-vertex graph represents the
// family, searching exhaustively over carriers.
inline std::optional<int> min_universal_size(const std::vector<Graph>& family, int u_max) {
    if (u_max > 6) throw cap_error("min_universal_size: uMax=" + std::to_string(u_max) + " exceeds exhaustive cap 6");
    for (int u = 0; u <= u_max; ++u)
        if (any_carrier_represents(family, u)) return u;
    return std::nullopt;
}

// Number of distinct labeled n-vertex graphs with an induced embedding
// into U, by enumerating injective n-tuples of U's vertices. Always at
// most u^n.
inline long long count_representable(const Graph& u, int n) {
    if (n < 0) throw input_error("count_representable: negative n");
    if (n > 7) throw cap_error("count_representable: n > 7 overflows the pattern mask");
    double budget = 1;
    for (int i = 0; i < n; ++i) budget *= static_cast<double>(u.size());
    if (budget > 1e7)
        throw cap_error("count_representable: u^n = " + std::to_string(budget) + " exceeds budget 1e7");

    std::unordered_set<std::uint32_t> patterns;
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    std::vector<bool> used(static_cast<std::size_t>(u.size()) + 1, false);
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == n) {
            std::uint32_t mask = 0;
            int j = 0;
            for (int a = 0; a < n; ++a)
                for (int b = a + 1; b < n; ++b, ++j)
                    if (u.adjacent(tuple[static_cast<std::size_t>(a)], tuple[static_cast<std::size_t>(b)]))
                        mask |= std::uint32_t{1} << j;
            patterns.insert(mask);
            return;
        }
        for (int v = 1; v <= u.size(); ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            tuple[static_cast<std::size_t>(depth)] = v;
            self(self, depth + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    rec(rec, 0);
    return static_cast<long long>(patterns.size());
}

} // namespace igr
