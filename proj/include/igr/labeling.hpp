#pragma once

#include "igr/degeneracy.hpp"
#include "igr/errors.hpp"
#include "igr/graph.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace igr {

enum class SchemeKind { forest, degenerate, row, universal };

// Scheme identifier; degenerate carries its parameter k.
struct SchemeId {
    SchemeKind kind = SchemeKind::row;
    int k = 0;

    std::string name() const {
        switch (kind) {
            case SchemeKind::forest: return "forest";
            case SchemeKind::degenerate: return "degenerate:" + std::to_string(k);
            case SchemeKind::row: return "row";
            case SchemeKind::universal: return "universal";
        }
        return "?";
    }

    static SchemeId parse(const std::string& name) {
        if (name == "forest") return {SchemeKind::forest, 0};
        if (name == "row") return {SchemeKind::row, 0};
        if (name == "universal") return {SchemeKind::universal, 0};
        if (name.rfind("degenerate:", 0) == 0) {
            const int k = std::stoi(name.substr(11));
            if (k < 0) throw input_error("scheme: negative k");
            return {SchemeKind::degenerate, k};
        }
        throw input_error("unknown scheme '" + name + "'");
    }

    bool operator==(const SchemeId&) const = default;
};

// Bits needed to hold any value in 0..n (ids are 1..n, sentinel 0).
inline int id_bits(int n) {
    int bits = 0;
    while ((1 << bits) < n + 1) ++bits;
    return bits;
}

inline int scheme_width(const SchemeId& s, int n) {
    const int l = id_bits(n);
    switch (s.kind) {
        case SchemeKind::forest: return 2 * l;
        case SchemeKind::degenerate: return (s.k + 1) * l;
        case SchemeKind::row: return l + n;
        case SchemeKind::universal: throw input_error("universal labelings have no width formula in n");
    }
    return 0;
}

// Per-vertex bit codes of a fixed width; codes[i] labels vertex i+1.
// Bit strings are most significant bit first, fields concatenated in
// declared order.
struct Labeling {
    SchemeId scheme;
    int n = 0;
    int width = 0;
    std::vector<std::string> codes;
};

namespace detail {

inline std::string to_bits(unsigned long value, int width) {
    std::string out(static_cast<std::size_t>(width), '0');
    for (int i = 0; i < width; ++i)
        if (value >> (width - 1 - i) & 1) out[static_cast<std::size_t>(i)] = '1';
    return out;
}

inline unsigned long field(const std::string& code, int offset, int width) {
    unsigned long v = 0;
    for (int i = 0; i < width; ++i)
        v = v << 1 | static_cast<unsigned long>(code[static_cast<std::size_t>(offset + i)] == '1');
    return v;
}

// Recover n from a row-scheme width (n + id_bits(n) is strictly
// increasing in n).
inline int row_n_from_width(int width) {
    for (int n = 0; n + id_bits(n) <= width; ++n)
        if (n + id_bits(n) == width) return n;
    throw input_error("row scheme: no n matches width " + std::to_string(width));
}

} // namespace detail

// The family-wide adjacency predicate: a pure function of the scheme and
// the two codes, never of the individual graph the codes came from.
inline bool decode(const SchemeId& s, int width, const std::string& a, const std::string& b) {
    if (static_cast<int>(a.size()) != width || static_cast<int>(b.size()) != width)
        throw input_error("decode: code width mismatch");
    switch (s.kind) {
        case SchemeKind::forest: {
            const int l = width / 2;
            const auto id_a = detail::field(a, 0, l), par_a = detail::field(a, l, l);
            const auto id_b = detail::field(b, 0, l), par_b = detail::field(b, l, l);
            return (par_a != 0 && par_a == id_b) || (par_b != 0 && par_b == id_a);
        }
        case SchemeKind::degenerate: {
            const int l = width / (s.k + 1);
            const auto id_a = detail::field(a, 0, l);
            const auto id_b = detail::field(b, 0, l);
            for (int i = 1; i <= s.k; ++i) {
                if (id_b != 0 && detail::field(a, i * l, l) == id_b) return true;
                if (id_a != 0 && detail::field(b, i * l, l) == id_a) return true;
            }
            return false;
        }
        case SchemeKind::row: {
            const int n = detail::row_n_from_width(width);
            const int l = width - n;
            const auto id_a = detail::field(a, 0, l);
            const auto id_b = detail::field(b, 0, l);
            const bool ab = id_b >= 1 && id_b <= static_cast<unsigned long>(n) &&
                            a[static_cast<std::size_t>(l + static_cast<int>(id_b) - 1)] == '1';
            const bool ba = id_a >= 1 && id_a <= static_cast<unsigned long>(n) &&
                            b[static_cast<std::size_t>(l + static_cast<int>(id_a) - 1)] == '1';
            return ab && ba;  // symmetric on arbitrary codes; both read the stored row
        }
        case SchemeKind::universal:
            throw input_error("decode: universal labelings decode by carrier lookup, not by code alone");
    }
    return false;
}

namespace detail {

// Some cycle of g, found inside its (nonempty) 2-core. Used only for
// error reporting when a forest was expected.
inline std::vector<int> find_cycle(const Graph& g) {
    const auto core = core_vertices(g, 2);
    // Walk inside the core; every core vertex has degree >= 2 there, so
    // the walk must revisit a vertex, closing a cycle.
    std::vector<bool> in_core(static_cast<std::size_t>(g.size()) + 1, false);
    for (int v : core) in_core[static_cast<std::size_t>(v)] = true;
    std::vector<int> walk{core.front()};
    std::vector<int> pos(static_cast<std::size_t>(g.size()) + 1, -1);
    pos[static_cast<std::size_t>(core.front())] = 0;
    while (true) {
        const int v = walk.back();
        const int prev = walk.size() >= 2 ? walk[walk.size() - 2] : 0;
        for (int u : g.neighbors(v)) {
            if (!in_core[static_cast<std::size_t>(u)] || u == prev) continue;
            if (pos[static_cast<std::size_t>(u)] >= 0)
                return {walk.begin() + pos[static_cast<std::size_t>(u)], walk.end()};
            walk.push_back(u);
            pos[static_cast<std::size_t>(u)] = static_cast<int>(walk.size()) - 1;
            break;
        }
    }
}

} // namespace detail

// Forest scheme: root each component at its lowest-index vertex; the
// code of v is (id(v), parent(v) or 0), each field id_bits(n) wide.
inline Labeling forest_labels(const Graph& g) {
    const int n = g.size();
    if (!is_k_degenerate(g, 1)) {
        const auto cycle = detail::find_cycle(g);
        std::string msg = "forest_labels: input contains a cycle:";
        for (int v : cycle) msg += " " + std::to_string(v);
        throw input_error(msg);
    }

    std::vector<int> parent(static_cast<std::size_t>(n) + 1, -1);
    for (int root = 1; root <= n; ++root) {
        if (parent[static_cast<std::size_t>(root)] != -1) continue;
        parent[static_cast<std::size_t>(root)] = 0;
        std::vector<int> queue{root};
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int u : g.neighbors(queue[h]))
                if (parent[static_cast<std::size_t>(u)] == -1) {
                    parent[static_cast<std::size_t>(u)] = queue[h];
                    queue.push_back(u);
                }
    }

    Labeling lab{{SchemeKind::forest, 0}, n, scheme_width({SchemeKind::forest, 0}, n), {}};
    const int l = id_bits(n);
    for (int v = 1; v <= n; ++v)
        lab.codes.push_back(detail::to_bits(static_cast<unsigned long>(v), l) +
                            detail::to_bits(static_cast<unsigned long>(parent[static_cast<std::size_t>(v)]), l));
    return lab;
}

// k-degenerate scheme: the code of v is (id(v), the <= k neighbors of v
// that follow it in the peeling order, padded with 0).
inline Labeling degenerate_labels(const Graph& g, int k) {
    const int n = g.size();
    const auto cert = peel_ordering(g);
    if (cert.degeneracy > k)
        throw input_error("degenerate_labels: graph has degeneracy " + std::to_string(cert.degeneracy) +
                          " > k=" + std::to_string(k));

    std::vector<int> pos(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 0; i < n; ++i) pos[static_cast<std::size_t>(cert.order[static_cast<std::size_t>(i)])] = i;

    const SchemeId scheme{SchemeKind::degenerate, k};
    Labeling lab{scheme, n, scheme_width(scheme, n), {}};
    const int l = id_bits(n);
    for (int v = 1; v <= n; ++v) {
        std::vector<int> later;
        for (int u : g.neighbors(v))
            if (pos[static_cast<std::size_t>(u)] > pos[static_cast<std::size_t>(v)]) later.push_back(u);
        std::string code = detail::to_bits(static_cast<unsigned long>(v), l);
        for (int i = 0; i < k; ++i)
            code += detail::to_bits(i < static_cast<int>(later.size())
                                        ? static_cast<unsigned long>(later[static_cast<std::size_t>(i)])
                                        : 0UL,
                                    l);
        lab.codes.push_back(std::move(code));
    }
    return lab;
}

// Baseline for all graphs: the code of v is (id(v), row v of the
// adjacency matrix).
inline Labeling row_labels(const Graph& g) {
    const int n = g.size();
    Labeling lab{{SchemeKind::row, 0}, n, scheme_width({SchemeKind::row, 0}, n), {}};
    const int l = id_bits(n);
    for (int v = 1; v <= n; ++v) {
        std::string code = detail::to_bits(static_cast<unsigned long>(v), l);
        for (int u = 1; u <= n; ++u) code += g.adjacent(v, u) ? '1' : '0';
        lab.codes.push_back(std::move(code));
    }
    return lab;
}

inline Labeling labels_for(const SchemeId& s, const Graph& g) {
    switch (s.kind) {
        case SchemeKind::forest: return forest_labels(g);
        case SchemeKind::degenerate: return degenerate_labels(g, s.k);
        case SchemeKind::row: return row_labels(g);
        case SchemeKind::universal: break;
    }
    throw input_error("labels_for: universal labelings come from labels_from_universal");
}

// True iff the decoder reproduces g's adjacency relation on every pair.
inline bool verify_labeling(const Graph& g, const Labeling& lab) {
    if (static_cast<int>(lab.codes.size()) != g.size())
        throw input_error("verify_labeling: code count != vertex count");
    for (const auto& code : lab.codes)
        if (static_cast<int>(code.size()) != lab.width)
            throw input_error("verify_labeling: code width mismatch");
    for (int u = 1; u <= g.size(); ++u)
        for (int v = u + 1; v <= g.size(); ++v)
            if (decode(lab.scheme, lab.width, lab.codes[static_cast<std::size_t>(u - 1)],
                       lab.codes[static_cast<std::size_t>(v - 1)]) != g.adjacent(u, v))
                return false;
    return true;
}

// Labeling file format: line 1 "scheme n width", then n lines
// "v <bitstring>" with exactly width characters of 0/1.
inline std::string serialize(const Labeling& lab) {
    std::ostringstream out;
    out << lab.scheme.name() << ' ' << lab.n << ' ' << lab.width << '\n';
    for (int v = 1; v <= lab.n; ++v) out << v << ' ' << lab.codes[static_cast<std::size_t>(v - 1)] << '\n';
    return out.str();
}

inline Labeling parse_labeling(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw input_error("labeling text: missing header");
    std::istringstream hs(line);
    std::string scheme_name, extra;
    int n, width;
    if (!(hs >> scheme_name >> n >> width) || (hs >> extra))
        throw input_error("labeling text: malformed header '" + line + "'");
    Labeling lab{SchemeId::parse(scheme_name), n, width, {}};
    for (int i = 1; i <= n; ++i) {
        if (!std::getline(in, line)) throw input_error("labeling text: missing code line " + std::to_string(i));
        std::istringstream ls(line);
        int v;
        std::string bits;
        if (!(ls >> v >> bits) || (ls >> extra) || v != i)
            throw input_error("labeling text: malformed code line '" + line + "'");
        if (static_cast<int>(bits.size()) != width || bits.find_first_not_of("01") != std::string::npos)
            throw input_error("labeling text: code for vertex " + std::to_string(v) + " is not " +
                              std::to_string(width) + " bits of 0/1");
        lab.codes.push_back(std::move(bits));
    }
    return lab;
}

inline Labeling parse_labeling(const std::string& text) {
    std::istringstream in(text);
    return parse_labeling(in);
}

} // namespace igr
