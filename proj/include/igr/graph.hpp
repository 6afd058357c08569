#pragma once

#include "igr/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace igr {

using Edge = std::pair<int, int>;

// Immutable labeled graph on vertex set {1..n} with a symmetric,
// loop-free adjacency matrix. All derived graphs are fresh copies.
class Graph {
public:
    Graph() = default;

    Graph(int n, const std::vector<Edge>& edges) : n_(check_n(n)), adj_(static_cast<std::size_t>(n) * n, false) {
        for (auto [u, v] : edges) add_edge(u, v);
    }

    // Graph on n vertices whose edge set is given by an indicator mask:
    // bit j (counting from the least significant) selects the j-th pair
    // in lexicographic order (1,2),(1,3),...,(1,n),(2,3),...
    static Graph from_edge_bits(int n, std::uint64_t mask) {
        Graph g;
        g.n_ = check_n(n);
        g.adj_.assign(static_cast<std::size_t>(n) * n, false);
        int j = 0;
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v, ++j)
                if (mask >> j & 1) g.set_adjacent(u, v);
        return g;
    }

    int size() const { return n_; }

    bool adjacent(int u, int v) const {
        return u != v && adj_[idx(u, v)];
    }

    int degree(int v) const {
        int d = 0;
        for (int u = 1; u <= n_; ++u)
            if (adjacent(v, u)) ++d;
        return d;
    }

    std::vector<int> neighbors(int v) const {
        std::vector<int> out;
        for (int u = 1; u <= n_; ++u)
            if (adjacent(v, u)) out.push_back(u);
        return out;
    }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v)
                if (adjacent(u, v)) out.emplace_back(u, v);
        return out;
    }

    int edge_count() const {
        int m = 0;
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v)
                if (adjacent(u, v)) ++m;
        return m;
    }

    // Edge-indicator mask in the same pair order as from_edge_bits.
    // Requires C(n,2) <= 64.
    std::uint64_t edge_bits() const {
        if (n_ > 11) throw cap_error("edge_bits: n > 11 does not fit a 64-bit mask");
        std::uint64_t mask = 0;
        int j = 0;
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v, ++j)
                if (adjacent(u, v)) mask |= std::uint64_t{1} << j;
        return mask;
    }

    // Induced subgraph on the ordered vertex list vs: new vertices i,j
    // are adjacent iff vs[i-1],vs[j-1] are adjacent here.
    Graph induced(const std::vector<int>& vs) const {
        std::vector<bool> seen(static_cast<std::size_t>(n_) + 1, false);
        for (int v : vs) {
            if (v < 1 || v > n_) throw input_error("induced: vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
            if (seen[v]) throw input_error("induced: duplicate vertex " + std::to_string(v));
            seen[v] = true;
        }
        Graph g;
        g.n_ = static_cast<int>(vs.size());
        g.adj_.assign(static_cast<std::size_t>(g.n_) * g.n_, false);
        for (int i = 1; i <= g.n_; ++i)
            for (int j = i + 1; j <= g.n_; ++j)
                if (adjacent(vs[i - 1], vs[j - 1])) g.set_adjacent(i, j);
        return g;
    }

    // Image under the permutation perm: old vertex v becomes perm[v-1].
    Graph relabeled(const std::vector<int>& perm) const {
        Graph g;
        g.n_ = n_;
        g.adj_.assign(adj_.size(), false);
        for (int u = 1; u <= n_; ++u)
            for (int v = u + 1; v <= n_; ++v)
                if (adjacent(u, v)) g.set_adjacent(perm[u - 1], perm[v - 1]);
        return g;
    }

    bool operator==(const Graph&) const = default;

private:
    static int check_n(int n) {
        if (n < 0) throw input_error("graph: negative vertex count");
        return n;
    }

    std::size_t idx(int u, int v) const {
        return static_cast<std::size_t>(u - 1) * n_ + (v - 1);
    }

    void set_adjacent(int u, int v) {
        adj_[idx(u, v)] = true;
        adj_[idx(v, u)] = true;
    }

    void add_edge(int u, int v) {
        auto pair_str = [&] { return "(" + std::to_string(u) + "," + std::to_string(v) + ")"; };
        if (u < 1 || u > n_ || v < 1 || v > n_) throw input_error("edge endpoint out of range: " + pair_str());
        if (u == v) throw input_error("self-loop rejected: " + pair_str());
        if (adj_[idx(u, v)]) throw input_error("duplicate edge rejected: " + pair_str());
        set_adjacent(u, v);
    }

    int n_ = 0;
    std::vector<bool> adj_;
};

inline Graph make_graph(int n, const std::vector<Edge>& edges) {
    return Graph(n, edges);
}

// Element of B(n,m): bipartite graph with equal parts {1..n} and
// {n+1..2n} and exactly m cross edges.
class BipartiteGraph {
public:
    BipartiteGraph(int half, std::vector<Edge> edges) : half_(half), edges_(std::move(edges)) {
        if (half_ < 0) throw input_error("bipartite: negative part size");
        for (auto [u, v] : edges_) {
            if (u < 1 || u > half_ || v < half_ + 1 || v > 2 * half_)
                throw input_error("bipartite edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not join the two parts");
        }
        std::sort(edges_.begin(), edges_.end());
        if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
            throw input_error("bipartite: duplicate edge");
    }

    int half() const { return half_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }

    Graph to_graph() const { return Graph(2 * half_, edges_); }

    bool operator==(const BipartiteGraph&) const = default;

private:
    int half_;
    std::vector<Edge> edges_;
};

// --- Text format (bit-exact) ---
// Graph:     line 1 "n m", then m lines "u v" with u < v, sorted
//            lexicographically, 1-indexed, newline-terminated.
// Bipartite: header "B n m", edges "u v" with u in 1..n, v in n+1..2n.

inline std::string serialize(const Graph& g) {
    std::ostringstream out;
    auto es = g.edges();
    out << g.size() << ' ' << es.size() << '\n';
    for (auto [u, v] : es) out << u << ' ' << v << '\n';
    return out.str();
}

inline std::string serialize(const BipartiteGraph& g) {
    std::ostringstream out;
    out << "B " << g.half() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

namespace detail {

inline std::vector<Edge> parse_edge_lines(std::istream& in, long long m) {
    std::vector<Edge> edges;
    std::string line;
    for (long long i = 0; i < m; ++i) {
        if (!std::getline(in, line)) throw input_error("graph text: expected " + std::to_string(m) + " edge lines, got " + std::to_string(i));
        std::istringstream ls(line);
        int u, v;
        std::string extra;
        if (!(ls >> u >> v) || (ls >> extra)) throw input_error("graph text: malformed edge line '" + line + "'");
        edges.emplace_back(u, v);
    }
    return edges;
}

} // namespace detail

inline Graph parse_graph(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw input_error("graph text: missing header");
    std::istringstream hs(line);
    long long n, m;
    std::string extra;
    if (!(hs >> n >> m) || (hs >> extra)) throw input_error("graph text: malformed header '" + line + "'");
    if (n < 0 || m < 0) throw input_error("graph text: negative header field");
    auto edges = detail::parse_edge_lines(in, m);
    for (auto [u, v] : edges)
        if (u >= v) throw input_error("graph text: edge (" + std::to_string(u) + "," + std::to_string(v) + ") violates u < v");
    return Graph(static_cast<int>(n), edges);
}

inline Graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

inline BipartiteGraph parse_bipartite(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw input_error("bipartite text: missing header");
    std::istringstream hs(line);
    std::string tag, extra;
    long long n, m;
    if (!(hs >> tag >> n >> m) || tag != "B" || (hs >> extra)) throw input_error("bipartite text: malformed header '" + line + "'");
    if (n < 0 || m < 0) throw input_error("bipartite text: negative header field");
    return BipartiteGraph(static_cast<int>(n), detail::parse_edge_lines(in, m));
}

inline BipartiteGraph parse_bipartite(const std::string& text) {
    std::istringstream in(text);
    return parse_bipartite(in);
}

} // namespace igr
