#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "hamgen/errors.hpp"

namespace hamgen {

// Vertices are dense integers 0..n-1 and n is capped at 64, so one machine
// word holds any vertex subset and any adjacency row.
constexpr int kMaxVertices = 64;

using VertexPair = std::pair<int, int>;

// Subset of 0..n-1 as a bit mask.
struct VertexSet {
    std::uint64_t bits = 0;

    VertexSet() = default;
    explicit VertexSet(std::uint64_t b) : bits(b) {}

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }
    static VertexSet range(int lo, int hi) {  // [lo, hi)
        VertexSet s;
        for (int v = lo; v < hi; ++v) s.add(v);
        return s;
    }
    static VertexSet full(int n) {
        return VertexSet(n >= 64 ? ~0ULL : ((1ULL << n) - 1));
    }

    bool contains(int v) const { return (bits >> v) & 1ULL; }
    void add(int v) { bits |= 1ULL << v; }
    void remove(int v) { bits &= ~(1ULL << v); }
    int count() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }

    VertexSet operator|(VertexSet o) const { return VertexSet(bits | o.bits); }
    VertexSet operator&(VertexSet o) const { return VertexSet(bits & o.bits); }
    VertexSet operator^(VertexSet o) const { return VertexSet(bits ^ o.bits); }
    VertexSet minus(VertexSet o) const { return VertexSet(bits & ~o.bits); }
    bool operator==(const VertexSet&) const = default;

    std::vector<int> to_vector() const {
        std::vector<int> out;
        std::uint64_t b = bits;
        while (b) {
            out.push_back(std::countr_zero(b));
            b &= b - 1;
        }
        return out;
    }
};

// Immutable undirected simple graph. The sorted edge list is the coordinate
// system for all GF(2) vectors built on top of it, so it never changes after
// construction.
class Graph {
public:
    Graph() : n_(0) { eindex_.fill(-1); }

    Graph(int n, std::vector<VertexPair> edges) : n_(n) {
        if (n < 0) fail(ErrorCode::OutOfRange, "negative vertex count");
        if (n > kMaxVertices)
            fail(ErrorCode::TooLarge, "n = " + std::to_string(n) + " exceeds the exact-pipeline cap of 64");
        eindex_.fill(-1);
        adj_.assign(static_cast<std::size_t>(n), 0ULL);
        for (auto& [u, v] : edges) {
            if (u > v) std::swap(u, v);
            if (u == v) fail(ErrorCode::LoopEdge, "loop at vertex " + std::to_string(u));
            if (u < 0 || v >= n)
                fail(ErrorCode::OutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                ") outside 0.." + std::to_string(n - 1));
        }
        std::sort(edges.begin(), edges.end());
        for (std::size_t i = 1; i < edges.size(); ++i)
            if (edges[i] == edges[i - 1])
                fail(ErrorCode::DuplicateEdge, "edge (" + std::to_string(edges[i].first) + "," +
                                                   std::to_string(edges[i].second) + ") repeats");
        edges_ = std::move(edges);
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            auto [u, v] = edges_[i];
            adj_[u] |= 1ULL << v;
            adj_[v] |= 1ULL << u;
            eindex_[pack(u, v)] = static_cast<int>(i);
            eindex_[pack(v, u)] = static_cast<int>(i);
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<VertexPair>& edges() const { return edges_; }
    const VertexPair& edge(int i) const { return edges_[static_cast<std::size_t>(i)]; }

    bool has_edge(int u, int v) const {
        return u != v && u >= 0 && u < n_ && v >= 0 && v < n_ && ((adj_[u] >> v) & 1ULL);
    }
    // Position of {u,v} in the edge ordering, -1 if absent.
    int edge_index(int u, int v) const {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return -1;
        return eindex_[pack(u, v)];
    }

    std::uint64_t neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return std::popcount(adj_[v]); }
    int min_degree() const {
        int d = n_ > 0 ? degree(0) : 0;
        for (int v = 1; v < n_; ++v) d = std::min(d, degree(v));
        return d;
    }
    int max_degree() const {
        int d = 0;
        for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
        return d;
    }

    VertexSet all_vertices() const { return VertexSet::full(n_); }

    int component_count() const {
        std::uint64_t seen = 0;
        int c = 0;
        for (int v = 0; v < n_; ++v) {
            if ((seen >> v) & 1ULL) continue;
            ++c;
            std::uint64_t frontier = 1ULL << v;
            while (frontier) {
                seen |= frontier;
                std::uint64_t next = 0;
                std::uint64_t f = frontier;
                while (f) {
                    int u = std::countr_zero(f);
                    f &= f - 1;
                    next |= adj_[u];
                }
                frontier = next & ~seen;
            }
        }
        return c;
    }

    bool connected_within(VertexSet s) const {
        if (s.empty()) return true;
        std::uint64_t inside = s.bits;
        std::uint64_t seen = 0;
        std::uint64_t frontier = 1ULL << std::countr_zero(inside);
        while (frontier) {
            seen |= frontier;
            std::uint64_t next = 0;
            std::uint64_t f = frontier;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                next |= adj_[u] & inside;
            }
            frontier = next & ~seen;
        }
        return seen == inside;
    }

    std::uint64_t hash() const {  // FNV-1a over n and the sorted edge list
        std::uint64_t h = 0xcbf29ce484222325ULL;
        auto mix = [&h](std::uint64_t x) {
            for (int i = 0; i < 8; ++i) {
                h ^= (x >> (8 * i)) & 0xff;
                h *= 0x100000001b3ULL;
            }
        };
        mix(static_cast<std::uint64_t>(n_));
        for (auto [u, v] : edges_) mix((static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v));
        return h;
    }

private:
    static int pack(int u, int v) { return (u << 6) | v; }

    int n_;
    std::vector<VertexPair> edges_;
    std::vector<std::uint64_t> adj_;
    std::array<int, 64 * 64> eindex_;
};

inline Graph build_graph(int n, std::vector<VertexPair> edges) { return Graph(n, std::move(edges)); }

// (delta_X(Y), Delta_X(Y)): min and max over y in Y of |N(y) ∩ X|.
inline std::pair<int, int> degree_stats(const Graph& g, VertexSet x, VertexSet y) {
    if (y.empty()) fail(ErrorCode::EmptySet, "degree_stats over empty Y");
    int lo = kMaxVertices + 1, hi = -1;
    for (int v : y.to_vector()) {
        int d = std::popcount(g.neighbors(v) & x.bits);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

// (e(X), e(X,Y)). An edge with one end in X and the other in Y counts once,
// even when X and Y overlap; so e(X,X) = e(X).
inline std::pair<int, int> edge_counts(const Graph& g, VertexSet x, VertexSet y) {
    int inside = 0, cross = 0;
    for (auto [u, v] : g.edges()) {
        if (x.contains(u) && x.contains(v)) ++inside;
        if ((x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u))) ++cross;
    }
    return {inside, cross};
}

struct InducedGraph {
    Graph graph;
    std::vector<int> vertices;  // vertices[new index] = original vertex, ascending
};

inline InducedGraph induced(const Graph& g, VertexSet x) {
    InducedGraph out;
    out.vertices = x.to_vector();
    std::array<int, kMaxVertices> back{};
    for (std::size_t i = 0; i < out.vertices.size(); ++i) back[out.vertices[i]] = static_cast<int>(i);
    std::vector<VertexPair> es;
    for (auto [u, v] : g.edges())
        if (x.contains(u) && x.contains(v)) es.push_back({back[u], back[v]});
    out.graph = Graph(static_cast<int>(out.vertices.size()), std::move(es));
    return out;
}

// Spanning subgraph keeping only the X-Y cross edges; vertex ids unchanged.
inline Graph bipartite_between(const Graph& g, VertexSet x, VertexSet y) {
    if (!(x & y).empty()) fail(ErrorCode::Overlap, "bipartite_between with overlapping sides");
    std::vector<VertexPair> es;
    for (auto [u, v] : g.edges())
        if ((x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u))) es.push_back({u, v});
    return Graph(g.vertex_count(), std::move(es));
}

// Edge-list text format: first line "n <count>", then "u v" per edge,
// '#' starts a comment line. Writer emits edges sorted ascending.
inline void write_edge_list(std::ostream& os, const Graph& g) {
    os << "n " << g.vertex_count() << "\n";
    for (auto [u, v] : g.edges()) os << u << " " << v << "\n";
}

inline Graph read_edge_list(std::istream& is) {
    std::string line;
    int n = -1;
    std::vector<VertexPair> edges;
    while (std::getline(is, line)) {
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        std::istringstream ls(line.substr(first));
        if (n < 0) {
            std::string tag;
            ls >> tag >> n;
            if (tag != "n" || ls.fail() || n < 0)
                fail(ErrorCode::ParseError, "expected header 'n <count>', got: " + line);
            continue;
        }
        int u, v;
        ls >> u >> v;
        if (ls.fail()) fail(ErrorCode::ParseError, "expected 'u v', got: " + line);
        edges.push_back({u, v});
    }
    if (n < 0) fail(ErrorCode::ParseError, "missing 'n <count>' header");
    return Graph(n, std::move(edges));
}

}  // namespace hamgen
