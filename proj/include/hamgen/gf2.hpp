#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "hamgen/errors.hpp"
#include "hamgen/graph.hpp"

namespace hamgen {

// Element of the edge space F_2^m, indexed by a Graph's edge ordering.
class EdgeVector {
public:
    EdgeVector() : m_(0) {}
    explicit EdgeVector(int m) : m_(m), w_(static_cast<std::size_t>((m + 63) / 64), 0ULL) {}

    static EdgeVector from_edges(const Graph& g, const std::vector<VertexPair>& edges) {
        EdgeVector v(g.edge_count());
        for (auto [a, b] : edges) {
            int idx = g.edge_index(a, b);
            if (idx < 0)
                fail(ErrorCode::UnknownEdge,
                     "edge (" + std::to_string(a) + "," + std::to_string(b) + ") not in graph");
            v.set(idx);
        }
        return v;
    }

    // Indicator of a closed vertex walk; the walk must follow graph edges.
    static EdgeVector from_cycle(const Graph& g, const std::vector<int>& order) {
        std::vector<VertexPair> es;
        for (std::size_t i = 0; i < order.size(); ++i)
            es.push_back({order[i], order[(i + 1) % order.size()]});
        return from_edges(g, es);
    }

    int length() const { return m_; }
    bool test(int i) const { return (w_[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1ULL; }
    void set(int i) { w_[static_cast<std::size_t>(i) / 64] |= 1ULL << (i % 64); }
    void flip(int i) { w_[static_cast<std::size_t>(i) / 64] ^= 1ULL << (i % 64); }

    void xor_with(const EdgeVector& o) {
        for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
    }

    int popcount() const {
        int c = 0;
        for (auto w : w_) c += std::popcount(w);
        return c;
    }
    bool is_zero() const {
        for (auto w : w_)
            if (w) return false;
        return true;
    }
    int lowest_set() const {  // -1 if zero
        for (std::size_t i = 0; i < w_.size(); ++i)
            if (w_[i]) return static_cast<int>(i) * 64 + std::countr_zero(w_[i]);
        return -1;
    }

    bool dot(const EdgeVector& o) const {  // GF(2) inner product
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1;
    }

    bool operator==(const EdgeVector&) const = default;

    // Support as sorted edge pairs of the owning graph (for reports).
    std::vector<VertexPair> support_edges(const Graph& g) const {
        std::vector<VertexPair> out;
        for (int i = 0; i < m_; ++i)
            if (test(i)) out.push_back(g.edge(i));
        return out;
    }

    int popcount_and(const EdgeVector& o) const {
        int c = 0;
        for (std::size_t i = 0; i < w_.size(); ++i) c += std::popcount(w_[i] & o.w_[i]);
        return c;
    }

private:
    int m_;
    std::vector<std::uint64_t> w_;
};

// |support(v) ∩ support(w)| mod 2.
inline int intersection_parity(const EdgeVector& v, const EdgeVector& w) {
    if (v.length() != w.length())
        fail(ErrorCode::LengthMismatch, "vectors of length " + std::to_string(v.length()) + " and " +
                                            std::to_string(w.length()));
    return v.dot(w) ? 1 : 0;
}

// Row-reduced basis over GF(2). Rows are kept in fully reduced echelon form
// with pivot = lowest-index nonzero coordinate, sorted by pivot, so identical
// insert sequences always produce identical rows.
class Gf2Basis {
public:
    Gf2Basis() : m_(0) {}
    explicit Gf2Basis(int m) : m_(m) {}

    int length() const { return m_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<EdgeVector>& rows() const { return rows_; }
    const std::vector<int>& pivots() const { return pivots_; }

    EdgeVector reduce(EdgeVector v) const {
        check_length(v);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (v.test(pivots_[i])) v.xor_with(rows_[i]);
        return v;
    }

    bool in_span(const EdgeVector& v) const { return reduce(v).is_zero(); }

    // Returns true iff the vector grew the span.
    bool insert(const EdgeVector& v) {
        EdgeVector r = reduce(v);
        int p = r.lowest_set();
        if (p < 0) return false;
        for (auto& row : rows_)
            if (row.test(p)) row.xor_with(r);
        auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p);
        std::size_t at = static_cast<std::size_t>(pos - pivots_.begin());
        pivots_.insert(pos, p);
        rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(at), std::move(r));
        return true;
    }

private:
    void check_length(const EdgeVector& v) const {
        if (v.length() != m_)
            fail(ErrorCode::LengthMismatch,
                 "vector length " + std::to_string(v.length()) + " vs basis length " + std::to_string(m_));
    }

    int m_;
    std::vector<EdgeVector> rows_;
    std::vector<int> pivots_;
};

// Functional insert: the input basis is untouched.
inline std::pair<Gf2Basis, bool> insert_and_rank(const Gf2Basis& b, const EdgeVector& v) {
    Gf2Basis out = b;
    bool grew = out.insert(v);
    return {std::move(out), grew};
}

// Fundamental cycles of a BFS spanning forest rooted at the lowest vertex of
// each component, one per non-tree edge, ordered by that edge's index.
inline std::vector<EdgeVector> fundamental_cycles(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<bool> tree_edge(static_cast<std::size_t>(g.edge_count()), false);
    for (int r = 0; r < n; ++r) {
        if (seen[r]) continue;
        seen[r] = true;
        depth[r] = 0;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : VertexSet(g.neighbors(u)).to_vector()) {
                if (seen[v]) continue;
                seen[v] = true;
                parent[v] = u;
                depth[v] = depth[u] + 1;
                tree_edge[static_cast<std::size_t>(g.edge_index(u, v))] = true;
                q.push(v);
            }
        }
    }
    std::vector<EdgeVector> out;
    for (int i = 0; i < g.edge_count(); ++i) {
        if (tree_edge[static_cast<std::size_t>(i)]) continue;
        auto [u, v] = g.edge(i);
        EdgeVector c(g.edge_count());
        c.set(i);
        int a = u, b = v;
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            c.flip(g.edge_index(a, parent[a]));
            a = parent[a];
        }
        out.push_back(std::move(c));
    }
    return out;
}

// Basis of the cycle space C(G); rank is m - n + c.
inline Gf2Basis cycle_space_basis(const Graph& g) {
    Gf2Basis b(g.edge_count());
    for (const auto& c : fundamental_cycles(g)) b.insert(c);
    return b;
}

// Basis of {w : w·v = 0 for all v in span(B)}; rank m - rank(B).
inline Gf2Basis orthogonal_complement(const Gf2Basis& b, int m) {
    if (b.length() != m && b.rank() > 0)
        fail(ErrorCode::LengthMismatch, "basis length does not match requested length");
    std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
    for (int p : b.pivots()) is_pivot[static_cast<std::size_t>(p)] = true;
    Gf2Basis out(m);
    for (int f = 0; f < m; ++f) {
        if (is_pivot[static_cast<std::size_t>(f)]) continue;
        EdgeVector w(m);
        w.set(f);
        for (std::size_t i = 0; i < b.rows().size(); ++i)
            if (b.rows()[i].test(f)) w.flip(b.pivots()[i]);
        out.insert(w);
    }
    return out;
}

}  // namespace hamgen
