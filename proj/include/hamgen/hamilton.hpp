#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamgen/errors.hpp"
#include "hamgen/gf2.hpp"
#include "hamgen/graph.hpp"
#include "hamgen/rat.hpp"
#include "hamgen/structures.hpp"

namespace hamgen {

struct SearchBudget {
    std::optional<std::uint64_t> max_cycles;
    std::optional<std::uint64_t> max_nodes;

    static SearchBudget unlimited() { return {}; }

    // Default node cap, overridable through HAMGEN_BUDGET_NODES.
    static SearchBudget defaults() {
        SearchBudget b;
        b.max_nodes = 1ULL << 28;
        if (const char* env = std::getenv("HAMGEN_BUDGET_NODES")) {
            char* end = nullptr;
            std::uint64_t v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) b.max_nodes = v;
        }
        return b;
    }
};

// Capped results are explicitly inconclusive; every caller propagates them
// rather than silently truncating.
enum class SearchOutcome { Exhausted, Capped };

struct HamiltonCycle {
    std::vector<int> order;  // starts at the smallest vertex, second < last

    static HamiltonCycle canonicalize(std::vector<int> cyc) {
        std::size_t n = cyc.size();
        std::size_t at = 0;
        for (std::size_t i = 1; i < n; ++i)
            if (cyc[i] < cyc[at]) at = i;
        std::rotate(cyc.begin(), cyc.begin() + static_cast<std::ptrdiff_t>(at), cyc.end());
        if (n > 2 && cyc[1] > cyc[n - 1]) std::reverse(cyc.begin() + 1, cyc.end());
        return HamiltonCycle{std::move(cyc)};
    }

    std::vector<VertexPair> edges() const {
        std::vector<VertexPair> out;
        for (std::size_t i = 0; i < order.size(); ++i) {
            int a = order[i], b = order[(i + 1) % order.size()];
            out.push_back({std::min(a, b), std::max(a, b)});
        }
        return out;
    }

    EdgeVector edge_vector(const Graph& g) const { return EdgeVector::from_edges(g, edges()); }

    bool contains_edge(int u, int v) const {
        std::size_t n = order.size();
        for (std::size_t i = 0; i < n; ++i) {
            int a = order[i], b = order[(i + 1) % n];
            if ((a == u && b == v) || (a == v && b == u)) return true;
        }
        return false;
    }

    bool operator==(const HamiltonCycle&) const = default;
};

namespace detail {

// Backtracking Hamilton cycle enumeration. Paths grow from vertex 0 toward
// the lowest-index unvisited neighbor first; a cycle is emitted only in the
// orientation with order[1] < order[n-1], so each cycle appears exactly once
// and already in canonical form. Forced edges (when present) are enforced by
// degree propagation: an endpoint with one outstanding forced edge must
// follow it, with two it is dead.
class CycleSearch {
public:
    CycleSearch(const Graph& g, const SearchBudget& budget,
                std::function<bool(const HamiltonCycle&)> visit)
        : g_(g), n_(g.vertex_count()), budget_(budget), visit_(std::move(visit)) {
        forced_.fill(0);
    }

    void add_forced(int u, int v) {
        forced_[u] |= 1ULL << v;
        forced_[v] |= 1ULL << u;
        has_forced_ = true;
    }

    SearchOutcome run() {
        if (n_ < 3) fail(ErrorCode::TooSmall, "Hamilton cycles need n >= 3");
        for (int v = 0; v < n_ && has_forced_; ++v)
            if (std::popcount(forced_[v]) > 2) return SearchOutcome::Exhausted;  // no cycle fits
        order_.assign(static_cast<std::size_t>(n_), -1);
        order_[0] = 0;
        visited_ = 1ULL;
        extend(0, 1);
        return capped_ ? SearchOutcome::Capped : SearchOutcome::Exhausted;
    }

    std::uint64_t nodes() const { return nodes_; }
    std::uint64_t cycles() const { return cycles_; }

private:
    bool budget_node() {
        ++nodes_;
        if (budget_.max_nodes && nodes_ > *budget_.max_nodes) {
            capped_ = true;
            return false;
        }
        return true;
    }

    bool viable(int endpoint) {
        std::uint64_t unvis = ~visited_ & full_mask();
        if (!unvis) return true;
        std::uint64_t hubs = (1ULL << endpoint) | 1ULL;  // current endpoint and vertex 0
        std::uint64_t rest = unvis;
        while (rest) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t avail = g_.neighbors(w) & ((unvis & ~(1ULL << w)) | hubs);
            if (std::popcount(avail) < 2) return false;
        }
        // The unvisited region together with the endpoint must stay connected.
        std::uint64_t region = unvis | (1ULL << endpoint);
        std::uint64_t reach = 1ULL << endpoint;
        while (true) {
            std::uint64_t grow = reach;
            std::uint64_t f = reach;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                grow |= g_.neighbors(u) & region;
            }
            if (grow == reach) break;
            reach = grow;
        }
        return (reach & unvis) == unvis;
    }

    void extend(int u, int pos) {
        if (capped_ || !budget_node()) return;
        if (pos == n_) {
            if (!g_.has_edge(u, 0)) return;
            if (order_[1] > order_[static_cast<std::size_t>(n_ - 1)]) return;
            if (has_forced_) {
                std::uint64_t prev_bit = 1ULL << order_[static_cast<std::size_t>(pos - 2)];
                if (forced_[u] & ~(prev_bit | 1ULL)) return;             // closing vertex
                std::uint64_t first_bit = 1ULL << order_[1];
                if (forced_[0] & ~(first_bit | (1ULL << u))) return;     // start vertex
            }
            ++cycles_;
            if (!visit_(HamiltonCycle{order_})) capped_ = true;
            if (budget_.max_cycles && cycles_ >= *budget_.max_cycles) capped_ = true;
            return;
        }
        std::uint64_t cands = g_.neighbors(u) & ~visited_;
        if (has_forced_) {
            std::uint64_t outstanding = forced_[u];
            if (pos >= 2) outstanding &= ~(1ULL << order_[static_cast<std::size_t>(pos - 2)]);
            if (u == 0) {
                if (std::popcount(outstanding) == 2) cands &= outstanding;
            } else {
                if (std::popcount(outstanding) >= 2) return;
                if (outstanding) cands &= outstanding;
            }
        }
        if (!cands || !viable(u)) return;
        while (cands) {
            int w = std::countr_zero(cands);
            cands &= cands - 1;
            order_[static_cast<std::size_t>(pos)] = w;
            visited_ |= 1ULL << w;
            extend(w, pos + 1);
            visited_ &= ~(1ULL << w);
            if (capped_) return;
        }
    }

    std::uint64_t full_mask() const { return n_ >= 64 ? ~0ULL : (1ULL << n_) - 1; }

    const Graph& g_;
    int n_;
    SearchBudget budget_;
    std::function<bool(const HamiltonCycle&)> visit_;
    std::array<std::uint64_t, kMaxVertices> forced_{};
    bool has_forced_ = false;
    std::vector<int> order_;
    std::uint64_t visited_ = 0;
    std::uint64_t nodes_ = 0;
    std::uint64_t cycles_ = 0;
    bool capped_ = false;
};

// Complete search for one Hamilton path between fixed endpoints.
class PathSearch {
public:
    PathSearch(const Graph& g, int from, int to) : g_(g), n_(g.vertex_count()), from_(from), to_(to) {}

    std::optional<std::vector<int>> run() {
        order_.assign(static_cast<std::size_t>(n_), -1);
        order_[0] = from_;
        visited_ = 1ULL << from_;
        found_ = false;
        extend(from_, 1);
        if (found_) return order_;
        return std::nullopt;
    }

private:
    bool viable(int endpoint) {
        std::uint64_t unvis = ~visited_ & full_mask();
        std::uint64_t hub = 1ULL << endpoint;
        std::uint64_t rest = unvis;
        while (rest) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t avail = g_.neighbors(w) & ((unvis & ~(1ULL << w)) | hub);
            int need = (w == to_) ? 1 : 2;
            if (std::popcount(avail) < need) return false;
        }
        std::uint64_t region = unvis | hub;
        std::uint64_t reach = hub;
        while (true) {
            std::uint64_t grow = reach;
            std::uint64_t f = reach;
            while (f) {
                int u = std::countr_zero(f);
                f &= f - 1;
                grow |= g_.neighbors(u) & region;
            }
            if (grow == reach) break;
            reach = grow;
        }
        return (reach & unvis) == unvis;
    }

    void extend(int u, int pos) {
        if (found_) return;
        if (pos == n_) {
            found_ = (u == to_);
            return;
        }
        std::uint64_t cands = g_.neighbors(u) & ~visited_;
        if (pos == n_ - 1)
            cands &= 1ULL << to_;
        else
            cands &= ~(1ULL << to_);
        if (!cands || !viable(u)) return;
        while (cands && !found_) {
            int w = std::countr_zero(cands);
            cands &= cands - 1;
            order_[static_cast<std::size_t>(pos)] = w;
            visited_ |= 1ULL << w;
            extend(w, pos + 1);
            visited_ &= ~(1ULL << w);
        }
    }

    std::uint64_t full_mask() const { return n_ >= 64 ? ~0ULL : (1ULL << n_) - 1; }

    const Graph& g_;
    int n_;
    int from_, to_;
    std::vector<int> order_;
    std::uint64_t visited_ = 0;
    bool found_ = false;
};

}  // namespace detail

// Visits every Hamilton cycle exactly once, in canonical form, in a fixed
// deterministic order. The visitor may return false to stop early; that and
// a tripped budget both yield Capped.
inline SearchOutcome enumerate_hamilton_cycles(const Graph& g, const SearchBudget& budget,
                                               const std::function<bool(const HamiltonCycle&)>& visit) {
    detail::CycleSearch s(g, budget, visit);
    return s.run();
}

// First Hamilton cycle containing every edge of F, or nullopt after a
// complete search. F must be a UDP validated against this graph.
inline std::optional<HamiltonCycle> hamilton_cycle_through(const Graph& g, const LinearForest& f) {
    for (auto [u, v] : f.edges())
        if (!g.has_edge(u, v)) fail(ErrorCode::NotUDP, "forced edge not in graph");
    std::optional<HamiltonCycle> found;
    detail::CycleSearch s(g, SearchBudget::unlimited(), [&found](const HamiltonCycle& c) {
        found = c;
        return false;
    });
    for (auto [u, v] : f.edges()) s.add_forced(u, v);
    s.run();
    return found;
}

inline std::optional<std::vector<int>> hamilton_path_between(const Graph& g, int u, int v) {
    if (u == v) fail(ErrorCode::SameVertex, "path endpoints coincide");
    if (u < 0 || v < 0 || u >= g.vertex_count() || v >= g.vertex_count())
        fail(ErrorCode::OutOfRange, "path endpoint outside graph");
    detail::PathSearch s(g, u, v);
    return s.run();
}

struct HamiltonConnectivity {
    bool connected = false;
    std::optional<VertexPair> failing_pair;  // lexicographically first
};

inline HamiltonConnectivity is_hamilton_connected(const Graph& g) {
    if (g.vertex_count() < 2) fail(ErrorCode::TooSmall, "needs n >= 2");
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v)
            if (!hamilton_path_between(g, u, v)) return {false, VertexPair{u, v}};
    return {true, std::nullopt};
}

// Path from u to v whose interior vertex set equals `interior` exactly
// (complete search over the induced subgraph), or nullopt.
inline std::optional<std::vector<int>> constrained_hamilton_path(const Graph& g, int u, int v,
                                                                 VertexSet interior) {
    if (interior.contains(u) || interior.contains(v))
        fail(ErrorCode::EndpointInInterior, "endpoint listed as interior");
    if (u == v) fail(ErrorCode::SameVertex, "path endpoints coincide");
    VertexSet keep = interior;
    keep.add(u);
    keep.add(v);
    InducedGraph sub = induced(g, keep);
    auto where = [&sub](int orig) {
        return static_cast<int>(std::lower_bound(sub.vertices.begin(), sub.vertices.end(), orig) -
                                sub.vertices.begin());
    };
    if (sub.graph.vertex_count() == 1) return std::nullopt;  // unreachable given u != v
    auto path = hamilton_path_between(sub.graph, where(u), where(v));
    if (!path) return std::nullopt;
    std::vector<int> out;
    for (int w : *path) out.push_back(sub.vertices[static_cast<std::size_t>(w)]);
    return out;
}

// delta >= (n+k)/2, compared exactly.
inline bool posa_guarantees(int n, int k, int min_degree) {
    if (k <= 1) fail(ErrorCode::KTooSmall, "needs k > 1");
    return 2 * min_degree >= n + k;
}

// Minimum d(x)+d(y) over non-adjacent cross pairs; nullopt means the
// bipartite graph is complete (sigma = infinity).
inline std::optional<int> sigma11(const Graph& g, VertexSet x, VertexSet y) {
    if (!(x & y).empty() || (x | y) != g.all_vertices())
        fail(ErrorCode::BadPartition, "X,Y must partition the vertex set");
    for (auto [u, v] : g.edges()) {
        bool cross = (x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u));
        if (!cross) fail(ErrorCode::BadPartition, "graph has an edge inside a part");
    }
    std::optional<int> best;
    for (int u : x.to_vector())
        for (int v : y.to_vector())
            if (!g.has_edge(u, v)) {
                int s = g.degree(u) + g.degree(v);
                if (!best || s < *best) best = s;
            }
    return best;
}

// Required sigma_{1,1} for a Hamilton M-cycle in a balanced bipartite graph
// with n vertices per side and a k-matching; ordered piecewise cases, first
// match wins.
inline Rat fuji_threshold(int n, int k) {
    if (k < 1 || k > n) fail(ErrorCode::KOutOfRange, "k must be within 1..n");
    if (k == n || k == n - 1 || k <= 4) return Rat(n + 2);
    if (3 * k >= 2 * n && k <= n - 2) return Rat(2 * n - k);
    if (k >= 5 && 3 * k <= 2 * n - 1) return Rat(2 * n + k, 2);  // n + k/2
    fail(ErrorCode::KOutOfRange, "no threshold branch applies");
}

// The balance condition for prescribed pairs in a bipartite graph:
// |X| - |S ∩ X|/2 = |Y| - |S ∩ Y|/2 where S is the set of pair endpoints.
inline bool m_cycle_balance_condition(VertexSet x, VertexSet y, const std::vector<VertexPair>& pairs) {
    VertexSet s;
    for (auto [u, v] : pairs) {
        s.add(u);
        s.add(v);
    }
    return 2 * x.count() - (s & x).count() == 2 * y.count() - (s & y).count();
}

// Hamilton cycle through every edge of the matching M in a balanced
// bipartite graph, or nullopt after a complete search.
inline std::optional<HamiltonCycle> hamilton_m_cycle(const Graph& g, VertexSet x, VertexSet y,
                                                     const std::vector<VertexPair>& m) {
    if (!(x & y).empty() || (x | y) != g.all_vertices())
        fail(ErrorCode::BadPartition, "X,Y must partition the vertex set");
    for (auto [u, v] : g.edges()) {
        bool cross = (x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u));
        if (!cross) fail(ErrorCode::BadPartition, "graph has an edge inside a part");
    }
    if (x.count() != y.count()) fail(ErrorCode::NotBalanced, "sides differ in size");
    VertexSet touched;
    for (auto [u, v] : m) {
        if (!g.has_edge(u, v)) fail(ErrorCode::NotMatching, "matching edge not in graph");
        if (touched.contains(u) || touched.contains(v)) fail(ErrorCode::NotMatching, "matching edges share a vertex");
        touched.add(u);
        touched.add(v);
    }
    std::optional<HamiltonCycle> found;
    detail::CycleSearch s(g, SearchBudget::unlimited(), [&found](const HamiltonCycle& c) {
        found = c;
        return false;
    });
    for (auto [u, v] : m) s.add_forced(u, v);
    s.run();
    return found;
}

}  // namespace hamgen
