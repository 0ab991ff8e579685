#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "hamgen/errors.hpp"
#include "hamgen/graph.hpp"

namespace hamgen {

// Union of vertex-disjoint paths. Single-vertex paths are representable
// (several constructions place an isolated touch vertex as a degenerate
// path); they contribute 0 edges and 1 to the path count, and the identity
// |End| + |In| = |In| + 2|P| only applies when none are degenerate.
struct LinearForest {
    std::vector<std::vector<int>> paths;
    VertexSet end_vertices;
    VertexSet in_vertices;
    int edge_total = 0;
    int degenerate_count = 0;  // single-vertex paths

    int path_count() const { return static_cast<int>(paths.size()); }
    int vertex_total() const { return end_vertices.count() + in_vertices.count(); }

    std::vector<VertexPair> edges() const {
        std::vector<VertexPair> out;
        for (const auto& p : paths)
            for (std::size_t i = 0; i + 1 < p.size(); ++i)
                out.push_back({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});
        return out;
    }
};

inline LinearForest validate_udp(const Graph& g, const std::vector<std::vector<int>>& paths) {
    LinearForest f;
    f.paths = paths;
    VertexSet used;
    for (const auto& p : paths) {
        if (p.empty()) fail(ErrorCode::DegreeViolation, "empty path sequence");
        for (std::size_t i = 0; i < p.size(); ++i) {
            int v = p[i];
            if (v < 0 || v >= g.vertex_count()) fail(ErrorCode::OutOfRange, "path vertex " + std::to_string(v));
            if (used.contains(v)) fail(ErrorCode::NotDisjoint, "vertex " + std::to_string(v) + " reused");
            used.add(v);
            if (i + 1 < p.size()) {
                if (!g.has_edge(p[i], p[i + 1]))
                    fail(ErrorCode::NonEdge,
                         "(" + std::to_string(p[i]) + "," + std::to_string(p[i + 1]) + ") not an edge");
                ++f.edge_total;
            }
        }
        if (p.size() == 1) {
            ++f.degenerate_count;
            f.end_vertices.add(p.front());
        } else {
            f.end_vertices.add(p.front());
            f.end_vertices.add(p.back());
            for (std::size_t i = 1; i + 1 < p.size(); ++i) f.in_vertices.add(p[i]);
        }
    }
    // |V| = |E| + |P| always; the End/In identity needs proper paths.
    if (f.vertex_total() != f.edge_total + f.path_count())
        fail(ErrorCode::NotUDP, "path bookkeeping broken");
    if (f.degenerate_count == 0 && f.end_vertices.count() != 2 * f.path_count())
        fail(ErrorCode::NotUDP, "endpoint identity broken");
    return f;
}

namespace detail {

struct Dsu {
    std::array<int, kMaxVertices> parent;
    void init(int n) { std::iota(parent.begin(), parent.begin() + n, 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

struct ForestSearch {
    const Graph* g;
    std::vector<int> order;  // candidate edge indices
    std::array<int, kMaxVertices> deg{};
    Dsu dsu;
    std::vector<int> chosen, best_set;
    int best = 0;

    bool usable(int ei) {
        auto [u, v] = g->edge(ei);
        return deg[u] < 2 && deg[v] < 2 && dsu.find(u) != dsu.find(v);
    }

    void run(std::size_t idx) {
        if (static_cast<int>(chosen.size()) > best) {
            best = static_cast<int>(chosen.size());
            best_set = chosen;
        }
        if (idx >= order.size()) return;
        int avail = 0;
        for (std::size_t i = idx; i < order.size(); ++i)
            if (usable(order[i])) ++avail;
        if (static_cast<int>(chosen.size()) + avail <= best) return;
        int ei = order[idx];
        if (usable(ei)) {
            auto [u, v] = g->edge(ei);
            Dsu saved = dsu;
            dsu.unite(u, v);
            ++deg[u];
            ++deg[v];
            chosen.push_back(ei);
            run(idx + 1);
            chosen.pop_back();
            --deg[u];
            --deg[v];
            dsu = saved;
        }
        run(idx + 1);
    }
};

}  // namespace detail

// Maximum number of edges over all UDPs of G, with an optimal witness.
// Exact branch-and-bound over edges in degree-sum descending order.
inline std::pair<int, LinearForest> max_linear_forest(const Graph& g) {
    detail::ForestSearch s;
    s.g = &g;
    s.order.resize(static_cast<std::size_t>(g.edge_count()));
    std::iota(s.order.begin(), s.order.end(), 0);
    std::stable_sort(s.order.begin(), s.order.end(), [&g](int a, int b) {
        auto [au, av] = g.edge(a);
        auto [bu, bv] = g.edge(b);
        return g.degree(au) + g.degree(av) > g.degree(bu) + g.degree(bv);
    });
    s.dsu.init(g.vertex_count());
    s.run(0);

    // Decompose the chosen edge set into path sequences.
    std::array<std::vector<int>, kMaxVertices> nbr;
    VertexSet covered;
    for (int ei : s.best_set) {
        auto [u, v] = g.edge(ei);
        nbr[u].push_back(v);
        nbr[v].push_back(u);
        covered.add(u);
        covered.add(v);
    }
    std::vector<std::vector<int>> paths;
    VertexSet done;
    for (int v : covered.to_vector()) {
        if (done.contains(v) || nbr[v].size() != 1) continue;
        std::vector<int> p{v};
        done.add(v);
        int prev = -1, cur = v;
        while (true) {
            int nxt = -1;
            for (int w : nbr[cur])
                if (w != prev) nxt = w;
            if (nxt < 0) break;
            p.push_back(nxt);
            done.add(nxt);
            prev = cur;
            cur = nxt;
        }
        paths.push_back(std::move(p));
    }
    return {s.best, validate_udp(g, paths)};
}

struct MatchingResult {
    std::vector<VertexPair> matching;
    VertexSet cover;

    int size() const { return static_cast<int>(matching.size()); }
};

// Maximum matching of the bipartite graph between X and Y plus a minimum
// vertex cover of the same size, extracted from the final alternating
// reachability partition.
inline MatchingResult bipartite_matching(const Graph& g, VertexSet x, VertexSet y) {
    if (!(x & y).empty()) fail(ErrorCode::Overlap, "sides overlap");
    for (auto [u, v] : g.edges()) {
        bool cross = (x.contains(u) && y.contains(v)) || (x.contains(v) && y.contains(u));
        if (!cross)
            fail(ErrorCode::NotBipartiteInput,
                 "edge (" + std::to_string(u) + "," + std::to_string(v) + ") does not cross X-Y");
    }
    std::array<int, kMaxVertices> match{};
    match.fill(-1);
    auto xs = x.to_vector();
    std::function<bool(int, VertexSet&)> augment = [&](int u, VertexSet& visited) {
        for (int v : VertexSet(g.neighbors(u) & y.bits).to_vector()) {
            if (visited.contains(v)) continue;
            visited.add(v);
            if (match[v] < 0 || augment(match[v], visited)) {
                match[v] = u;
                match[u] = v;
                return true;
            }
        }
        return false;
    };
    for (int u : xs) {
        VertexSet visited;
        augment(u, visited);
    }

    MatchingResult out;
    for (int v : y.to_vector())
        if (match[v] >= 0) out.matching.push_back({std::min(match[v], v), std::max(match[v], v)});
    std::sort(out.matching.begin(), out.matching.end());

    // Koenig: alternate from unmatched X vertices; cover = (X \ Z) ∪ (Y ∩ Z).
    VertexSet z;
    std::vector<int> queue;
    for (int u : xs)
        if (match[u] < 0) {
            z.add(u);
            queue.push_back(u);
        }
    while (!queue.empty()) {
        int u = queue.back();
        queue.pop_back();
        for (int v : VertexSet(g.neighbors(u) & y.bits).to_vector()) {
            if (z.contains(v)) continue;
            z.add(v);
            if (match[v] >= 0 && !z.contains(match[v])) {
                z.add(match[v]);
                queue.push_back(match[v]);
            }
        }
    }
    out.cover = x.minus(z) | (y & z);
    return out;
}

namespace detail {

// Shortest path between u and v inside `allowed` (which must contain both);
// ties broken by lowest-index parent. Returns the vertex sequence or nullopt.
inline std::optional<std::vector<int>> bfs_path(const Graph& g, int u, int v, VertexSet allowed) {
    std::array<int, kMaxVertices> parent{};
    parent.fill(-2);
    parent[u] = -1;
    std::vector<int> frontier{u};
    while (!frontier.empty() && parent[v] == -2) {
        std::vector<int> next;
        for (int a : frontier) {
            for (int b : VertexSet(g.neighbors(a) & allowed.bits).to_vector()) {
                if (parent[b] != -2) continue;
                parent[b] = a;
                next.push_back(b);
            }
        }
        frontier = std::move(next);
    }
    if (parent[v] == -2) return std::nullopt;
    std::vector<int> path;
    for (int c = v; c != -1; c = parent[c]) path.push_back(c);
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace detail

struct MdConnectivity {
    bool ok = false;
    // On failure: the deleted set and a vertex pair left disconnected or too far.
    std::optional<VertexSet> bad_deletion;
    std::optional<VertexPair> bad_pair;
};

// Exhaustive check that deleting any subset of at most m vertices leaves a
// connected graph of diameter at most d. Refuses when the subset count
// exceeds `subset_limit`.
inline MdConnectivity is_md_connected(const Graph& g, int m, int d, std::uint64_t subset_limit = 1ULL << 20) {
    int n = g.vertex_count();
    if (m >= n) fail(ErrorCode::OutOfRange, "m must be smaller than the vertex count");
    std::uint64_t total = 0;
    {
        // sum_{i<=m} C(n,i)
        std::uint64_t binom = 1;
        for (int i = 0; i <= m; ++i) {
            total += binom;
            binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
        }
    }
    if (total > subset_limit)
        fail(ErrorCode::BudgetExceeded,
             "subset count " + std::to_string(total) + " exceeds limit " + std::to_string(subset_limit));

    auto check_remaining = [&](VertexSet removed) -> std::optional<VertexPair> {
        VertexSet rest = g.all_vertices().minus(removed);
        for (int v : rest.to_vector()) {
            std::uint64_t reach = 1ULL << v;
            for (int step = 0; step < d; ++step) {
                std::uint64_t grow = reach;
                std::uint64_t f = reach;
                while (f) {
                    int u = std::countr_zero(f);
                    f &= f - 1;
                    grow |= g.neighbors(u) & rest.bits;
                }
                if (grow == reach) break;
                reach = grow;
            }
            if (reach != rest.bits) {
                int missed = std::countr_zero(rest.bits & ~reach);
                return VertexPair{v, missed};
            }
        }
        return std::nullopt;
    };

    // Size-ascending, lexicographic subset enumeration.
    std::vector<int> pick;
    std::function<std::optional<MdConnectivity>(int, int)> rec = [&](int start, int remaining) -> std::optional<MdConnectivity> {
        VertexSet removed;
        for (int v : pick) removed.add(v);
        if (auto bad = check_remaining(removed)) {
            MdConnectivity r;
            r.ok = false;
            r.bad_deletion = removed;
            r.bad_pair = bad;
            return r;
        }
        if (remaining == 0) return std::nullopt;
        for (int v = start; v < n; ++v) {
            pick.push_back(v);
            if (auto r = rec(v + 1, remaining - 1)) return r;
            pick.pop_back();
        }
        return std::nullopt;
    };
    if (auto r = rec(0, m)) return *r;
    MdConnectivity ok;
    ok.ok = true;
    return ok;
}

struct DisjointPathsResult {
    std::optional<std::vector<std::vector<int>>> paths;
    bool hypothesis_satisfied = true;  // l <= ceil(m/(d+1))
};

// Greedy routing: pair j+1 is routed in G minus the vertices already used
// and the endpoints of the pairs still to come, by shortest path of length
// at most d. When G is (m,d)-connected and l <= ceil(m/(d+1)) this cannot
// fail; a violated hypothesis is reported, not rejected.
inline DisjointPathsResult disjoint_paths(const Graph& g, const std::vector<VertexPair>& pairs, int m, int d) {
    DisjointPathsResult res;
    VertexSet endpoints;
    for (auto [u, v] : pairs) {
        if (u == v || endpoints.contains(u) || endpoints.contains(v))
            fail(ErrorCode::PairsOverlap, "pairs share a vertex");
        endpoints.add(u);
        endpoints.add(v);
    }
    int l = static_cast<int>(pairs.size());
    res.hypothesis_satisfied = static_cast<std::uint64_t>(l) <= static_cast<std::uint64_t>((m + d) / (d + 1));

    std::vector<std::vector<int>> built;
    for (int j = 0; j < l; ++j) {
        VertexSet blocked;
        for (const auto& p : built)
            for (int v : p) blocked.add(v);
        for (int k = j + 1; k < l; ++k) {
            blocked.add(pairs[k].first);
            blocked.add(pairs[k].second);
        }
        VertexSet allowed = g.all_vertices().minus(blocked);
        auto path = detail::bfs_path(g, pairs[j].first, pairs[j].second, allowed);
        if (!path || static_cast<int>(path->size()) - 1 > d) return res;  // paths stays empty
        built.push_back(std::move(*path));
    }
    res.paths = std::move(built);
    return res;
}

}  // namespace hamgen
