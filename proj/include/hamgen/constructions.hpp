#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "hamgen/errors.hpp"
#include "hamgen/graph.hpp"
#include "hamgen/hamilton.hpp"
#include "hamgen/rng.hpp"

namespace hamgen {

// The three tight families on n = 4k+1 vertices. Vertex layout is fixed so
// reports stay stable: X = {0..2k}, Y = {2k+1..4k}, a_i = i-1, b_i = 2k+i.
struct LabeledConstruction {
    Graph graph;
    VertexSet x, y;
    std::array<int, 3> a{};
    std::array<int, 3> b{};
    int k = 0;
    int variant = 0;

    int n() const { return 4 * k + 1; }
};

// variant 1: complete bipartite between X and Y plus the edges a1a2, b1b2.
// variant 2: two overlapping cliques K[X ∪ {b1}] and K[Y ∪ {a1}] minus a1b1.
// variant 3: cliques on X and on Y joined by the matching a1b1, a2b2, a3b3.
inline LabeledConstruction construction_a(int k, int variant) {
    if (k < 2) fail(ErrorCode::KTooSmall, "needs k >= 2");
    if (variant < 1 || variant > 3) fail(ErrorCode::OutOfRange, "variant must be 1, 2 or 3");
    LabeledConstruction c;
    c.k = k;
    c.variant = variant;
    int n = 4 * k + 1;
    c.x = VertexSet::range(0, 2 * k + 1);
    c.y = VertexSet::range(2 * k + 1, n);
    for (int i = 0; i < 3; ++i) {
        c.a[static_cast<std::size_t>(i)] = i;
        c.b[static_cast<std::size_t>(i)] = 2 * k + 1 + i;
    }
    std::vector<VertexPair> edges;
    auto clique = [&edges](const std::vector<int>& vs) {
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j) edges.push_back({vs[i], vs[j]});
    };
    auto xs = c.x.to_vector();
    auto ys = c.y.to_vector();
    int a1 = c.a[0], a2 = c.a[1], b1 = c.b[0], b2 = c.b[1];
    switch (variant) {
        case 1: {
            for (int u : xs)
                for (int v : ys) edges.push_back({u, v});
            edges.push_back({a1, a2});
            edges.push_back({b1, b2});
            break;
        }
        case 2: {
            std::vector<int> c1 = xs;
            c1.push_back(b1);
            std::vector<int> c2 = ys;
            c2.push_back(a1);
            clique(c1);
            clique(c2);
            std::erase_if(edges, [&](VertexPair e) {
                return e == VertexPair{std::min(a1, b1), std::max(a1, b1)};
            });
            break;
        }
        case 3: {
            clique(xs);
            clique(ys);
            for (int i = 0; i < 3; ++i) edges.push_back({c.a[static_cast<std::size_t>(i)], c.b[static_cast<std::size_t>(i)]});
            break;
        }
    }
    c.graph = Graph(n, std::move(edges));
    return c;
}

inline Graph complete_graph(int n) {
    if (n < 1) fail(ErrorCode::OutOfRange, "needs n >= 1");
    std::vector<VertexPair> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, std::move(edges));
}

inline Graph cycle_graph(int n) {
    if (n < 3) fail(ErrorCode::TooSmall, "needs n >= 3");
    std::vector<VertexPair> edges;
    for (int v = 0; v < n; ++v) edges.push_back({v, (v + 1) % n});
    return Graph(n, std::move(edges));
}

inline Graph complete_bipartite(int a, int b) {
    std::vector<VertexPair> edges;
    for (int u = 0; u < a; ++u)
        for (int v = a; v < a + b; ++v) edges.push_back({u, v});
    return Graph(a + b, std::move(edges));
}

// Seeded rejection sampler for graphs with minimum degree >= (n-1)/2 that
// are Hamilton-connected: each attempt draws all pairs independently with
// probability p_ppm/1e6 and both acceptance predicates are machine-checked.
inline std::optional<Graph> random_dirac_hc_graph(int n, std::uint64_t seed, int attempts_cap = 200,
                                                  std::uint64_t p_ppm = 550000) {
    if (n % 2 == 0) fail(ErrorCode::EvenN, "sampler needs odd n");
    if (n < 5) fail(ErrorCode::TooSmall, "sampler needs n >= 5");
    SplitMix64 rng(seed);
    for (int attempt = 0; attempt < attempts_cap; ++attempt) {
        std::vector<VertexPair> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.chance_ppm(p_ppm)) edges.push_back({u, v});
        Graph g(n, std::move(edges));
        if (2 * g.min_degree() < n - 1) continue;
        if (!is_hamilton_connected(g).connected) continue;
        return g;
    }
    return std::nullopt;
}

}  // namespace hamgen
