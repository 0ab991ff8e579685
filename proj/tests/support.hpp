#pragma once

#include <vector>

#include "hamgen/graph.hpp"
#include "hamgen/rng.hpp"

namespace testsupport {

inline hamgen::Graph random_graph(int n, std::uint64_t ppm, hamgen::SplitMix64& rng) {
    std::vector<hamgen::VertexPair> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.chance_ppm(ppm)) es.push_back({u, v});
    return hamgen::Graph(n, std::move(es));
}

// Random graph with minimum degree kept >= floor: start complete, delete
// random edges while the constraint allows.
inline hamgen::Graph random_min_degree_graph(int n, int floor, hamgen::SplitMix64& rng) {
    std::vector<hamgen::VertexPair> es;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) es.push_back({u, v});
    std::vector<int> deg(static_cast<std::size_t>(n), n - 1);
    for (std::size_t i = es.size(); i > 1; --i) std::swap(es[i - 1], es[rng.below(i)]);
    std::vector<hamgen::VertexPair> kept;
    for (auto [u, v] : es) {
        if (deg[u] > floor && deg[v] > floor && rng.chance_ppm(500000)) {
            --deg[u];
            --deg[v];
        } else {
            kept.push_back({u, v});
        }
    }
    return hamgen::Graph(n, std::move(kept));
}

}  // namespace testsupport
