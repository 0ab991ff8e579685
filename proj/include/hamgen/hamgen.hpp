#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamgen/errors.hpp"
#include "hamgen/gf2.hpp"
#include "hamgen/graph.hpp"
#include "hamgen/hamilton.hpp"
#include "hamgen/structures.hpp"

namespace hamgen {

struct HamiltonSpan {
    Gf2Basis basis;
    SearchOutcome outcome = SearchOutcome::Exhausted;
    std::uint64_t cycles = 0;
    std::uint64_t nodes = 0;
};

// Streams Hamilton cycles into a GF(2) basis. Stops early once the rank
// reaches `stop_rank` (the span cannot grow past the cycle space anyway).
inline HamiltonSpan hamilton_span(const Graph& g, const SearchBudget& budget,
                                  std::optional<int> stop_rank = std::nullopt) {
    HamiltonSpan span;
    span.basis = Gf2Basis(g.edge_count());
    detail::CycleSearch s(g, budget, [&](const HamiltonCycle& c) {
        span.basis.insert(c.edge_vector(g));
        return !(stop_rank && span.basis.rank() >= *stop_rank);
    });
    span.outcome = s.run();
    span.cycles = s.cycles();
    span.nodes = s.nodes();
    return span;
}

struct HamGenStatus {
    enum class Kind { Generated, NotGenerated, Inconclusive };
    Kind kind = Kind::Inconclusive;
    int rank = 0;           // rank of the Hamilton-cycle span reached
    int dim = 0;            // dim C(G) = m - n + c
    std::uint64_t cycles_consumed = 0;
    std::uint64_t nodes = 0;
    SearchOutcome enumeration = SearchOutcome::Exhausted;
    std::optional<EdgeVector> witness;  // cycle outside the Hamilton span

    const char* kind_name() const {
        switch (kind) {
            case Kind::Generated: return "Generated";
            case Kind::NotGenerated: return "NotGenerated";
            case Kind::Inconclusive: return "Inconclusive";
        }
        return "?";
    }
};

// Decides C_n(G) = C(G). Generated is reported the moment the streamed
// Hamilton span saturates the cycle space; NotGenerated only after an
// exhausted enumeration, with a witness cycle outside the span; a tripped
// budget yields Inconclusive.
inline HamGenStatus is_hamilton_generated(const Graph& g, const SearchBudget& budget) {
    if (g.vertex_count() < 3) fail(ErrorCode::TooSmall, "needs n >= 3");
    HamGenStatus st;
    st.dim = g.edge_count() - g.vertex_count() + g.component_count();
    HamiltonSpan span = hamilton_span(g, budget, st.dim);
    st.rank = span.basis.rank();
    st.cycles_consumed = span.cycles;
    st.nodes = span.nodes;
    st.enumeration = span.outcome;
    if (st.rank == st.dim) {
        st.kind = HamGenStatus::Kind::Generated;
    } else if (span.outcome == SearchOutcome::Exhausted) {
        st.kind = HamGenStatus::Kind::NotGenerated;
        for (const auto& c : fundamental_cycles(g))
            if (!span.basis.in_span(c)) {
                st.witness = c;
                break;
            }
    } else {
        st.kind = HamGenStatus::Kind::Inconclusive;
    }
    return st;
}

struct Certificate {
    enum class Kind { ForbiddenEdge, ParityClass };
    Kind kind;
    // ForbiddenEdge: `edge` lies on a cycle but on no Hamilton cycle (proved
    // by complete search). ParityClass: `parity_set` meets every enumerated
    // Hamilton cycle an even number of times but `witness_cycle` an odd
    // number of times; sound outright when `enumeration_exhausted`.
    VertexPair edge{-1, -1};
    EdgeVector parity_set;
    EdgeVector witness_cycle;
    bool enumeration_exhausted = true;
    std::uint64_t cycles_checked = 0;
};

inline SearchBudget certificate_budget() {
    SearchBudget b = SearchBudget::defaults();
    b.max_cycles = 20000;
    return b;
}

// Cheap sound evidence that C_n != C. An empty list is not a proof of
// generation.
inline std::vector<Certificate> non_generation_certificates(const Graph& g,
                                                            const SearchBudget& budget = certificate_budget()) {
    std::vector<Certificate> certs;
    int m = g.edge_count();
    auto fc = fundamental_cycles(g);

    // An edge lies on some cycle iff some fundamental cycle contains it.
    EdgeVector on_cycle(m);
    for (const auto& c : fc)
        for (int i = 0; i < m; ++i)
            if (c.test(i)) on_cycle.set(i);

    if (g.vertex_count() >= 3) {
        for (int i = 0; i < m; ++i) {
            if (!on_cycle.test(i)) continue;  // bridges lie on no cycle
            auto [u, v] = g.edge(i);
            LinearForest f = validate_udp(g, {{u, v}});
            if (!hamilton_cycle_through(g, f)) {
                Certificate c;
                c.kind = Certificate::Kind::ForbiddenEdge;
                c.edge = {u, v};
                for (const auto& fcyc : fc)
                    if (fcyc.test(i)) {
                        c.witness_cycle = fcyc;
                        break;
                    }
                certs.push_back(std::move(c));
            }
        }

        int dim = m - g.vertex_count() + g.component_count();
        HamiltonSpan span = hamilton_span(g, budget, dim);
        Gf2Basis comp = orthogonal_complement(span.basis, m);
        for (const auto& w : comp.rows()) {
            for (const auto& cyc : fc) {
                if (cyc.dot(w)) {
                    Certificate c;
                    c.kind = Certificate::Kind::ParityClass;
                    c.parity_set = w;
                    c.witness_cycle = cyc;
                    c.enumeration_exhausted = span.outcome == SearchOutcome::Exhausted;
                    c.cycles_checked = span.cycles;
                    certs.push_back(std::move(c));
                    break;
                }
            }
        }
    }
    return certs;
}

// Verifies a caller-supplied parity set: even intersection with every
// enumerated Hamilton cycle and odd intersection with some cycle of G.
inline Certificate verify_parity_certificate(const Graph& g, const EdgeVector& s, const SearchBudget& budget) {
    if (s.length() != g.edge_count()) fail(ErrorCode::LengthMismatch, "parity set length");
    Certificate c;
    c.kind = Certificate::Kind::ParityClass;
    c.parity_set = s;
    bool all_even = true;
    detail::CycleSearch search(g, budget, [&](const HamiltonCycle& hc) {
        if (intersection_parity(hc.edge_vector(g), s) != 0) {
            all_even = false;
            return false;
        }
        return true;
    });
    SearchOutcome outcome = search.run();
    c.cycles_checked = search.cycles();
    c.enumeration_exhausted = outcome == SearchOutcome::Exhausted;
    if (!all_even) fail(ErrorCode::BadPath, "parity set meets a Hamilton cycle oddly");
    bool odd_cycle_found = false;
    for (const auto& cyc : fundamental_cycles(g))
        if (cyc.dot(s)) {
            c.witness_cycle = cyc;
            odd_cycle_found = true;
            break;
        }
    if (!odd_cycle_found) fail(ErrorCode::BadPath, "parity set is orthogonal to the whole cycle space");
    return c;
}

// Subgraph R with (a) R != G, (b) even intersection with every Hamilton
// cycle, (c) at least half of every cut and never exactly a cut.
struct RSubgraph {
    EdgeVector edges;
    bool proper_subgraph = false;        // (a)
    bool even_ham_intersection = false;  // (b)
    bool cut_condition = false;          // (c)
    bool ham_enumeration_exhausted = false;
    int complement_dim = 0;

    bool validated() const { return proper_subgraph && even_ham_intersection && cut_condition; }
};

namespace detail {

inline EdgeVector cut_vector(const Graph& g, std::uint64_t a) {
    EdgeVector v(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) {
        auto [u, w] = g.edge(i);
        if (((a >> u) & 1ULL) != ((a >> w) & 1ULL)) v.set(i);
    }
    return v;
}

// (c) over all 2^(n-1) partitions, vertex 0 pinned to side A. `cuts` may
// hold precomputed cut vectors in that order.
inline bool cut_condition_holds(const Graph& g, const EdgeVector& r, const std::vector<EdgeVector>* cuts) {
    int n = g.vertex_count();
    std::uint64_t half = 1ULL << (n - 1);
    for (std::uint64_t a = 0; a < half; ++a) {
        EdgeVector local;
        const EdgeVector* cut;
        if (cuts) {
            cut = &(*cuts)[static_cast<std::size_t>(a)];
        } else {
            local = cut_vector(g, (a << 1) | 1ULL);
            cut = &local;
        }
        int eg = cut->popcount();
        int er = r.popcount_and(*cut);
        if (2 * er < eg) return false;
        if (r == *cut) return false;
    }
    return true;
}

}  // namespace detail

// Re-derives the three R properties for an arbitrary candidate; used both by
// find_R and as a negative control in tests.
inline RSubgraph validate_r_subgraph(const Graph& g, const EdgeVector& r, const SearchBudget& budget) {
    if (r.length() != g.edge_count()) fail(ErrorCode::LengthMismatch, "R vector length");
    if (g.vertex_count() > 24)
        fail(ErrorCode::BudgetExceeded, "partition check is exhaustive only for n <= 24");
    RSubgraph out;
    out.edges = r;
    EdgeVector all(g.edge_count());
    for (int i = 0; i < g.edge_count(); ++i) all.set(i);
    out.proper_subgraph = !(r == all);
    bool even = true;
    detail::CycleSearch s(g, budget, [&](const HamiltonCycle& c) {
        if (intersection_parity(c.edge_vector(g), r) != 0) {
            even = false;
            return false;
        }
        return true;
    });
    SearchOutcome outcome = s.run();
    out.even_ham_intersection = even;
    out.ham_enumeration_exhausted = outcome == SearchOutcome::Exhausted;
    out.cut_condition = detail::cut_condition_holds(g, r, nullptr);
    return out;
}

struct FindRResult {
    enum class Kind { Found, NoneExists, Inconclusive };
    Kind kind = Kind::Inconclusive;
    std::optional<RSubgraph> r;
    int complement_dim = 0;
    HamGenStatus status;  // the generation check run on the way
    std::uint64_t candidates_tried = 0;
};

// Searches the orthogonal complement of the Hamilton-cycle span, whose
// members satisfy (b) by construction once enumeration is exhausted, for a
// vector also satisfying (a) and (c). Candidates are visited in Gray-code
// order over complement-basis combinations.
inline FindRResult find_R(const Graph& g, const SearchBudget& budget,
                          std::uint64_t max_candidates = 1ULL << 20) {
    if (g.vertex_count() % 2 == 0) fail(ErrorCode::EvenOrder, "R subgraphs require odd n");
    if (g.vertex_count() > 24)
        fail(ErrorCode::BudgetExceeded, "partition check is exhaustive only for n <= 24");
    FindRResult res;
    int m = g.edge_count();
    int dim = m - g.vertex_count() + g.component_count();
    HamiltonSpan span = hamilton_span(g, budget, dim);
    res.status.dim = dim;
    res.status.rank = span.basis.rank();
    res.status.cycles_consumed = span.cycles;
    res.status.nodes = span.nodes;
    res.status.enumeration = span.outcome;
    if (span.cycles == 0 && span.outcome == SearchOutcome::Exhausted)
        fail(ErrorCode::NotHamiltonian, "graph has no Hamilton cycle");
    if (span.basis.rank() == dim) {
        res.status.kind = HamGenStatus::Kind::Generated;
        res.kind = FindRResult::Kind::NoneExists;
        res.complement_dim = m - span.basis.rank();
        return res;
    }
    if (span.outcome == SearchOutcome::Capped) {
        res.status.kind = HamGenStatus::Kind::Inconclusive;
        res.kind = FindRResult::Kind::Inconclusive;
        return res;
    }
    res.status.kind = HamGenStatus::Kind::NotGenerated;

    Gf2Basis comp = orthogonal_complement(span.basis, m);
    int d = comp.rank();
    res.complement_dim = d;

    int n = g.vertex_count();
    std::vector<EdgeVector> cuts;
    const std::vector<EdgeVector>* cuts_ptr = nullptr;
    if (n <= 17) {
        std::uint64_t half = 1ULL << (n - 1);
        cuts.reserve(static_cast<std::size_t>(half));
        for (std::uint64_t a = 0; a < half; ++a) cuts.push_back(detail::cut_vector(g, (a << 1) | 1ULL));
        cuts_ptr = &cuts;
    }

    std::vector<EdgeVector> incident;
    incident.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        EdgeVector iv(m);
        for (int i = 0; i < m; ++i) {
            auto [a, b] = g.edge(i);
            if (a == v || b == v) iv.set(i);
        }
        incident.push_back(std::move(iv));
    }
    EdgeVector all(m);
    for (int i = 0; i < m; ++i) all.set(i);

    std::uint64_t total = d >= 63 ? ~0ULL : ((1ULL << d) - 1);
    std::uint64_t limit = std::min<std::uint64_t>(total, max_candidates);
    EdgeVector cur(m);
    bool all_tried = limit == total;
    for (std::uint64_t i = 1; i <= limit; ++i) {
        cur.xor_with(comp.rows()[static_cast<std::size_t>(std::countr_zero(i))]);
        ++res.candidates_tried;
        if (cur.is_zero() || cur == all) continue;
        bool quick_ok = true;
        for (int v = 0; v < n && quick_ok; ++v)
            if (2 * cur.popcount_and(incident[static_cast<std::size_t>(v)]) < g.degree(v)) quick_ok = false;
        if (!quick_ok) continue;
        if (!detail::cut_condition_holds(g, cur, cuts_ptr)) continue;
        RSubgraph r;
        r.edges = cur;
        r.proper_subgraph = true;
        r.even_ham_intersection = true;  // member of the complement of an exhausted span
        r.cut_condition = true;
        r.ham_enumeration_exhausted = true;
        r.complement_dim = d;
        res.r = std::move(r);
        res.kind = FindRResult::Kind::Found;
        return res;
    }
    res.kind = all_tried ? FindRResult::Kind::NoneExists : FindRResult::Kind::Inconclusive;
    return res;
}

// First even cycle of length <= max_len whose intersection with R is odd;
// shortest lengths first, roots ascending, or nullopt after exhausting all
// bounded even cycles.
inline std::optional<std::vector<int>> find_odd_R_cycle(const Graph& g, const EdgeVector& r, int max_len) {
    if (max_len < 4 || max_len % 2 != 0) fail(ErrorCode::BadLength, "max_len must be even and >= 4");
    if (r.length() != g.edge_count()) fail(ErrorCode::LengthMismatch, "R vector length");
    if (r.is_zero()) return std::nullopt;
    int n = g.vertex_count();
    std::vector<int> path;
    std::optional<std::vector<int>> found;

    std::function<void(int, std::uint64_t, int, int)> dfs = [&](int u, std::uint64_t visited, int left,
                                                                int parity) {
        if (found) return;
        int root = path.front();
        if (left == 0) {
            if (g.has_edge(u, root) && path[1] < path.back()) {
                int idx = g.edge_index(u, root);
                int total = parity ^ (r.test(idx) ? 1 : 0);
                if (total) found = path;
            }
            return;
        }
        std::uint64_t cands = g.neighbors(u) & ~visited;
        while (cands && !found) {
            int w = std::countr_zero(cands);
            cands &= cands - 1;
            if (w <= root) continue;  // keep the root the smallest cycle vertex
            int idx = g.edge_index(u, w);
            path.push_back(w);
            dfs(w, visited | (1ULL << w), left - 1, parity ^ (r.test(idx) ? 1 : 0));
            path.pop_back();
        }
    };

    for (int len = 4; len <= std::min(max_len, n); len += 2) {
        for (int root = 0; root < n && !found; ++root) {
            path.assign(1, root);
            dfs(root, 1ULL << root, len - 1, 0);
        }
        if (found) return found;
    }
    return std::nullopt;
}

// Even cycle with odd R-intersection plus disjoint connecting paths and two
// touch vertices. paths[0] runs v_1 -> u_1, paths[k] runs v_{k+1} -> u_{k+1},
// and paths[i-1] joins v_i with v_{2k-i+2} for 2 <= i <= k.
struct ParitySwitcher {
    std::vector<int> cycle;                // v_1..v_2k
    std::vector<std::vector<int>> paths;   // P_1..P_{k+1}

    int k() const { return static_cast<int>(cycle.size()) / 2; }
    int touch_first() const { return paths.front().back(); }
    int touch_last() const { return paths.back().back(); }

    VertexSet covered() const {
        VertexSet s;
        for (const auto& p : paths)
            for (int v : p) s.add(v);
        return s;
    }
};

inline void validate_switcher(const Graph& g, const EdgeVector& r, const ParitySwitcher& w) {
    int len = static_cast<int>(w.cycle.size());
    if (len < 4 || len % 2 != 0) fail(ErrorCode::BadLength, "switcher cycle must be even, length >= 4");
    int k = len / 2;
    VertexSet cyc_set;
    for (int i = 0; i < len; ++i) {
        if (cyc_set.contains(w.cycle[static_cast<std::size_t>(i)])) fail(ErrorCode::NotDisjoint, "cycle repeats a vertex");
        cyc_set.add(w.cycle[static_cast<std::size_t>(i)]);
        int a = w.cycle[static_cast<std::size_t>(i)], b = w.cycle[static_cast<std::size_t>((i + 1) % len)];
        if (!g.has_edge(a, b)) fail(ErrorCode::NonEdge, "cycle uses a non-edge");
    }
    if (intersection_parity(EdgeVector::from_cycle(g, w.cycle), r) != 1)
        fail(ErrorCode::BadPath, "cycle has even R-intersection");
    if (static_cast<int>(w.paths.size()) != k + 1) fail(ErrorCode::BadPath, "expected k+1 paths");
    VertexSet used;
    for (const auto& p : w.paths) {
        if (p.empty()) fail(ErrorCode::BadPath, "empty switcher path");
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (used.contains(p[i])) fail(ErrorCode::NotDisjoint, "switcher paths share a vertex");
            used.add(p[i]);
            if (i + 1 < p.size() && !g.has_edge(p[i], p[i + 1])) fail(ErrorCode::NonEdge, "path uses a non-edge");
        }
    }
    auto at = [&w](int j) { return w.cycle[static_cast<std::size_t>(j)]; };  // 0-based
    if (w.paths.front().front() != at(0)) fail(ErrorCode::BadPath, "P_1 must start at v_1");
    if (w.paths.back().front() != at(k)) fail(ErrorCode::BadPath, "P_{k+1} must start at v_{k+1}");
    for (int i = 2; i <= k; ++i) {
        const auto& p = w.paths[static_cast<std::size_t>(i - 1)];
        if (p.front() != at(i - 1) || p.back() != at(2 * k - i + 1))
            fail(ErrorCode::BadPath, "P_" + std::to_string(i) + " endpoints mismatch");
        for (std::size_t j = 1; j + 1 < p.size(); ++j)
            if (cyc_set.contains(p[j])) fail(ErrorCode::BadPath, "path interior touches the cycle");
    }
    for (const auto* p : {&w.paths.front(), &w.paths.back()})
        for (std::size_t j = 1; j < p->size(); ++j)
            if (cyc_set.contains((*p)[j])) fail(ErrorCode::BadPath, "touch path re-enters the cycle");
    // every cycle vertex must be accounted for by some path endpoint
    if (!(cyc_set.minus(used)).empty()) fail(ErrorCode::BadPath, "cycle vertex not covered by the paths");
}

namespace detail {

inline std::vector<int> walk_cycle(const std::vector<VertexPair>& edges, int n) {
    std::array<std::array<int, 2>, kMaxVertices> nbr{};
    std::array<int, kMaxVertices> deg{};
    deg.fill(0);
    for (auto [u, v] : edges) {
        if (deg[u] >= 2 || deg[v] >= 2) fail(ErrorCode::BadPath, "assembled edges exceed degree 2");
        nbr[u][deg[u]++] = v;
        nbr[v][deg[v]++] = u;
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] != 2) fail(ErrorCode::BadPath, "assembled edges do not form a spanning cycle");
    std::vector<int> order{0, std::min(nbr[0][0], nbr[0][1])};
    while (true) {
        int cur = order.back(), prev = order[order.size() - 2];
        int nxt = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
        if (nxt == 0) break;
        order.push_back(nxt);
    }
    if (static_cast<int>(order.size()) != n) fail(ErrorCode::BadPath, "assembled edges split into several cycles");
    return order;
}

}  // namespace detail

// The two Hamilton cycles obtained by concatenating the switcher paths with
// the connecting path P: both share all path edges and split the switcher
// cycle into its odd- and even-position edges, so E(C1) xor E(C2) = E(C).
inline std::pair<HamiltonCycle, HamiltonCycle> assemble_switch_cycles(const Graph& g, const ParitySwitcher& w,
                                                                      const std::vector<int>& p) {
    if (p.size() < 2 || p.front() != w.touch_first() || p.back() != w.touch_last())
        fail(ErrorCode::BadPath, "P must join the touch vertices");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) fail(ErrorCode::BadPath, "P uses a non-edge");
    VertexSet p_interior;
    VertexSet p_all;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p_all.contains(p[i])) fail(ErrorCode::BadPath, "P repeats a vertex");
        p_all.add(p[i]);
        if (i > 0 && i + 1 < p.size()) p_interior.add(p[i]);
    }
    VertexSet expected = g.all_vertices().minus(w.covered());
    if (!(p_interior == expected)) fail(ErrorCode::BadPath, "In(P) must be exactly the vertices outside the switcher paths");

    std::vector<VertexPair> shared;
    for (const auto& q : w.paths)
        for (std::size_t i = 0; i + 1 < q.size(); ++i)
            shared.push_back({std::min(q[i], q[i + 1]), std::max(q[i], q[i + 1])});
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        shared.push_back({std::min(p[i], p[i + 1]), std::max(p[i], p[i + 1])});

    int len = static_cast<int>(w.cycle.size());
    std::vector<VertexPair> e1 = shared, e2 = shared;
    for (int i = 0; i < len; ++i) {
        int a = w.cycle[static_cast<std::size_t>(i)], b = w.cycle[static_cast<std::size_t>((i + 1) % len)];
        VertexPair e{std::min(a, b), std::max(a, b)};
        if (i % 2 == 0)
            e1.push_back(e);
        else
            e2.push_back(e);
    }
    int n = g.vertex_count();
    HamiltonCycle c1 = HamiltonCycle::canonicalize(detail::walk_cycle(e1, n));
    HamiltonCycle c2 = HamiltonCycle::canonicalize(detail::walk_cycle(e2, n));
    return {c1, c2};
}

// The path-obstruction assertion: with a valid R and a valid switcher, no
// path joins the touch vertices through exactly the leftover vertices. A
// false return from a validated instance is a machine-checked inconsistency.
inline bool switcher_obstruction_holds(const Graph& g, const RSubgraph& r, const ParitySwitcher& w) {
    validate_switcher(g, r.edges, w);
    VertexSet interior = g.all_vertices().minus(w.covered());
    return !constrained_hamilton_path(g, w.touch_first(), w.touch_last(), interior).has_value();
}

// Builds a switcher from the first odd-R even cycle: degenerate touch paths
// at v_1 and v_{k+1}, middle paths routed greedily off the cycle.
inline std::optional<ParitySwitcher> find_parity_switcher(const Graph& g, const EdgeVector& r, int max_cycle_len) {
    auto cyc = find_odd_R_cycle(g, r, max_cycle_len);
    if (!cyc) return std::nullopt;
    int len = static_cast<int>(cyc->size());
    int k = len / 2;
    ParitySwitcher w;
    w.cycle = *cyc;
    w.paths.assign(static_cast<std::size_t>(k + 1), {});
    w.paths[0] = {w.cycle[0]};
    w.paths[static_cast<std::size_t>(k)] = {w.cycle[static_cast<std::size_t>(k)]};
    VertexSet cyc_set;
    for (int v : w.cycle) cyc_set.add(v);
    VertexSet used_interior;
    for (int i = 2; i <= k; ++i) {
        int a = w.cycle[static_cast<std::size_t>(i - 1)];
        int b = w.cycle[static_cast<std::size_t>(2 * k - i + 1)];
        VertexSet allowed = g.all_vertices().minus(cyc_set).minus(used_interior);
        allowed.add(a);
        allowed.add(b);
        auto path = detail::bfs_path(g, a, b, allowed);
        if (!path) return std::nullopt;
        for (std::size_t j = 1; j + 1 < path->size(); ++j) used_interior.add((*path)[j]);
        w.paths[static_cast<std::size_t>(i - 1)] = std::move(*path);
    }
    validate_switcher(g, r, w);
    return w;
}

}  // namespace hamgen
