#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <vector>

#include "hamgen/constructions.hpp"
#include "hamgen/hamgen.hpp"
#include "support.hpp"

using namespace hamgen;

namespace {

bool throws_code(const std::function<void()>& f, ErrorCode c) {
    try {
        f();
    } catch (const Error& e) {
        return e.code() == c;
    }
    return false;
}

Gf2Basis full_hamilton_span(const Graph& g) {
    return hamilton_span(g, SearchBudget::unlimited()).basis;
}

}  // namespace

TEST_CASE("is_hamilton_generated basics") {
    HamGenStatus c5 = is_hamilton_generated(cycle_graph(5), SearchBudget::unlimited());
    CHECK(c5.kind == HamGenStatus::Kind::Generated);
    CHECK(c5.rank == 1);
    CHECK(c5.dim == 1);

    HamGenStatus k4 = is_hamilton_generated(complete_graph(4), SearchBudget::unlimited());
    CHECK(k4.kind == HamGenStatus::Kind::NotGenerated);
    CHECK(k4.enumeration == SearchOutcome::Exhausted);
    REQUIRE(k4.witness);
    CHECK(k4.witness->popcount() == 3);  // a triangle: odd weight can't be an even-weight sum

    CHECK(throws_code([] { is_hamilton_generated(complete_graph(2), SearchBudget::unlimited()); },
                      ErrorCode::TooSmall));

    SearchBudget tiny;
    tiny.max_nodes = 2;
    CHECK(is_hamilton_generated(complete_graph(8), tiny).kind == HamGenStatus::Kind::Inconclusive);
}

TEST_CASE("the three tight families are not generated, with verified witnesses") {
    for (int variant : {1, 2, 3}) {
        auto c = construction_a(2, variant);
        HamGenStatus st = is_hamilton_generated(c.graph, SearchBudget::unlimited());
        CHECK(st.kind == HamGenStatus::Kind::NotGenerated);
        CHECK(st.enumeration == SearchOutcome::Exhausted);
        REQUIRE(st.witness);
        CHECK(cycle_space_basis(c.graph).in_span(*st.witness));
        CHECK(!full_hamilton_span(c.graph).in_span(*st.witness));
    }
}

TEST_CASE("generated means every sampled cycle is in the span") {
    SplitMix64 rng(67);
    for (int t = 0; t < 8; ++t) {
        Graph g = testsupport::random_min_degree_graph(7, 4, rng);
        HamGenStatus st = is_hamilton_generated(g, SearchBudget::unlimited());
        if (st.kind != HamGenStatus::Kind::Generated) continue;
        Gf2Basis span = full_hamilton_span(g);
        for (const auto& c : fundamental_cycles(g)) CHECK(span.in_span(c));
    }
}

TEST_CASE("certificates on the tight families") {
    auto g1 = construction_a(2, 1);
    auto certs = non_generation_certificates(g1.graph);
    bool forbidden = false;
    for (const auto& c : certs)
        if (c.kind == Certificate::Kind::ForbiddenEdge && c.edge == VertexPair{g1.b[0], g1.b[1]}) forbidden = true;
    CHECK(forbidden);

    // clique-pair family: the inside-X edge set meets every Hamilton cycle
    // an even number of times, witnessed by any inside triangle
    auto g3 = construction_a(2, 3);
    EdgeVector inside(g3.graph.edge_count());
    for (int i = 0; i < g3.graph.edge_count(); ++i) {
        auto [u, v] = g3.graph.edge(i);
        if (g3.x.contains(u) && g3.x.contains(v)) inside.set(i);
    }
    Certificate parity = verify_parity_certificate(g3.graph, inside, SearchBudget::unlimited());
    CHECK(parity.enumeration_exhausted);
    CHECK(parity.cycles_checked == 36);
    CHECK(intersection_parity(parity.witness_cycle, inside) == 1);
    // and the generic search also produces parity evidence
    auto gcerts = non_generation_certificates(g3.graph);
    bool any_parity = false;
    for (const auto& c : gcerts)
        if (c.kind == Certificate::Kind::ParityClass) any_parity = true;
    CHECK(any_parity);

    CHECK(non_generation_certificates(complete_graph(5)).empty());
}

TEST_CASE("certificates on a graph with no Hamilton cycles at all") {
    std::vector<VertexPair> pe;
    for (int i = 0; i < 5; ++i) {
        pe.push_back({i, (i + 1) % 5});
        pe.push_back({5 + i, 5 + (i + 2) % 5});
        pe.push_back({i, i + 5});
    }
    Graph petersen(10, pe);
    HamGenStatus st = is_hamilton_generated(petersen, SearchBudget::unlimited());
    CHECK(st.kind == HamGenStatus::Kind::NotGenerated);
    CHECK(st.rank == 0);
    CHECK(st.dim == 6);
    auto certs = non_generation_certificates(petersen);
    int forbidden = 0;
    for (const auto& c : certs)
        if (c.kind == Certificate::Kind::ForbiddenEdge) ++forbidden;
    CHECK(forbidden == petersen.edge_count());  // every edge is on a cycle, none on a Hamilton cycle
}

TEST_CASE("find_R on the tight families") {
    for (int variant : {1, 2, 3}) {
        auto c = construction_a(2, variant);
        FindRResult res = find_R(c.graph, SearchBudget::unlimited());
        REQUIRE(res.kind == FindRResult::Kind::Found);
        REQUIRE(res.r);
        CHECK(res.r->validated());
        // re-derive all three properties from scratch
        RSubgraph check = validate_r_subgraph(c.graph, res.r->edges, SearchBudget::unlimited());
        CHECK(check.proper_subgraph);
        CHECK(check.even_ham_intersection);
        CHECK(check.ham_enumeration_exhausted);
        CHECK(check.cut_condition);
        // property (b) directly: orthogonal to every Hamilton cycle
        enumerate_hamilton_cycles(c.graph, SearchBudget::unlimited(), [&](const HamiltonCycle& hc) {
            CHECK(intersection_parity(hc.edge_vector(c.graph), res.r->edges) == 0);
            return true;
        });
    }
}

TEST_CASE("a sampled degree-threshold Hamilton-connected graph that is not generated") {
    // found by the seeded sampler: minimum degree (n-1)/2 and
    // Hamilton-connectivity do not force generation at n = 7
    auto g = random_dirac_hc_graph(7, 31373);
    REQUIRE(g);
    CHECK(g->edges() == std::vector<VertexPair>{{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5},
                                                {3, 4}, {3, 6}, {4, 6}, {5, 6}});
    HamGenStatus st = is_hamilton_generated(*g, SearchBudget::unlimited());
    CHECK(st.kind == HamGenStatus::Kind::NotGenerated);
    CHECK(st.rank == 5);
    CHECK(st.dim == 6);
    CHECK(st.cycles_consumed == 6);
    FindRResult r = find_R(*g, SearchBudget::unlimited());
    REQUIRE(r.kind == FindRResult::Kind::Found);
    CHECK(r.r->edges.popcount() == 9);
    auto w = find_parity_switcher(*g, r.r->edges, 6);
    REQUIRE(w);
    CHECK(switcher_obstruction_holds(*g, *r.r, *w));
    // no forbidden edges here; the refutation is purely parity-based
    auto certs = non_generation_certificates(*g);
    CHECK(!certs.empty());
    for (const auto& c : certs) CHECK(c.kind == Certificate::Kind::ParityClass);
}

TEST_CASE("every odd Hamiltonian NotGenerated graph yields an R") {
    // a 7-cycle with one chord has only one Hamilton cycle, so its span
    // misses the chord cycles
    Graph chord(7, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {0, 6}, {0, 2}});
    HamGenStatus st = is_hamilton_generated(chord, SearchBudget::unlimited());
    REQUIRE(st.kind == HamGenStatus::Kind::NotGenerated);
    FindRResult res = find_R(chord, SearchBudget::unlimited());
    CHECK(res.kind == FindRResult::Kind::Found);

    SplitMix64 rng(83);
    int not_generated = 0;
    for (int t = 0; t < 60; ++t) {
        Graph g = testsupport::random_graph(7, 450000 + rng.below(200000), rng);
        HamGenStatus s = is_hamilton_generated(g, SearchBudget::unlimited());
        if (s.kind != HamGenStatus::Kind::NotGenerated || s.cycles_consumed == 0) continue;
        ++not_generated;
        FindRResult r = find_R(g, SearchBudget::unlimited());
        CHECK(r.kind == FindRResult::Kind::Found);
        CHECK(r.r->validated());
    }
    CHECK(not_generated > 0);  // the sample sizes above do produce such graphs
}

TEST_CASE("find_R edge cases") {
    CHECK(find_R(cycle_graph(5), SearchBudget::unlimited()).kind == FindRResult::Kind::NoneExists);
    CHECK(throws_code([] { find_R(complete_graph(4), SearchBudget::unlimited()); }, ErrorCode::EvenOrder));
    Graph path(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(throws_code([&] { find_R(path, SearchBudget::unlimited()); }, ErrorCode::NotHamiltonian));
    // candidate cap trips before the first valid R of the pendant family
    auto g1 = construction_a(2, 1);
    FindRResult capped = find_R(g1.graph, SearchBudget::unlimited(), 10);
    CHECK(capped.kind == FindRResult::Kind::Inconclusive);
}

TEST_CASE("corrupted R fails validation") {
    auto g1 = construction_a(2, 1);
    FindRResult res = find_R(g1.graph, SearchBudget::unlimited());
    REQUIRE(res.kind == FindRResult::Kind::Found);
    EdgeVector corrupted = res.r->edges;
    corrupted.flip(0);  // no longer orthogonal to the Hamilton span
    RSubgraph check = validate_r_subgraph(g1.graph, corrupted, SearchBudget::unlimited());
    CHECK(!check.validated());
}

TEST_CASE("find_odd_R_cycle") {
    Graph k4 = complete_graph(4);
    EdgeVector r = EdgeVector::from_edges(k4, {{0, 1}});
    auto cyc = find_odd_R_cycle(k4, r, 4);
    REQUIRE(cyc);
    CHECK(*cyc == std::vector<int>{0, 1, 2, 3});  // first length-4 cycle in enumeration order

    CHECK(!find_odd_R_cycle(k4, EdgeVector(k4.edge_count()), 6));
    CHECK(throws_code([&] { find_odd_R_cycle(k4, r, 3); }, ErrorCode::BadLength));

    // exhausting without a hit: R = a full triangle inside K4 and length cap
    // 4 (every 4-cycle meets a triangle in 0 or 2 edges)
    EdgeVector tri = EdgeVector::from_edges(k4, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(!find_odd_R_cycle(k4, tri, 4));
}

TEST_CASE("assemble_switch_cycles on a synthetic instance") {
    // cycle (0,1,2,3), touch paths 0-4 and 2-5, middle path 1-6-3, spine 4-7-5
    Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 4}, {2, 5}, {1, 6}, {3, 6}, {4, 7}, {5, 7}});
    ParitySwitcher w;
    w.cycle = {0, 1, 2, 3};
    w.paths = {{0, 4}, {1, 6, 3}, {2, 5}};
    EdgeVector r = EdgeVector::from_edges(g, {{0, 1}});  // odd on the cycle
    validate_switcher(g, r, w);

    std::vector<int> p{4, 7, 5};
    auto [c1, c2] = assemble_switch_cycles(g, w, p);
    EdgeVector v1 = c1.edge_vector(g), v2 = c2.edge_vector(g);
    v1.xor_with(v2);
    CHECK(v1 == EdgeVector::from_cycle(g, w.cycle));
    int p1 = intersection_parity(c1.edge_vector(g), r);
    int p2 = intersection_parity(c2.edge_vector(g), r);
    CHECK(p1 + p2 == 1);  // exactly one odd

    CHECK(throws_code([&] { assemble_switch_cycles(g, w, {4, 5}); }, ErrorCode::BadPath));
    CHECK(throws_code([&] { assemble_switch_cycles(g, w, {0, 4, 7}); }, ErrorCode::BadPath));
}

TEST_CASE("switcher obstruction holds on every tight family") {
    for (int variant : {1, 2, 3}) {
        auto c = construction_a(2, variant);
        FindRResult res = find_R(c.graph, SearchBudget::unlimited());
        REQUIRE(res.kind == FindRResult::Kind::Found);
        auto w = find_parity_switcher(c.graph, res.r->edges, 8);
        REQUIRE(w);
        CHECK(switcher_obstruction_holds(c.graph, *res.r, *w));
    }
}

TEST_CASE("capped parity verification records its budget") {
    auto g1 = construction_a(3, 1);
    auto certs = non_generation_certificates(g1.graph);
    const Certificate* parity = nullptr;
    for (const auto& c : certs)
        if (c.kind == Certificate::Kind::ParityClass) {
            parity = &c;
            break;
        }
    REQUIRE(parity != nullptr);
    SearchBudget tight;
    tight.max_cycles = 10000;
    Certificate re = verify_parity_certificate(g1.graph, parity->parity_set, tight);
    CHECK(re.cycles_checked == 10000);
    CHECK(!re.enumeration_exhausted);
}

TEST_CASE("an invalid R yields no obstruction") {
    // negative control: a single-edge "R" on K5 has odd Hamilton
    // intersections, and the leftover path exists
    Graph k5 = complete_graph(5);
    EdgeVector r = EdgeVector::from_edges(k5, {{0, 1}});
    RSubgraph fake;
    fake.edges = r;
    auto w = find_parity_switcher(k5, r, 4);
    REQUIRE(w);
    CHECK(!switcher_obstruction_holds(k5, fake, *w));
    CHECK(!validate_r_subgraph(k5, r, SearchBudget::unlimited()).validated());
}
