#include <catch2/catch_amalgamated.hpp>

#include <functional>

#include "hamgen/constructions.hpp"
#include "hamgen/hamilton.hpp"

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

bool hamiltonian(const Graph& g) {
    bool found = false;
    enumerate_hamilton_cycles(g, SearchBudget::unlimited(), [&found](const HamiltonCycle&) {
        found = true;
        return false;
    });
    return found;
}

}  // namespace

TEST_CASE("construction degrees and sizes") {
    auto g1 = construction_a(2, 1);
    auto g2 = construction_a(2, 2);
    auto g3 = construction_a(2, 3);
    CHECK(g1.graph.vertex_count() == 9);
    CHECK(g1.graph.min_degree() == 4);
    CHECK(g2.graph.min_degree() == 4);
    CHECK(g3.graph.min_degree() == 3);
    CHECK(g1.x.count() == 5);
    CHECK(g1.y.count() == 4);

    // two cliques of sizes 8 and 7 sharing no edge, minus the removed pair
    auto big2 = construction_a(3, 2);
    CHECK(big2.graph.vertex_count() == 13);
    CHECK(big2.graph.edge_count() == 8 * 7 / 2 + 7 * 6 / 2 - 1);

    CHECK(throws_code([] { construction_a(1, 1); }, ErrorCode::KTooSmall));
    CHECK(throws_code([] { construction_a(2, 4); }, ErrorCode::OutOfRange));
}

TEST_CASE("generators") {
    CHECK(complete_graph(1).edge_count() == 0);
    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(7).edge_count() == 21);
    CHECK(complete_graph(7).min_degree() == 6);
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(complete_bipartite(3, 4).edge_count() == 12);
}

TEST_CASE("construction invariants for k in {2,3}") {
    for (int k : {2, 3}) {
        auto g1 = construction_a(k, 1);
        auto g2 = construction_a(k, 2);
        auto g3 = construction_a(k, 3);
        int n = 4 * k + 1;
        CHECK(2 * g1.graph.min_degree() == n - 1);
        CHECK(2 * g2.graph.min_degree() == n - 1);
        CHECK(2 * g3.graph.min_degree() == n - 3);
        CHECK(hamiltonian(g1.graph));
        CHECK(hamiltonian(g2.graph));
        CHECK(!is_hamilton_connected(g1.graph).connected);
        CHECK(!is_hamilton_connected(g2.graph).connected);
        CHECK(is_hamilton_connected(g3.graph).connected);
    }
}

TEST_CASE("random_dirac_hc_graph") {
    auto g = random_dirac_hc_graph(7, 1);
    REQUIRE(g);
    CHECK(2 * g->min_degree() >= 6);
    CHECK(is_hamilton_connected(*g).connected);

    // deterministic given the seed
    auto again = random_dirac_hc_graph(7, 1);
    REQUIRE(again);
    CHECK(g->edges() == again->edges());
    auto other = random_dirac_hc_graph(7, 2);
    REQUIRE(other);
    CHECK(g->edges() != other->edges());

    CHECK(throws_code([] { random_dirac_hc_graph(4, 1); }, ErrorCode::EvenN));
    CHECK(!random_dirac_hc_graph(7, 1, 5, 0));  // p = 0 never accepts
}
