#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "hamgen/constructions.hpp"
#include "hamgen/gf2.hpp"
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

// Independent elimination over plain machine words, for cross-checking the
// Gf2Basis rank logic (m <= 64 here).
int word_rank(std::vector<std::uint64_t> rows) {
    int rank = 0;
    for (int bit = 0; bit < 64; ++bit) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(),
                                  [bit](std::uint64_t r) { return (r >> bit) & 1ULL; });
        if (pivot == rows.end()) continue;
        std::swap(*pivot, rows[static_cast<std::size_t>(rank)]);
        for (std::size_t i = 0; i < rows.size(); ++i)
            if (static_cast<int>(i) != rank && ((rows[i] >> bit) & 1ULL)) rows[i] ^= rows[static_cast<std::size_t>(rank)];
        ++rank;
    }
    return rank;
}

std::uint64_t to_word(const EdgeVector& v) {
    std::uint64_t w = 0;
    for (int i = 0; i < v.length(); ++i)
        if (v.test(i)) w |= 1ULL << i;
    return w;
}

// All Hamilton cycles of K_n by direct permutation enumeration: fix 0 first
// and orient with second < last. Independent of the search module.
std::vector<EdgeVector> kn_hamilton_vectors(const Graph& kn) {
    int n = kn.vertex_count();
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<EdgeVector> out;
    do {
        if (rest.front() > rest.back()) continue;
        std::vector<int> cyc{0};
        cyc.insert(cyc.end(), rest.begin(), rest.end());
        out.push_back(EdgeVector::from_cycle(kn, cyc));
    } while (std::next_permutation(rest.begin(), rest.end()));
    return out;
}

}  // namespace

TEST_CASE("vector_from_edges") {
    Graph tri = complete_graph(3);
    EdgeVector v = EdgeVector::from_edges(tri, tri.edges());
    CHECK(v.popcount() == 3);
    CHECK(EdgeVector::from_edges(tri, {}).is_zero());

    Graph k4 = complete_graph(4);
    EdgeVector c = EdgeVector::from_cycle(k4, {0, 1, 2, 3});
    CHECK(c.popcount() == 4);
    CHECK(c.test(k4.edge_index(0, 1)));
    CHECK(c.test(k4.edge_index(1, 2)));
    CHECK(c.test(k4.edge_index(2, 3)));
    CHECK(c.test(k4.edge_index(0, 3)));
    CHECK(!c.test(k4.edge_index(0, 2)));

    CHECK(throws_code([&] { EdgeVector::from_edges(tri, {{0, 3}}); }, ErrorCode::UnknownEdge));
}

TEST_CASE("insert_and_rank") {
    Graph tri = complete_graph(3);
    Gf2Basis b(3);
    EdgeVector v = EdgeVector::from_edges(tri, {{0, 1}});
    auto [b1, grew1] = insert_and_rank(b, v);
    CHECK(grew1);
    CHECK(b1.rank() == 1);
    CHECK(b.rank() == 0);  // functional update left the input alone
    auto [b2, grew2] = insert_and_rank(b1, v);
    CHECK(!grew2);
    CHECK(b2.rank() == 1);

    // the 12 Hamilton cycles of K5 span a rank-6 space (computed against an
    // independent word-based elimination)
    Graph k5 = complete_graph(5);
    auto cycles = kn_hamilton_vectors(k5);
    REQUIRE(cycles.size() == 12);
    std::vector<std::uint64_t> words;
    Gf2Basis basis(k5.edge_count());
    for (const auto& c : cycles) {
        basis.insert(c);
        words.push_back(to_word(c));
    }
    CHECK(word_rank(words) == 6);
    CHECK(basis.rank() == 6);

    CHECK(throws_code([&] { basis.insert(EdgeVector(5)); }, ErrorCode::LengthMismatch));

    // reinserting everything already in the span changes nothing
    Gf2Basis replay = basis;
    for (const auto& row : basis.rows()) CHECK(!replay.insert(row));
    for (const auto& c : cycles) CHECK(!replay.insert(c));
    CHECK(replay.rank() == basis.rank());
}

TEST_CASE("in_span") {
    Graph k4 = complete_graph(4);
    Gf2Basis quads(k4.edge_count());
    quads.insert(EdgeVector::from_cycle(k4, {0, 1, 2, 3}));
    quads.insert(EdgeVector::from_cycle(k4, {0, 2, 1, 3}));
    quads.insert(EdgeVector::from_cycle(k4, {0, 1, 3, 2}));
    CHECK(quads.in_span(EdgeVector(k4.edge_count())));
    // odd-weight vectors cannot be sums of even-weight ones
    CHECK(!quads.in_span(EdgeVector::from_cycle(k4, {0, 1, 2})));

    Gf2Basis cyc = cycle_space_basis(k4);
    for (const auto& f : fundamental_cycles(k4)) CHECK(cyc.in_span(f));
}

TEST_CASE("cycle_space_basis") {
    Graph tree(5, {{0, 1}, {0, 2}, {2, 3}, {2, 4}});
    CHECK(cycle_space_basis(tree).rank() == 0);
    CHECK(cycle_space_basis(complete_graph(5)).rank() == 6);
    Graph c5 = cycle_graph(5);
    Gf2Basis b = cycle_space_basis(c5);
    REQUIRE(b.rank() == 1);
    CHECK(b.rows()[0].popcount() == 5);
}

TEST_CASE("rank identity on random graphs") {
    SplitMix64 rng(23);
    for (int t = 0; t < 300; ++t) {
        int n = 3 + static_cast<int>(rng.below(10));
        Graph g = testsupport::random_graph(n, 200000 + rng.below(600000), rng);
        int expect = g.edge_count() - n + g.component_count();
        CHECK(cycle_space_basis(g).rank() == expect);
    }
}

TEST_CASE("sum of two cycles stays in the cycle space") {
    SplitMix64 rng(29);
    for (int t = 0; t < 40; ++t) {
        Graph g = testsupport::random_graph(8, 550000, rng);
        auto fc = fundamental_cycles(g);
        if (fc.size() < 2) continue;
        Gf2Basis b = cycle_space_basis(g);
        EdgeVector sum = fc[0];
        sum.xor_with(fc[1]);
        CHECK(b.in_span(sum));
    }
}

TEST_CASE("orthogonal_complement") {
    CHECK(orthogonal_complement(Gf2Basis(7), 7).rank() == 7);

    Graph tri = complete_graph(3);
    Gf2Basis full(3);
    full.insert(EdgeVector::from_edges(tri, {{0, 1}}));
    full.insert(EdgeVector::from_edges(tri, {{0, 2}}));
    full.insert(EdgeVector::from_edges(tri, {{1, 2}}));
    CHECK(orthogonal_complement(full, 3).rank() == 0);

    // C5: complement of the rank-1 cycle space is the 16 even-weight vectors
    Graph c5 = cycle_graph(5);
    Gf2Basis cyc = cycle_space_basis(c5);
    Gf2Basis comp = orthogonal_complement(cyc, 5);
    REQUIRE(comp.rank() == 4);
    const EdgeVector& five = cyc.rows()[0];
    int members = 0;
    for (std::uint64_t mask = 0; mask < 16; ++mask) {
        EdgeVector v(5);
        for (int i = 0; i < 4; ++i)
            if ((mask >> i) & 1ULL) v.xor_with(comp.rows()[static_cast<std::size_t>(i)]);
        ++members;
        CHECK(intersection_parity(v, five) == 0);
        CHECK(v.popcount() % 2 == 0);
    }
    CHECK(members == 16);
}

TEST_CASE("complement rank sum and orthogonality") {
    SplitMix64 rng(31);
    for (int t = 0; t < 40; ++t) {
        Graph g = testsupport::random_graph(7, 500000, rng);
        int m = g.edge_count();
        if (m == 0) continue;
        Gf2Basis b = cycle_space_basis(g);
        Gf2Basis comp = orthogonal_complement(b, m);
        CHECK(b.rank() + comp.rank() == m);
        for (const auto& w : comp.rows())
            for (const auto& r : b.rows()) CHECK(intersection_parity(w, r) == 0);
    }
}

TEST_CASE("intersection_parity") {
    Graph tri = complete_graph(3);
    EdgeVector t = EdgeVector::from_edges(tri, tri.edges());
    CHECK(intersection_parity(t, t) == 1);

    Graph p4(4, {{0, 1}, {1, 2}, {2, 3}});
    EdgeVector a = EdgeVector::from_edges(p4, {{0, 1}});
    EdgeVector b = EdgeVector::from_edges(p4, {{2, 3}});
    CHECK(intersection_parity(a, b) == 0);

    CHECK(throws_code([&] { intersection_parity(t, EdgeVector(5)); }, ErrorCode::LengthMismatch));
}
