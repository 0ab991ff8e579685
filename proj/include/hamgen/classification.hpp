#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hamgen/constructions.hpp"
#include "hamgen/errors.hpp"
#include "hamgen/graph.hpp"
#include "hamgen/hamgen.hpp"
#include "hamgen/rat.hpp"
#include "hamgen/rng.hpp"
#include "hamgen/structures.hpp"

namespace hamgen {

// Explicit finite stand-ins for the asymptotic parameter chain. Defaults are
// the desk-scale choices used throughout the test suite; every ledger entry
// records the exact rationals in force.
struct ThresholdParams {
    Rat alpha{1, 10};
    Rat beta{1, 50};
    Rat eta{1, 4};
    Rat sigma{1, 40};
    Rat gamma{1, 20};

    // The "<<" hierarchy has no finite meaning; report which orderings hold.
    std::vector<std::pair<std::string, bool>> hierarchy() const {
        return {{"beta<alpha", beta < alpha}, {"alpha<eta", alpha < eta}, {"gamma<alpha", gamma < alpha}};
    }
};

// One evaluated inequality with both sides exact. `infinite` marks a min
// over an empty set (vacuously satisfied bounds keep pass = true).
struct LedgerValue {
    enum class Ext { NegInf, Finite, PosInf };
    Ext ext = Ext::Finite;
    Rat value{0};

    static LedgerValue of(Rat r) { return {Ext::Finite, r}; }
    static LedgerValue pos_inf() { return {Ext::PosInf, Rat(0)}; }
    static LedgerValue neg_inf() { return {Ext::NegInf, Rat(0)}; }

    std::string str() const {
        if (ext == Ext::PosInf) return "inf";
        if (ext == Ext::NegInf) return "-inf";
        return value.str();
    }

    friend bool operator<=(const LedgerValue& a, const LedgerValue& b) {
        if (a.ext == Ext::NegInf || b.ext == Ext::PosInf) return true;
        if (a.ext == Ext::PosInf || b.ext == Ext::NegInf) return false;
        return a.value <= b.value;
    }
    friend bool operator>=(const LedgerValue& a, const LedgerValue& b) { return b <= a; }
    friend bool operator==(const LedgerValue& a, const LedgerValue& b) {
        return a.ext == b.ext && (a.ext != Ext::Finite || a.value == b.value);
    }
};

struct LedgerEntry {
    std::string name;
    LedgerValue lhs, rhs;
    std::string relation;  // "<=", ">=", "="
    bool pass = false;
    std::string note;  // "inconclusive" and similar annotations
};

using Ledger = std::vector<LedgerEntry>;

inline LedgerEntry make_entry(std::string name, LedgerValue lhs, std::string relation, LedgerValue rhs) {
    LedgerEntry e;
    e.name = std::move(name);
    e.lhs = lhs;
    e.rhs = rhs;
    e.relation = std::move(relation);
    if (e.relation == "<=")
        e.pass = lhs <= rhs;
    else if (e.relation == ">=")
        e.pass = lhs >= rhs;
    else if (e.relation == "=")
        e.pass = lhs == rhs;
    else
        fail(ErrorCode::ShapeMismatch, "unknown relation " + e.relation);
    return e;
}

inline bool ledger_clean(const Ledger& l) {
    for (const auto& e : l)
        if (!e.pass) return false;
    return true;
}

namespace detail {

// Minimum degree inside the induced subgraph, as a ledger value (min over an
// empty set is +inf).
inline LedgerValue min_inside_degree(const Graph& g, VertexSet a) {
    if (a.empty()) return LedgerValue::pos_inf();
    auto [lo, hi] = degree_stats(g, a, a);
    (void)hi;
    return LedgerValue::of(Rat(lo));
}

inline LedgerValue min_cross_degree(const Graph& g, VertexSet from, VertexSet of_set) {
    if (of_set.empty()) return LedgerValue::pos_inf();
    auto [lo, hi] = degree_stats(g, from, of_set);
    (void)hi;
    return LedgerValue::of(Rat(lo));
}

inline LedgerValue max_cross_degree(const Graph& g, VertexSet from, VertexSet of_set) {
    if (of_set.empty()) return LedgerValue::neg_inf();
    auto [lo, hi] = degree_stats(g, from, of_set);
    (void)lo;
    return LedgerValue::of(Rat(hi));
}

}  // namespace detail

struct PartitionWitness {
    enum class Case { Case1, Case2, Case3, Unrefinable };
    Case tag = Case::Unrefinable;
    std::optional<VertexSet> a;  // the distinguished set of cases 2/3
    std::optional<VertexSet> x, y, z;
    std::optional<VertexSet> z1, z2, z3;  // case-3 provenance
    Ledger ledger;

    const char* tag_name() const {
        switch (tag) {
            case Case::Case1: return "Case1";
            case Case::Case2: return "Case2";
            case Case::Case3: return "Case3";
            case Case::Unrefinable: return "Unrefinable";
        }
        return "?";
    }
};

struct Case1Result {
    enum class Status { Holds, Fails, Inconclusive };
    Status status = Status::Inconclusive;
    std::optional<std::pair<VertexSet, VertexSet>> violator;
    std::uint64_t pairs_checked = 0;
    bool exhaustive = false;
};

namespace detail {

inline int cross_count(const Graph& g, VertexSet a, VertexSet b) { return edge_counts(g, a, b).second; }

inline std::vector<VertexSet> subsets_of_min_size(int n, int min_size) {
    std::vector<VertexSet> out;
    std::uint64_t full = n >= 64 ? ~0ULL : (1ULL << n) - 1;
    for (std::uint64_t s = 0; s <= full; ++s) {
        if (std::popcount(s) >= min_size) out.push_back(VertexSet(s));
        if (s == full) break;
    }
    return out;
}

}  // namespace detail

// Checks whether e(A,B) >= (alpha/2) n^2 for every pair of (not necessarily
// disjoint) sets of size at least (1-alpha)n/2. Exhaustive when the pair
// count fits the budget, otherwise seeded randomized falsification.
inline Case1Result verify_case1(const Graph& g, const ThresholdParams& p, std::uint64_t max_pairs = 1ULL << 22) {
    Case1Result res;
    int n = g.vertex_count();
    Rat bound_size = (Rat(1) - p.alpha) / Rat(2) * Rat(n);
    int min_size = 0;
    while (Rat(min_size) < bound_size) ++min_size;
    Rat rhs = p.alpha / Rat(2) * Rat(n) * Rat(n);

    auto pair_ok = [&](VertexSet a, VertexSet b) { return Rat(detail::cross_count(g, a, b)) >= rhs; };

    std::uint64_t count_sets = 0;
    {
        std::uint64_t binom = 1, total = 0;
        for (int i = 0; i <= n; ++i) {
            if (i >= min_size) total += binom;
            binom = binom * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
        }
        count_sets = total;
    }
    if (count_sets * count_sets <= max_pairs) {
        auto sets = detail::subsets_of_min_size(n, min_size);
        for (const auto& a : sets)
            for (const auto& b : sets) {
                ++res.pairs_checked;
                if (!pair_ok(a, b)) {
                    res.status = Case1Result::Status::Fails;
                    res.violator = {a, b};
                    res.exhaustive = true;
                    return res;
                }
            }
        res.status = Case1Result::Status::Holds;
        res.exhaustive = true;
        return res;
    }

    SplitMix64 rng(0x9a7c15u ^ g.hash());
    std::uint64_t samples = std::min<std::uint64_t>(max_pairs, 200000);
    for (std::uint64_t i = 0; i < samples; ++i) {
        std::uint64_t mask = n >= 64 ? ~0ULL : (1ULL << n) - 1;
        VertexSet a(rng.next() & mask), b(rng.next() & mask);
        if (a.count() < min_size || b.count() < min_size) continue;
        ++res.pairs_checked;
        if (!pair_ok(a, b)) {
            res.status = Case1Result::Status::Fails;
            res.violator = {a, b};
            return res;
        }
    }
    res.status = Case1Result::Status::Inconclusive;
    return res;
}

// Searches for |A0| = |B0| = ceil(n/2) with e(A0,B0) < alpha n^2: exhaustive
// when the pair count fits the budget, otherwise seeded local search with
// restarts. nullopt is not a proof that case 1 holds.
inline std::optional<std::pair<VertexSet, VertexSet>> find_sparse_pair(const Graph& g, const ThresholdParams& p,
                                                                       std::uint64_t max_pairs = 1ULL << 22) {
    int n = g.vertex_count();
    int h = (n + 1) / 2;
    Rat rhs = p.alpha * Rat(n) * Rat(n);
    auto sparse = [&](VertexSet a, VertexSet b) { return Rat(detail::cross_count(g, a, b)) < rhs; };

    std::uint64_t h_sets = 1;
    for (int i = 0; i < h; ++i) h_sets = h_sets * static_cast<std::uint64_t>(n - i) / static_cast<std::uint64_t>(i + 1);
    if (h_sets * h_sets <= max_pairs) {
        std::vector<VertexSet> sets;
        std::uint64_t full = (1ULL << n) - 1;
        for (std::uint64_t s = 0; s <= full; ++s) {
            if (std::popcount(s) == h) sets.push_back(VertexSet(s));
            if (s == full) break;
        }
        std::optional<std::pair<VertexSet, VertexSet>> best;
        int best_e = 0;
        for (const auto& a : sets)
            for (const auto& b : sets) {
                int e = detail::cross_count(g, a, b);
                if (!best || e < best_e) {
                    best = std::make_pair(a, b);
                    best_e = e;
                }
            }
        if (best && sparse(best->first, best->second)) return best;
        return std::nullopt;
    }

    SplitMix64 rng(0x5eedULL ^ g.hash());
    auto random_h_set = [&]() {
        VertexSet s;
        while (s.count() < h) s.add(static_cast<int>(rng.below(static_cast<std::uint64_t>(n))));
        return s;
    };
    auto improve = [&](VertexSet& a, VertexSet b) {
        // best single swap in A against fixed B
        bool improved = true;
        while (improved) {
            improved = false;
            int cur = detail::cross_count(g, a, b);
            int best_gain = 0, best_out = -1, best_in = -1;
            for (int out : a.to_vector())
                for (int in : g.all_vertices().minus(a).to_vector()) {
                    VertexSet trial = a;
                    trial.remove(out);
                    trial.add(in);
                    int val = detail::cross_count(g, trial, b);
                    if (cur - val > best_gain) {
                        best_gain = cur - val;
                        best_out = out;
                        best_in = in;
                    }
                }
            if (best_gain > 0) {
                a.remove(best_out);
                a.add(best_in);
                improved = true;
            }
        }
    };
    std::optional<std::pair<VertexSet, VertexSet>> best;
    int best_e = 0;
    for (int restart = 0; restart < 24; ++restart) {
        VertexSet a = random_h_set(), b = random_h_set();
        for (int round = 0; round < 6; ++round) {
            improve(a, b);
            improve(b, a);
        }
        int e = detail::cross_count(g, a, b);
        if (!best || e < best_e) {
            best = std::make_pair(a, b);
            best_e = e;
        }
    }
    if (best && sparse(best->first, best->second)) return best;
    return std::nullopt;
}

inline Ledger verify_case2(const Graph& g, VertexSet a, const ThresholdParams& p) {
    Ledger l;
    int n = g.vertex_count();
    VertexSet abar = g.all_vertices().minus(a);
    Rat rn(n);
    l.push_back(make_entry("case2:size-lower", LedgerValue::of((Rat(1, 2) - Rat(21) * p.alpha) * rn), "<=",
                           LedgerValue::of(Rat(a.count()))));
    l.push_back(make_entry("case2:size-upper", LedgerValue::of(Rat(a.count())), "<=",
                           LedgerValue::of((Rat(1, 2) + Rat(21) * p.alpha) * rn)));
    l.push_back(make_entry("case2:cut-sparse", LedgerValue::of(Rat(detail::cross_count(g, a, abar))), "<=",
                           LedgerValue::of(Rat(4) * p.alpha * rn * rn)));
    l.push_back(make_entry("case2:delta-A", detail::min_inside_degree(g, a), ">=", LedgerValue::of(rn / Rat(5))));
    l.push_back(
        make_entry("case2:delta-Abar", detail::min_inside_degree(g, abar), ">=", LedgerValue::of(rn / Rat(5))));
    return l;
}

inline Ledger verify_case3(const Graph& g, VertexSet a, const ThresholdParams& p) {
    Ledger l;
    int n = g.vertex_count();
    VertexSet abar = g.all_vertices().minus(a);
    Rat rn(n);
    l.push_back(make_entry("case3:size-lower", LedgerValue::of((Rat(1, 2) - Rat(25) * p.alpha) * rn), "<=",
                           LedgerValue::of(Rat(a.count()))));
    l.push_back(make_entry("case3:size-upper", LedgerValue::of(Rat(a.count())), "<=",
                           LedgerValue::of((Rat(1, 2) + Rat(25) * p.alpha) * rn)));
    l.push_back(make_entry("case3:cut-dense", LedgerValue::of(Rat(detail::cross_count(g, a, abar))), ">=",
                           LedgerValue::of((Rat(1, 4) - Rat(5) * p.alpha) * rn * rn)));
    l.push_back(make_entry("case3:inside-sparse", LedgerValue::of(Rat(edge_counts(g, a, a).first)), "<=",
                           LedgerValue::of(Rat(6) * p.alpha * rn * rn)));
    LedgerValue bip_min = LedgerValue::pos_inf();
    if (!a.empty() && !abar.empty()) {
        auto [la, ha] = degree_stats(g, abar, a);
        auto [lb, hb] = degree_stats(g, a, abar);
        (void)ha;
        (void)hb;
        bip_min = LedgerValue::of(Rat(std::min(la, lb)));
    }
    l.push_back(make_entry("case3:delta-bipartite", bip_min, ">=", LedgerValue::of(rn / Rat(5))));
    return l;
}

// The refinement from the classification proof: sparse pair in hand, the
// overlap |A0 ∩ B0| decides which case the pair refines into. The middle
// regime cannot occur under the proof's asymptotic parameters but is
// reachable at small n; it is reported as Unrefinable, never guessed.
inline PartitionWitness refine_partition(const Graph& g, VertexSet a0, VertexSet b0, const ThresholdParams& p) {
    int n = g.vertex_count();
    int h = (n + 1) / 2;
    if (a0.count() != h || b0.count() != h)
        fail(ErrorCode::BadSizes, "refine needs |A0| = |B0| = ceil(n/2)");
    int overlap = (a0 & b0).count();
    Rat rn(n);
    Rat cap_low = Rat(5) * p.alpha * rn;              // overlap <= 5 alpha n
    Rat cap_high = (Rat(1, 2) - Rat(5) * p.alpha) * rn;  // overlap >= (1/2 - 5 alpha) n

    PartitionWitness w;
    Rat deg_cut = Rat(6) * rn / Rat(25);
    bool cond_low = Rat(overlap) <= cap_low;
    bool cond_high = Rat(overlap) >= cap_high;
    // The two regimes are disjoint for alpha < 1/20; at looser desk-scale
    // parameters both conditions can hold, and the overlap's nearer pole
    // (0 or n/2) decides which refinement the proof intends.
    if (cond_low && cond_high) {
        if (Rat(overlap) <= rn / Rat(4))
            cond_high = false;
        else
            cond_low = false;
    }
    if (cond_low) {
        VertexSet xp = a0.minus(b0);
        VertexSet yp = g.all_vertices().minus(xp);
        VertexSet move_w, move_z;
        for (int v : xp.to_vector())
            if (Rat(std::popcount(g.neighbors(v) & xp.bits)) <= deg_cut) move_w.add(v);
        for (int v : yp.to_vector())
            if (Rat(std::popcount(g.neighbors(v) & yp.bits)) <= deg_cut) move_z.add(v);
        VertexSet x = xp.minus(move_w) | move_z;
        VertexSet y = yp.minus(move_z) | move_w;
        w.tag = PartitionWitness::Case::Case2;
        w.a = x;
        w.x = x;
        w.y = y;
        w.ledger = verify_case2(g, x, p);
        return w;
    }
    if (cond_high) {
        VertexSet xp = a0 & b0;
        VertexSet yp = g.all_vertices().minus(xp);
        VertexSet move_w, move_z;
        for (int v : xp.to_vector())
            if (Rat(std::popcount(g.neighbors(v) & yp.bits)) <= deg_cut) move_w.add(v);
        for (int v : yp.to_vector())
            if (Rat(std::popcount(g.neighbors(v) & xp.bits)) <= deg_cut) move_z.add(v);
        VertexSet x = xp.minus(move_w) | move_z;
        VertexSet y = yp.minus(move_z) | move_w;
        w.tag = PartitionWitness::Case::Case3;
        w.a = x;
        w.x = x;
        w.y = y;
        w.ledger = verify_case3(g, x, p);
        return w;
    }
    w.tag = PartitionWitness::Case::Unrefinable;
    w.ledger.push_back(
        make_entry("refine:overlap-low", LedgerValue::of(Rat(overlap)), "<=", LedgerValue::of(cap_low)));
    w.ledger.push_back(
        make_entry("refine:overlap-high", LedgerValue::of(Rat(overlap)), ">=", LedgerValue::of(cap_high)));
    return w;
}

// Case-2 pipeline: Z collects the vertices with >= eta n neighbors across
// the cut, X and Y are what remains on each side.
inline PartitionWitness build_case2_partition(const Graph& g, VertexSet a, const ThresholdParams& p) {
    int n = g.vertex_count();
    Rat rn(n);
    VertexSet abar = g.all_vertices().minus(a);
    VertexSet z;
    for (int v : a.to_vector())
        if (Rat(std::popcount(g.neighbors(v) & abar.bits)) >= p.eta * rn) z.add(v);
    for (int v : abar.to_vector())
        if (Rat(std::popcount(g.neighbors(v) & a.bits)) >= p.eta * rn) z.add(v);
    VertexSet x = a.minus(z), y = abar.minus(z);

    PartitionWitness w;
    w.tag = PartitionWitness::Case::Case2;
    w.a = a;
    w.x = x;
    w.y = y;
    w.z = z;
    Ledger& l = w.ledger;
    l.push_back(make_entry("cliquepair-partition:Z-small", LedgerValue::of(Rat(z.count())), "<=",
                           LedgerValue::of(p.alpha * rn / Rat(2))));
    l.push_back(make_entry("cliquepair-partition:X-lower", LedgerValue::of((Rat(1, 2) - p.alpha) * rn), "<=",
                           LedgerValue::of(Rat(x.count()))));
    l.push_back(make_entry("cliquepair-partition:X-upper", LedgerValue::of(Rat(x.count())), "<=",
                           LedgerValue::of((Rat(1, 2) + p.alpha) * rn)));
    l.push_back(make_entry("cliquepair-partition:Y-lower", LedgerValue::of((Rat(1, 2) - p.alpha) * rn), "<=",
                           LedgerValue::of(Rat(y.count()))));
    l.push_back(make_entry("cliquepair-partition:Y-upper", LedgerValue::of(Rat(y.count())), "<=",
                           LedgerValue::of((Rat(1, 2) + p.alpha) * rn)));
    Rat deg_bound = (Rat(1, 2) - Rat(2) * p.eta) * rn;
    l.push_back(make_entry("cliquepair-partition:delta-X", detail::min_inside_degree(g, x), ">=", LedgerValue::of(deg_bound)));
    l.push_back(make_entry("cliquepair-partition:delta-Y", detail::min_inside_degree(g, y), ">=", LedgerValue::of(deg_bound)));
    Rat z_bound = Rat(3, 4) * p.eta * rn;
    l.push_back(make_entry("cliquepair-partition:deltaX-Z", detail::min_cross_degree(g, x, z), ">=", LedgerValue::of(z_bound)));
    l.push_back(make_entry("cliquepair-partition:deltaY-Z", detail::min_cross_degree(g, y, z), ">=", LedgerValue::of(z_bound)));
    l.push_back(make_entry("cliquepair-partition:DeltaX-Y", detail::max_cross_degree(g, x, y), "<=",
                           LedgerValue::of(p.eta * rn)));
    l.push_back(make_entry("cliquepair-partition:DeltaY-X", detail::max_cross_degree(g, y, x), "<=",
                           LedgerValue::of(p.eta * rn)));
    l.push_back(make_entry("cliquepair-partition:cross-sparse", LedgerValue::of(Rat(detail::cross_count(g, x, y))), "<=",
                           LedgerValue::of(p.alpha * rn * rn)));
    return w;
}

// Case-3 pipeline: Z1/Z2 catch dense-inside vertices, Z3 the cross-starved
// ones; the assembled Z follows the two-branch rule on |Z2|.
inline PartitionWitness build_case3_partition(const Graph& g, VertexSet a, const ThresholdParams& p) {
    int n = g.vertex_count();
    Rat rn(n);
    VertexSet abar = g.all_vertices().minus(a);
    VertexSet z1, z2, z3;
    for (int v : a.to_vector())
        if (Rat(std::popcount(g.neighbors(v) & a.bits)) >= p.eta * rn) z1.add(v);
    for (int v : abar.to_vector()) {
        if (Rat(std::popcount(g.neighbors(v) & abar.bits)) >= p.eta * rn) z2.add(v);
        if (Rat(std::popcount(g.neighbors(v) & a.bits)) < (Rat(1, 2) - p.eta) * rn) z3.add(v);
    }
    VertexSet z;
    std::string branch;
    Rat z2_cap = Rat(2, 3) * p.alpha * rn;
    bool small_z2 = Rat(z2.count()) <= z2_cap;
    if (small_z2) {
        z = z1 | z2;
        branch = "Z1+Z2";
    } else {
        // |Z2'| = 2 alpha n / 3 - |Z3|, floored and clamped; members taken
        // from Z2 \ Z3 by ascending index.
        long long target = (2 * p.alpha.num * n) / (3 * p.alpha.den) - z3.count();
        VertexSet z2prime;
        for (int v : z2.minus(z3).to_vector()) {
            if (static_cast<long long>(z2prime.count()) >= target) break;
            z2prime.add(v);
        }
        z = z1 | z2prime | z3;
        branch = "Z1+Z2'+Z3";
    }
    VertexSet x = a.minus(z), y = abar.minus(z);
    if (small_z2 && x.count() < y.count()) std::swap(x, y);  // symmetric branch, keep |X| >= |Y|

    PartitionWitness w;
    w.tag = PartitionWitness::Case::Case3;
    w.a = a;
    w.x = x;
    w.y = y;
    w.z = z;
    w.z1 = z1;
    w.z2 = z2;
    w.z3 = z3;
    Ledger& l = w.ledger;
    l.push_back(make_entry("bipartite-partition:Y-lower", LedgerValue::of((Rat(1, 2) - p.alpha) * rn), "<=",
                           LedgerValue::of(Rat(y.count()))));
    l.push_back(make_entry("bipartite-partition:order", LedgerValue::of(Rat(y.count())), "<=",
                           LedgerValue::of(Rat(x.count()))));
    l.push_back(make_entry("bipartite-partition:X-upper", LedgerValue::of(Rat(x.count())), "<=",
                           LedgerValue::of((Rat(1, 2) + p.alpha) * rn)));
    l.push_back(make_entry("bipartite-partition:Z-small", LedgerValue::of(Rat(z.count())), "<=", LedgerValue::of(p.alpha * rn)));
    l.push_back(make_entry("bipartite-partition:Delta-inside-X", detail::max_cross_degree(g, x, x), "<=",
                           LedgerValue::of(p.eta * rn)));
    Rat deg_bound = (Rat(1, 2) - Rat(2) * p.eta) * rn;
    l.push_back(make_entry("bipartite-partition:deltaX-Y", detail::min_cross_degree(g, x, y), ">=", LedgerValue::of(deg_bound)));
    l.push_back(make_entry("bipartite-partition:deltaY-X", detail::min_cross_degree(g, y, x), ">=", LedgerValue::of(deg_bound)));
    Rat z_bound = Rat(3, 4) * p.eta * rn;
    l.push_back(make_entry("bipartite-partition:deltaX-Z", detail::min_cross_degree(g, x, z), ">=", LedgerValue::of(z_bound)));
    l.push_back(make_entry("bipartite-partition:deltaY-Z", detail::min_cross_degree(g, y, z), ">=", LedgerValue::of(z_bound)));
    auto [f_value, f_witness] = max_linear_forest(induced(g, x).graph);
    (void)f_witness;
    LedgerValue delta_x = detail::min_inside_degree(g, x);
    LedgerValue two_delta = delta_x.ext == LedgerValue::Ext::PosInf
                                ? LedgerValue::pos_inf()
                                : LedgerValue::of(Rat(2) * delta_x.value);
    l.push_back(make_entry("bipartite-partition:f-claim", LedgerValue::of(Rat(f_value)), ">=",
                           x.empty() ? LedgerValue::of(Rat(0)) : two_delta));
    return w;
}

// Evaluates every hypothesis of the generation criterion matching the
// witness shape (Case2 -> clique pair, Case3 -> near-bipartite, Case1 ->
// locally dense) and appends the generation conclusion plus a consistency
// verdict: hypotheses all true with a certified NotGenerated conclusion is
// the one outcome the theory forbids.
inline Ledger lemma_hypothesis_report(const Graph& g, const PartitionWitness& w, const ThresholdParams& p,
                                      const SearchBudget& budget = SearchBudget::defaults()) {
    Ledger l;
    int n = g.vertex_count();
    Rat rn(n);
    if (w.tag == PartitionWitness::Case::Case2 || w.tag == PartitionWitness::Case::Case3) {
        if (!w.x || !w.y || !w.z) fail(ErrorCode::ShapeMismatch, "witness lacks X/Y/Z sets");
        VertexSet x = *w.x, y = *w.y, z = *w.z;
        if (!((x | y | z) == g.all_vertices()) || !(x & y).empty() || !(x & z).empty() || !(y & z).empty())
            fail(ErrorCode::ShapeMismatch, "X,Y,Z must partition the vertex set");
    }
    switch (w.tag) {
        case PartitionWitness::Case::Case2: {
            VertexSet x = *w.x, y = *w.y, z = *w.z;
            l.push_back(make_entry("cliquepair:n-odd", LedgerValue::of(Rat(n % 2)), "=", LedgerValue::of(Rat(1))));
            l.push_back(make_entry("cliquepair:X-lower", LedgerValue::of((Rat(1, 2) - p.alpha) * rn), "<=",
                                   LedgerValue::of(Rat(x.count()))));
            l.push_back(make_entry("cliquepair:X-upper", LedgerValue::of(Rat(x.count())), "<=",
                                   LedgerValue::of((Rat(1, 2) + p.alpha) * rn)));
            l.push_back(make_entry("cliquepair:Y-lower", LedgerValue::of((Rat(1, 2) - p.alpha) * rn), "<=",
                                   LedgerValue::of(Rat(y.count()))));
            l.push_back(make_entry("cliquepair:Y-upper", LedgerValue::of(Rat(y.count())), "<=",
                                   LedgerValue::of((Rat(1, 2) + p.alpha) * rn)));
            l.push_back(
                make_entry("cliquepair:Z-small", LedgerValue::of(Rat(z.count())), "<=", LedgerValue::of(p.alpha * rn)));
            l.push_back(make_entry("cliquepair:cross-sparse", LedgerValue::of(Rat(detail::cross_count(g, x, y))), "<=",
                                   LedgerValue::of(p.alpha * rn * rn)));
            LedgerValue dmax = std::max(detail::max_cross_degree(g, x, y), detail::max_cross_degree(g, y, x),
                                        [](const LedgerValue& u, const LedgerValue& v) { return u <= v && !(v <= u); });
            l.push_back(make_entry("cliquepair:Delta-cross", dmax, "<=", LedgerValue::of(p.eta * rn)));
            LedgerValue dmin = detail::min_inside_degree(g, x);
            LedgerValue dy = detail::min_inside_degree(g, y);
            if (dy <= dmin) dmin = dy;
            l.push_back(make_entry("cliquepair:delta-inside", dmin, ">=",
                                   LedgerValue::of((Rat(1, 2) - Rat(2) * p.eta) * rn)));
            LedgerValue dz = detail::min_cross_degree(g, x, z);
            LedgerValue dzy = detail::min_cross_degree(g, y, z);
            if (dzy <= dz) dz = dzy;
            l.push_back(make_entry("cliquepair:delta-Z", dz, ">=", LedgerValue::of(Rat(3, 4) * p.eta * rn)));
            int match = bipartite_matching(bipartite_between(g, x, y), x, y).size();
            Rat cod = Rat(4, 3) * Rat(z.count()) + Rat(match);
            l.push_back(make_entry("cliquepair:matching-bound", LedgerValue::of(cod), ">=", LedgerValue::of(Rat(10, 3))));
            break;
        }
        case PartitionWitness::Case::Case3: {
            VertexSet x = *w.x, y = *w.y, z = *w.z;
            l.push_back(make_entry("bipartite:Y-lower", LedgerValue::of((Rat(1, 2) - p.alpha) * rn), "<=",
                                   LedgerValue::of(Rat(y.count()))));
            l.push_back(make_entry("bipartite:order", LedgerValue::of(Rat(y.count())), "<=",
                                   LedgerValue::of(Rat(x.count()))));
            l.push_back(make_entry("bipartite:X-upper", LedgerValue::of(Rat(x.count())), "<=",
                                   LedgerValue::of((Rat(1, 2) + p.alpha) * rn)));
            l.push_back(
                make_entry("bipartite:Z-small", LedgerValue::of(Rat(z.count())), "<=", LedgerValue::of(p.alpha * rn)));
            l.push_back(make_entry("bipartite:Delta-inside-X", detail::max_cross_degree(g, x, x), "<=",
                                   LedgerValue::of(p.eta * rn)));
            LedgerValue dmin = detail::min_cross_degree(g, x, y);
            LedgerValue dyx = detail::min_cross_degree(g, y, x);
            if (dyx <= dmin) dmin = dyx;
            l.push_back(make_entry("bipartite:delta-cross", dmin, ">=",
                                   LedgerValue::of((Rat(1, 2) - Rat(2) * p.eta) * rn)));
            LedgerValue dz = detail::min_cross_degree(g, x, z);
            LedgerValue dzy = detail::min_cross_degree(g, y, z);
            if (dzy <= dz) dz = dzy;
            l.push_back(make_entry("bipartite:delta-Z", dz, ">=", LedgerValue::of(Rat(3, 4) * p.eta * rn)));
            auto [f_value, f_witness] = max_linear_forest(induced(g, x).graph);
            (void)f_witness;
            Rat t = Rat(x.count()) - Rat(y.count()) - Rat(z.count());
            l.push_back(make_entry("bipartite:deficit-bound", LedgerValue::of(t), "<=", LedgerValue::of(Rat(f_value - 1))));
            break;
        }
        case PartitionWitness::Case::Case1: {
            l.push_back(make_entry("dense:min-degree", LedgerValue::of(Rat(2 * g.min_degree())), ">=",
                                   LedgerValue::of(Rat(n - 1))));
            bool hc = is_hamilton_connected(g).connected;
            l.push_back(make_entry("dense:hamilton-connected", LedgerValue::of(Rat(hc ? 1 : 0)), "=",
                                   LedgerValue::of(Rat(1))));
            ThresholdParams local = p;
            local.alpha = p.gamma;  // the density hypothesis is quantified with gamma
            Case1Result c1 = verify_case1(g, local);
            LedgerEntry density = make_entry("dense:local-density",
                                             LedgerValue::of(Rat(c1.status == Case1Result::Status::Holds ? 1 : 0)),
                                             "=", LedgerValue::of(Rat(1)));
            if (c1.status == Case1Result::Status::Inconclusive) {
                density.pass = false;
                density.note = "inconclusive";
            }
            l.push_back(density);
            break;
        }
        case PartitionWitness::Case::Unrefinable:
            fail(ErrorCode::ShapeMismatch, "unrefinable witness matches no lemma");
    }
    bool hyps_pass = ledger_clean(l);

    HamGenStatus st = is_hamilton_generated(g, budget);
    LedgerEntry conclusion = make_entry("conclusion:hamilton-generated",
                                        LedgerValue::of(Rat(st.kind == HamGenStatus::Kind::Generated ? 1 : 0)), "=",
                                        LedgerValue::of(Rat(1)));
    if (st.kind == HamGenStatus::Kind::Inconclusive) conclusion.note = "inconclusive";
    l.push_back(conclusion);

    bool inconsistent = hyps_pass && st.kind == HamGenStatus::Kind::NotGenerated;
    LedgerEntry consistency = make_entry("consistency", LedgerValue::of(Rat(inconsistent ? 0 : 1)), "=",
                                         LedgerValue::of(Rat(1)));
    if (st.kind == HamGenStatus::Kind::Inconclusive) consistency.note = "conclusion undecided";
    l.push_back(consistency);
    return l;
}

// Canonical lemma shapes for the three constructions: the bipartite-dense
// variant 1 matches the bipartite shape on its sides; variant 2's two
// cliques meet the clique-pair shape after moving the shared pair {a1, b1}
// to Z; variant 3 is the clean clique-pair instance.
inline PartitionWitness canonical_shape(const LabeledConstruction& c) {
    PartitionWitness w;
    switch (c.variant) {
        case 1: {
            w.tag = PartitionWitness::Case::Case3;
            w.a = c.x;
            w.x = c.x;
            w.y = c.y;
            w.z = VertexSet{};
            break;
        }
        case 2: {
            w.tag = PartitionWitness::Case::Case2;
            VertexSet x = c.x, y = c.y, z;
            x.remove(c.a[0]);
            y.remove(c.b[0]);
            z.add(c.a[0]);
            z.add(c.b[0]);
            w.a = x;
            w.x = x;
            w.y = y;
            w.z = z;
            break;
        }
        case 3: {
            w.tag = PartitionWitness::Case::Case2;
            w.a = c.x;
            w.x = c.x;
            w.y = c.y;
            w.z = VertexSet{};
            break;
        }
        default:
            fail(ErrorCode::ShapeMismatch, "unknown construction variant");
    }
    return w;
}

}  // namespace hamgen
