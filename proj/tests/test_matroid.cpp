#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "matkit/count_matroid.hpp"
#include "matkit/matroid.hpp"
#include "matkit/suites.hpp"

using namespace matkit;

namespace {

RankOracle graphic(const MultiGraph& g) { return count_oracle(g, CountParams(1, 1)); }

Bitset all_edges(const MultiGraph& g) { return Bitset::full(g.num_edges()); }

} // namespace

TEST_CASE("union rank on named inputs") {
    MultiGraph k4 = make_complete(4);
    std::vector<RankOracle> two_k4(2, graphic(k4));
    CHECK(union_rank(two_k4, all_edges(k4)).rank == 6); // two spanning trees
    CHECK(union_rank(two_k4, Bitset(6)).rank == 0);
    CHECK(union_rank_exhaustive(two_k4, all_edges(k4)) == 6);

    MultiGraph c3 = make_cycle(3);
    std::vector<RankOracle> two_c3(2, graphic(c3));
    CHECK(union_rank(two_c3, all_edges(c3)).rank == 3);
    CHECK(union_rank_exhaustive(two_c3, all_edges(c3)) == 3);
}

TEST_CASE("union engines agree and parts are independent") {
    std::mt19937 rng(3);
    for (int it = 0; it < 150; ++it) {
        MultiGraph g = random_multigraph(rng, 2 + int(rng() % 4), 2, 12);
        int copies = 2 + int(rng() % 2);
        RankOracle base = it % 2 ? graphic(g) : count_oracle(g, CountParams(2, 3));
        std::vector<RankOracle> oracles(copies, base);
        Bitset q(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e)
            if (rng() % 3) q.set(e);
        UnionResult ur = union_rank(oracles, q);
        CHECK(ur.rank == union_rank_exhaustive(oracles, q));
        int total = 0;
        for (int i = 0; i < copies; ++i) {
            CHECK(base.rank(ur.parts[i]) == int(ur.parts[i].count()));
            CHECK((ur.parts[i] - q).empty());
            total += int(ur.parts[i].count());
        }
        CHECK(total == ur.rank);
    }
}

TEST_CASE("closure and hyperplanes") {
    MultiGraph k4 = make_complete(4);
    RankOracle o = graphic(k4);
    // triangle on vertices {0,1,2}: edges with both ends < 3
    Bitset tri(6);
    for (int e = 0; e < 6; ++e)
        if (k4.edge(e).u < 3 && k4.edge(e).v < 3) tri.set(e);
    REQUIRE(tri.count() == 3);
    CHECK(closure(o, tri) == tri);
    CHECK(is_closed(o, tri));
    Bitset tree = greedy_basis(o, all_edges(k4));
    CHECK(closure(o, tree) == all_edges(k4));

    MultiGraph c4 = make_cycle(4);
    RankOracle oc = graphic(c4);
    Bitset three = Bitset::of(4, {0, 1, 2});
    CHECK(closure(oc, three) == all_edges(c4));

    CHECK(is_k_hyperplane(o, tri, 1)); // triangle = complement of a star in K_4
    CHECK(!is_k_hyperplane(o, all_edges(k4), 1));

    MultiGraph k8 = make_complete(8);
    RankOracle o8 = count_oracle(k8, CountParams(2, 3));
    Bitset f = all_edges(k8) - k8.star(0);
    CHECK(is_k_hyperplane(o8, f, 2));
}

TEST_CASE("fundamental circuits") {
    MultiGraph c3 = make_cycle(3);
    RankOracle o = graphic(c3);
    Bitset b = Bitset::of(3, {0, 1});
    CHECK(fundamental_circuit(o, b, 2) == Bitset::full(3));
    CHECK_THROWS(fundamental_circuit(graphic(make_path(3)),
                                     Bitset::of(2, {0}), 1)); // independent element

    MultiGraph k4 = make_complete(4);
    RankOracle o23 = count_oracle(k4, CountParams(2, 3));
    Bitset basis = greedy_basis(o23, all_edges(k4));
    int extra = 0;
    while (basis.test(extra)) ++extra;
    CHECK(fundamental_circuit(o23, basis, extra) == all_edges(k4)); // K_4 is a circuit

    MultiGraph pp = make_parallel_pair(2);
    CHECK(fundamental_circuit(graphic(pp), Bitset::of(2, {0}), 1) == Bitset::full(2));
}

TEST_CASE("components") {
    Components two = components(graphic(disjoint_union(make_cycle(3), make_cycle(3))));
    CHECK(two.parts.size() == 2);
    CHECK(two.count_nontrivial() == 2);

    Components tree = components(graphic(make_path(5)));
    CHECK(tree.parts.size() == 4);
    CHECK(tree.count_nontrivial() == 0);

    Components k7 = components(count_oracle(make_complete(7), CountParams(2, 3)));
    CHECK(k7.parts.size() == 1);
    CHECK(k7.count_nontrivial() == 1);
}

TEST_CASE("components: fixed-basis engine equals brute force") {
    std::mt19937 rng(7);
    std::vector<std::pair<int, int>> pairs{{1, 1}, {2, 3}, {2, 0}, {1, 0}, {2, -1}};
    for (int it = 0; it < 250; ++it) {
        MultiGraph g = random_multigraph(rng, 2 + int(rng() % 4), 2, 12);
        auto [k, l] = pairs[it % pairs.size()];
        RankOracle o = count_oracle(g, CountParams(k, l));
        Components a = components(o);
        Components b = components_bruteforce(o);
        std::vector<Bitset> pa = a.parts, pb = b.parts;
        std::sort(pa.begin(), pa.end());
        std::sort(pb.begin(), pb.end());
        CHECK(pa == pb);
        int rank_sum = 0;
        for (const Bitset& part : pa) rank_sum += o.rank(part);
        CHECK(rank_sum == o.full_rank());
    }
}

TEST_CASE("vertical connectivity") {
    MultiGraph bowtie =
        MultiGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    CHECK(vertical_connectivity(graphic(bowtie)).value == 1);

    MultiGraph bridge = make_path(2);
    MultiGraph with_bridge = MultiGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    VerticalConnectivity vb = vertical_connectivity(graphic(with_bridge));
    CHECK(vb.value == 1);
    REQUIRE(vb.witness.has_value());
    CHECK((vb.witness->e1.count() == 1 || vb.witness->e2.count() == 1));

    MultiGraph k5 = make_complete(5);
    VerticalConnectivity v5 = vertical_connectivity(graphic(k5));
    CHECK(v5.value == 4);
    CHECK(v5.value == vertical_connectivity_serial(graphic(k5)).value);

    // witness inequalities
    std::mt19937 rng(13);
    for (int it = 0; it < 60; ++it) {
        MultiGraph g = random_simple_graph(rng, 4 + int(rng() % 3), 0.6);
        if (g.num_edges() < 2) continue;
        RankOracle o = graphic(g);
        VerticalConnectivity vc = vertical_connectivity(o);
        if (!vc.witness) continue;
        const Separation& s = *vc.witness;
        CHECK(s.r1 >= s.order);
        CHECK(s.r2 >= s.order);
        CHECK(s.r1 + s.r2 <= o.full_rank() + s.order - 1);
        CHECK((s.e1 & s.e2).empty());
        CHECK((s.e1 | s.e2) == all_edges(g));
    }

    // refusal above the exhaustive cap
    MultiGraph k7 = make_complete(7); // 21 edges > 20
    CHECK_THROWS(vertical_connectivity(graphic(k7)));

    // vconn >= 2 iff single nontrivial component
    for (int it = 0; it < 80; ++it) {
        MultiGraph g = random_simple_graph(rng, 5, 0.55);
        if (g.num_edges() < 2) continue;
        RankOracle o = graphic(g);
        Components c = components(o);
        bool conn = c.parts.size() == 1 && c.parts[0].count() >= 2;
        CHECK((vertical_connectivity(o).value >= 2) == conn);
    }
}

TEST_CASE("rank axiom checker accepts matroids and rejects non-matroids") {
    CHECK(check_rank_axioms(graphic(make_complete(5)), 400, 1));
    RankOracle bogus;
    bogus.m = 6;
    bogus.rank = [](const Bitset& s) { // fails submodularity
        int c = int(s.count());
        return c <= 1 ? c : (c >= 4 ? 4 : c == 2 ? 1 : 3);
    };
    CHECK(!check_rank_axioms(bogus, 400, 1));
}

TEST_CASE("restrict oracle") {
    MultiGraph k4 = make_complete(4);
    RankOracle o = graphic(k4);
    Bitset within = Bitset::of(6, {0, 2, 4});
    RankOracle r = restrict_oracle(o, within);
    CHECK(r.m == 3);
    CHECK(r.full_rank() == o.rank(within));
}
