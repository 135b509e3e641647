#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "matkit/cofactor.hpp"
#include "matkit/count_matroid.hpp"
#include "matkit/reconstruct.hpp"

using namespace matkit;

namespace {

Bitset all_edges(const MultiGraph& g) { return Bitset::full(g.num_edges()); }

void check_roundtrip(const MultiGraph& hidden, FamilyTag tag) {
    MultiGraph out = reconstruct(make_labeled(hidden, tag));
    CHECK(isomorphic(out, hidden).has_value());
}

} // namespace

TEST_CASE("star complements of K_4 in the graphic matroid") {
    MultiGraph k4 = make_complete(4);
    RankOracle o = count_oracle(k4, CountParams(1, 1));
    auto stars = find_star_complements(o, 1);
    REQUIRE(stars.size() == 4); // the four triangles
    for (const Bitset& f : stars) {
        CHECK(f.count() == 3);
        CHECK(o.rank(f) == 2);
        CHECK(is_closed(o, f));
    }
}

TEST_CASE("star complements of K_8 in M_{2,3}") {
    MultiGraph k8 = make_complete(8);
    RankOracle o = count_oracle(k8, CountParams(2, 3));
    auto stars = find_star_complements(o, 2);
    std::vector<Bitset> expected;
    for (int v = 0; v < 8; ++v) expected.push_back(all_edges(k8) - k8.star(v));
    std::sort(expected.begin(), expected.end());
    std::vector<Bitset> got = stars;
    std::sort(got.begin(), got.end());
    CHECK(got == expected);
}

TEST_CASE("non-3-connected input yields no usable star family") {
    MultiGraph c4 = make_cycle(4);
    RankOracle o = count_oracle(c4, CountParams(1, 1));
    // this must not crash; downstream reconstruction refuses such inputs
    auto stars = find_star_complements(o, 1);
    CHECK(stars.size() != 4);
    CHECK_THROWS(reconstruct(make_labeled(c4, {FamilyTag::Count, 1, 1, 1})));
}

TEST_CASE("assemble") {
    MultiGraph k4 = make_complete(4);
    std::vector<std::string> ids;
    for (const auto& e : k4.edges()) ids.push_back(e.id);
    std::vector<Bitset> stars;
    for (int v = 0; v < 4; ++v) stars.push_back(k4.star(v));
    CHECK(isomorphic(assemble(stars, ids), k4).has_value());

    // two parallel edges: both stars contain both edges
    std::vector<Bitset> pp{Bitset::full(2), Bitset::full(2)};
    MultiGraph p = assemble(pp, {"e0", "e1"});
    CHECK(p.num_vertices() == 2);
    CHECK(p.num_edges() == 2);

    MultiGraph w5 = make_wheel(5);
    std::vector<std::string> wids;
    for (const auto& e : w5.edges()) wids.push_back(e.id);
    std::vector<Bitset> wstars;
    for (int v = 0; v < 5; ++v) wstars.push_back(w5.star(v));
    CHECK(isomorphic(assemble(wstars, wids), w5).has_value());

    // an edge in only one star is not a star family
    CHECK_THROWS(assemble({Bitset::full(2), Bitset::of(2, {0})}, {"e0", "e1"}));
}

TEST_CASE("count reconstruction roundtrips") {
    check_roundtrip(make_complete(5), {FamilyTag::Count, 1, 1, 1});
    check_roundtrip(make_complete(4), {FamilyTag::Count, 1, 1, 1});
    check_roundtrip(make_wheel(6), {FamilyTag::Count, 1, 1, 1});
    check_roundtrip(make_complete(8), {FamilyTag::Count, 2, 3, 1}); // 7-connected >= 2l+1
}

TEST_CASE("count reconstruction refuses disconnected matroids") {
    MultiGraph two_cycles = disjoint_union(make_cycle(3), make_cycle(4));
    CHECK_THROWS(reconstruct(make_labeled(two_cycles, {FamilyTag::Count, 1, 1, 1})));
}

TEST_CASE("bicircular reconstruction") {
    check_roundtrip(make_wheel(6), {FamilyTag::Count, 1, 0, 1}); // wheel hub special case
    check_roundtrip(make_complete(5), {FamilyTag::Count, 1, 0, 1});

    // C_6 and P_7 have identical (free, rank-6) bicircular matroids
    MultiGraph c6 = make_cycle(6);
    MultiGraph p7 = make_path(7);
    RankOracle oc = count_oracle(c6, CountParams(1, 0));
    RankOracle op = count_oracle(p7, CountParams(1, 0));
    REQUIRE(oc.m == op.m);
    for (unsigned mask = 0; mask < (1u << 6); ++mask) {
        Bitset s(6);
        for (int i = 0; i < 6; ++i)
            if ((mask >> i) & 1) s.set(i);
        CHECK(oc.rank(s) == op.rank(s));
    }
    CHECK_THROWS(reconstruct(make_labeled(c6, {FamilyTag::Count, 1, 0, 1})));
    CHECK_THROWS(reconstruct(make_labeled(p7, {FamilyTag::Count, 1, 0, 1})));
}

TEST_CASE("cofactor reconstruction") {
    check_roundtrip(make_complete(6), {FamilyTag::Cofactor, 1, 1, 1});
    MultiGraph two_k6 = disjoint_union(make_complete(6), make_complete(6));
    CHECK_THROWS(reconstruct(make_labeled(two_k6, {FamilyTag::Cofactor, 1, 1, 1})));
}

TEST_CASE("labeled matroid json") {
    std::string text = R"({
      "elements": ["e0","e1","e2","e3","e4","e5"],
      "family": {"count": {"k": 1, "l": 1}},
      "graph": {"vertices":["a","b","c","d"],
                "edges":[{"id":"e0","ends":["a","b"]},{"id":"e1","ends":["a","c"]},
                         {"id":"e2","ends":["a","d"]},{"id":"e3","ends":["b","c"]},
                         {"id":"e4","ends":["b","d"]},{"id":"e5","ends":["c","d"]}]}
    })";
    LabeledMatroid m = read_labeled_matroid(text);
    CHECK(m.elements.size() == 6);
    CHECK(m.oracle.full_rank() == 3);
    MultiGraph out = reconstruct(m);
    CHECK(isomorphic(out, make_complete(4)).has_value());

    CHECK_THROWS(read_labeled_matroid(R"({"elements": []})"));
    CHECK_THROWS(read_labeled_matroid(R"({
      "elements": ["x"],
      "family": {"count": {"k": 0, "l": 0}},
      "graph": {"vertices":["a","b"],"edges":[{"id":"x","ends":["a","b"]}]}
    })"));
}
