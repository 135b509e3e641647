#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "matkit/graph.hpp"
#include "matkit/suites.hpp"

using namespace matkit;

namespace {

// Brute-force vertex connectivity: smallest vertex cut, n-1 for complete.
int vertex_connectivity_brute(const MultiGraph& g) {
    int n = g.num_vertices();
    auto adj = g.simple_adjacency();
    auto connected_without = [&](unsigned removed) {
        int start = -1, kept = 0;
        for (int v = 0; v < n; ++v)
            if (!((removed >> v) & 1)) {
                if (start < 0) start = v;
                ++kept;
            }
        if (kept <= 1) return true;
        std::vector<bool> seen(n, false);
        std::vector<int> stack{start};
        seen[start] = true;
        int reached = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            for (int w : adj[u])
                if (!seen[w] && !((removed >> w) & 1)) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        return reached == kept;
    };
    for (int size = 0; size <= n - 2; ++size)
        for (unsigned mask = 0; mask < (1u << n); ++mask)
            if (__builtin_popcount(mask) == size && !connected_without(mask)) return size;
    return n - 1;
}

MultiGraph two_triangles_shared_vertex() {
    return MultiGraph::from_edges(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
}

} // namespace

TEST_CASE("vertex connectivity on named graphs") {
    CHECK(vertex_connectivity(make_complete(6)) == 5);
    CHECK(vertex_connectivity(two_triangles_shared_vertex()) == 1);
    CHECK(vertex_connectivity(make_lovasz_yemini(2, 3)) == 5);
    CHECK_THROWS(vertex_connectivity(MultiGraph::from_edges(1, {})));
}

TEST_CASE("vertex connectivity agrees with brute force on small graphs") {
    std::mt19937 rng(42);
    for (int it = 0; it < 400; ++it) {
        MultiGraph g = random_simple_graph(rng, 3 + int(rng() % 4), 0.55);
        if (g.num_vertices() < 2) continue;
        int fast = vertex_connectivity(g);
        CHECK(fast == vertex_connectivity_brute(g));
        CHECK(fast == vertex_connectivity_serial(g));
    }
}

TEST_CASE("edge connectivity") {
    CHECK(edge_connectivity(make_cycle(5)) == 2);
    CHECK(edge_connectivity(make_complete(4)) == 3);
    CHECK(edge_connectivity(make_parallel_pair(3)) == 3);
    CHECK(edge_connectivity(disjoint_union(make_cycle(3), make_cycle(3))) == 0);
}

TEST_CASE("smooth orientation balance") {
    {
        MultiGraph c3 = make_cycle(3);
        auto in = in_degrees(c3, smooth_orientation(c3));
        for (int v = 0; v < 3; ++v) CHECK(in[v] == 1);
    }
    {
        MultiGraph e = make_path(2);
        auto in = in_degrees(e, smooth_orientation(e));
        CHECK(in[0] + in[1] == 1);
    }
    {
        MultiGraph k4 = make_complete(4);
        auto in = in_degrees(k4, smooth_orientation(k4));
        for (int v = 0; v < 4; ++v) CHECK((in[v] == 1 || in[v] == 2));
    }
    std::mt19937 rng(1);
    for (int it = 0; it < 1000; ++it) {
        MultiGraph g = random_multigraph(rng, 2 + int(rng() % 7), 3, 24);
        auto in = in_degrees(g, smooth_orientation(g));
        for (int v = 0; v < g.num_vertices(); ++v)
            CHECK(std::abs(2 * in[v] - g.degree(v)) <= 1);
    }
}

TEST_CASE("constructions") {
    MultiGraph ly = make_lovasz_yemini(2, 3);
    CHECK(ly.num_vertices() == 40);
    CHECK(ly.num_edges() == 100);
    CHECK(ly.is_simple());

    MultiGraph w5 = make_wheel(5);
    CHECK(w5.num_vertices() == 5);
    CHECK(w5.num_edges() == 8);

    CHECK_THROWS(make_lovasz_yemini(2, 2)); // needs k < l
    CHECK_THROWS(make_cofactor_packing(11, 2));

    CofactorPacking pk = make_cofactor_packing(12, 2);
    CHECK(pk.parts.size() == 2);
    CHECK(pk.parts[0].count() == 33); // 15 intra-K_6 + 18 degree-3 cross edges
    CHECK((pk.parts[0] & pk.parts[1]).empty());
    for (int i = 0; i < 2; ++i) {
        MultiGraph gi = pk.kn.edge_subgraph(pk.parts[i]);
        for (int v = 0; v < 12; ++v)
            if (v / 6 != i) CHECK(gi.degree(v) == 3);
    }
}

TEST_CASE("lovasz-yemini connectivity is exactly 2l-1") {
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {3, 5}})
        CHECK(vertex_connectivity(make_lovasz_yemini(k, l)) == 2 * l - 1);
}

TEST_CASE("isomorphism") {
    MultiGraph c4 = make_cycle(4);
    MultiGraph c4r = MultiGraph::from_edges(4, {{2, 0}, {0, 3}, {3, 1}, {1, 2}});
    CHECK(isomorphic(c4, c4r).has_value());
    CHECK(!isomorphic(c4, make_path(5)).has_value());
    // K_4 vs K_4 minus an edge plus a parallel copy: multiplicities differ
    MultiGraph k4mp =
        MultiGraph::from_edges(4, {{0, 1}, {0, 1}, {0, 2}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(!isomorphic(make_complete(4), k4mp).has_value());
}

TEST_CASE("graph json") {
    std::string text =
        R"({"vertices":["a","b"],"edges":[{"id":"e1","ends":["a","b"]}]})";
    MultiGraph g = read_graph_json(text);
    CHECK(g.num_vertices() == 2);
    CHECK(g.num_edges() == 1);
    CHECK_THROWS(read_graph_json(
        R"({"vertices":["a"],"edges":[{"id":"e1","ends":["a","a"]}]})"));
    CHECK_THROWS(read_graph_json(
        R"({"vertices":["a","b"],"edges":[{"id":"e1","ends":["a","b"]},{"id":"e1","ends":["a","b"]}]})"));
    // write(read(x)) = canonicalize(x)
    std::string shuffled =
        R"({"vertices":["b","a"],"edges":[{"id":"e2","ends":["b","a"]},{"id":"e1","ends":["a","b"]}]})";
    CHECK(write_graph_json(read_graph_json(shuffled)) ==
          write_graph_json(read_graph_json(shuffled).canonical()));
    MultiGraph rt = read_graph_json(write_graph_json(g));
    CHECK(isomorphic(rt, g).has_value());
    CHECK(!write_graph_dot(g).empty());
}
