#include "matkit/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>

#include <nlohmann/json.hpp>

#include "matkit/cofactor.hpp"
#include "matkit/count_matroid.hpp"
#include "matkit/matroid.hpp"
#include "matkit/reconstruct.hpp"

namespace matkit {

namespace {

void fail(SuiteReport& rep, const std::string& desc, const std::string& witness) {
    rep.violations.push_back({desc, witness});
}

std::string gw(const MultiGraph& g) { return write_graph_json(g); }

int pick(std::mt19937& rng, int lo, int hi) {
    return lo + int(rng() % uint32_t(hi - lo + 1));
}

} // namespace

MultiGraph random_simple_graph(std::mt19937& rng, int n, double p) {
    std::vector<std::pair<int, int>> edges;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng) < p) edges.push_back({u, v});
    return MultiGraph::from_edges(n, edges);
}

MultiGraph random_multigraph(std::mt19937& rng, int n, int max_mult, int max_edges) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            int mult = int(rng() % uint32_t(max_mult + 1));
            for (int c = 0; c < mult && int(edges.size()) < max_edges; ++c)
                edges.push_back({u, v});
        }
    if (edges.empty()) edges.push_back({0, 1});
    return MultiGraph::from_edges(n, edges);
}

namespace {

MultiGraph rejection_sample(std::mt19937& rng, int n, double p,
                            const std::function<bool(const MultiGraph&)>& pred) {
    for (int tries = 0; tries < 20000; ++tries) {
        MultiGraph g = random_simple_graph(rng, n, p);
        if (g.num_edges() > 0 && pred(g)) return g;
    }
    throw MatroidError("rejection sampler failed to hit the target property");
}

} // namespace

MultiGraph sample_vertex_connected(std::mt19937& rng, int n, int kappa) {
    double p = std::clamp(double(kappa + 1) / (n - 1) + 0.25, 0.3, 0.95);
    return rejection_sample(rng, n, p,
                            [&](const MultiGraph& g) { return vertex_connectivity(g) >= kappa; });
}

MultiGraph sample_edge_connected(std::mt19937& rng, int n, int lambda) {
    double p = std::clamp(double(lambda + 1) / (n - 1) + 0.2, 0.3, 0.95);
    return rejection_sample(rng, n, p,
                            [&](const MultiGraph& g) { return edge_connectivity(g) >= lambda; });
}

MultiGraph sample_min_degree(std::mt19937& rng, int n, int dmin) {
    double p = std::clamp(double(dmin + 1) / (n - 1) + 0.1, 0.3, 0.95);
    return rejection_sample(rng, n, p, [&](const MultiGraph& g) {
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.degree(v) < dmin) return false;
        return true;
    });
}

namespace {

// ---- individual suites -------------------------------------------------------

void suite_lemma_24b(const SuiteConfig& cfg, SuiteReport& rep) {
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {3, 5}}) {
        MultiGraph g = cfg.mutant ? make_cycle(2 * l + 1) : make_complete(2 * l + 1);
        ++rep.cases;
        if (!is_redundant(g, CountParams(k, l)))
            fail(rep,
                 "expected (" + std::to_string(k) + "," + std::to_string(l) +
                     ")-redundant graph on 2l+1 vertices",
                 gw(g));
    }
}

void suite_ly_construction(const SuiteConfig& cfg, SuiteReport& rep) {
    for (auto [k, l] : std::vector<std::pair<int, int>>{{2, 3}, {3, 4}, {3, 5}}) {
        MultiGraph g = make_lovasz_yemini(k, l);
        ++rep.cases;
        int want_kappa = cfg.mutant ? 2 * l : 2 * l - 1;
        int kappa = vertex_connectivity(g);
        if (kappa != want_kappa)
            fail(rep, "lovasz_yemini(" + std::to_string(k) + "," + std::to_string(l) +
                          ") connectivity " + std::to_string(kappa) + " != " +
                          std::to_string(want_kappa), gw(g));
        int r = count_rank(g, CountParams(k, l), Bitset::full(g.num_edges()));
        int cap = k * g.num_vertices() - l - 1;
        if (r > cap)
            fail(rep, "lovasz_yemini rank " + std::to_string(r) + " exceeds " +
                          std::to_string(cap), gw(g));
        if (k == 2 && l == 3 && (g.num_vertices() != 40 || g.num_edges() != 100))
            fail(rep, "lovasz_yemini(2,3) is not the 40-vertex 100-edge graph", gw(g));
    }
}

void suite_tree_packing(const SuiteConfig& cfg, SuiteReport& rep, std::mt19937& rng) {
    int samples = cfg.samples ? cfg.samples : 50;
    int max_n = cfg.max_n ? cfg.max_n : 12;
    int trees = cfg.mutant ? 3 : 2;
    for (int it = 0; it < samples; ++it) {
        // K_5 is 4-edge-connected but has only 10 < 3*4 edges: guaranteed
        // counterexample for the 3-tree mutant
        MultiGraph g = cfg.mutant && it == 0 ? make_complete(5)
                                             : sample_edge_connected(rng, pick(rng, 6, max_n), 4);
        ++rep.cases;
        int n = g.num_vertices();
        std::vector<RankOracle> copies(trees, count_oracle(g, CountParams(1, 1)));
        for (int e = 0; e < g.num_edges(); ++e) {
            Bitset rest = Bitset::full(g.num_edges());
            rest.reset(e);
            if (union_rank(copies, rest).rank != trees * (n - 1)) {
                fail(rep, "4-edge-connected sample lost " + std::to_string(trees) +
                              " edge-disjoint spanning trees after deleting " + g.edge(e).id,
                     gw(g));
                break;
            }
        }
    }
}

void suite_kriesell_f1(const SuiteConfig& cfg, SuiteReport& rep, std::mt19937& rng) {
    int samples = cfg.samples ? cfg.samples : 50;
    int max_n = cfg.max_n ? cfg.max_n : 10;
    for (int it = 0; it < samples; ++it) {
        MultiGraph g = cfg.mutant ? make_cycle(pick(rng, 4, max_n))
                                  : sample_vertex_connected(rng, pick(rng, 6, max_n), 4);
        ++rep.cases;
        int n = g.num_vertices();
        std::vector<RankOracle> copies(2, count_oracle(g, CountParams(1, 1)));
        UnionResult ur = union_rank(copies, Bitset::full(g.num_edges()));
        bool ok = ur.rank == 2 * (n - 1);
        if (ok) {
            Bitset tree = ur.parts[0];
            MultiGraph rest = g.edge_subgraph(Bitset::full(g.num_edges()) - tree);
            ok = int(tree.count()) == n - 1 && rest.is_connected();
        }
        if (!ok)
            fail(rep, "no spanning tree with connected complement found", gw(g));
    }
}

void suite_degree_rigidity(const SuiteConfig& cfg, SuiteReport& rep, std::mt19937& rng) {
    int samples = cfg.samples ? cfg.samples : 100;
    int max_n = cfg.max_n ? cfg.max_n : 10;
    std::vector<std::pair<int, int>> pairs{{2, 0}, {2, -1}, {1, 0}};
    if (cfg.mutant) {
        // boundary graphs below the theorem's degree threshold
        std::vector<MultiGraph> bad{make_complete(4), make_complete(5), make_path(6)};
        for (size_t i = 0; i < pairs.size(); ++i) {
            ++rep.cases;
            if (!is_rigid(bad[i], CountParams(pairs[i].first, pairs[i].second)))
                fail(rep, "sub-threshold graph is not rigid", gw(bad[i]));
        }
        return;
    }
    for (int it = 0; it < samples; ++it) {
        auto [k, l] = pairs[it % pairs.size()];
        int n = pick(rng, 5, max_n);
        bool redundant_case = it % 2 == 0;
        int num = redundant_case ? 2 * l - 2 : 2 * l; // l <= 0, so this is a deficit
        int dmin = (2 * k * n - num + n - 1) / n;     // ceil(2k - num/n)
        if (dmin > n - 1) {
            --it;
            continue;
        }
        MultiGraph g = sample_min_degree(rng, n, dmin);
        ++rep.cases;
        CountParams p(k, l);
        if (redundant_case ? !is_redundant(g, p) : !is_rigid(g, p))
            fail(rep, "degree threshold failed to force (" + std::to_string(k) + "," +
                          std::to_string(l) + (redundant_case ? ")-redundancy" : ")-rigidity"),
                 gw(g));
    }
}

void suite_edge_conn_redundant(const SuiteConfig& cfg, SuiteReport& rep, std::mt19937& rng) {
    int samples = cfg.samples ? cfg.samples : 100;
    int max_n = cfg.max_n ? cfg.max_n : 10;
    std::vector<std::pair<int, int>> pairs{{2, 2}, {2, 1}, {3, 3}};
    for (int it = 0; it < samples; ++it) {
        auto [k, l] = pairs[it % pairs.size()];
        int lo = std::max(5, 2 * k + 1); // lambda >= 2k forces degree >= 2k
        MultiGraph g = cfg.mutant && k == 2 && l == 2 ? make_cycle(pick(rng, 4, max_n))
                                                      : sample_edge_connected(
                                                            rng, pick(rng, lo, max_n), 2 * k);
        ++rep.cases;
        if (!is_redundant(g, CountParams(k, l)))
            fail(rep, "2k-edge-connected sample not (" + std::to_string(k) + "," +
                          std::to_string(l) + ")-redundant", gw(g));
    }
}

void suite_conn_redundant(const SuiteConfig& cfg, SuiteReport& rep, std::mt19937& rng) {
    int samples = cfg.samples ? cfg.samples : 100;
    int max_n = cfg.max_n ? cfg.max_n : 10;
    for (int it = 0; it < samples; ++it) {
        MultiGraph g = cfg.mutant ? make_cycle(pick(rng, 4, max_n))
                                  : sample_vertex_connected(rng, pick(rng, 7, max_n), 6);
        ++rep.cases;
        if (!is_redundant(g, CountParams(2, 3)))
            fail(rep, "6-connected sample not (2,3)-redundant", gw(g));
    }
}

void suite_union_identity(const SuiteConfig& cfg, SuiteReport& rep, std::mt19937& rng) {
    int samples = cfg.samples ? cfg.samples : 100;
    std::vector<std::array<int, 3>> cases{{2, 3, 2}, {1, 1, 3}};
    for (int it = 0; it < samples; ++it) {
        auto [k, l, t] = cases[it % cases.size()];
        MultiGraph g = cfg.mutant && it < 2
                           ? make_complete(8)
                           : random_simple_graph(rng, pick(rng, 4, 8),
                                                 0.4 + 0.5 * (rng() % 100) / 100.0);
        if (g.num_edges() == 0) {
            --it;
            continue;
        }
        ++rep.cases;
        int folds = cfg.mutant ? t - 1 : t;
        std::vector<RankOracle> copies(folds, count_oracle(g, CountParams(k, l)));
        Bitset full = Bitset::full(g.num_edges());
        Bitset sub(g.num_edges());
        for (int e = 0; e < g.num_edges(); ++e)
            if (rng() & 1) sub.set(e);
        for (const Bitset& q : {full, sub}) {
            int lhs = count_rank(g, CountParams(k * t, l * t), q);
            int rhs = union_rank(copies, q).rank;
            if (lhs != rhs) {
                fail(rep, "r_{kt,lt} = " + std::to_string(lhs) + " but " +
                              std::to_string(folds) + "-fold union rank = " +
                              std::to_string(rhs),
                     gw(g));
                break;
            }
        }
    }
}

void suite_cofactor_kn(const SuiteConfig& cfg, SuiteReport& rep) {
    for (int n : {6, 7, 8}) {
        ++rep.cases;
        MultiGraph kn = make_complete(n);
        CofactorCertificate c = cofactor_r1(kn, Bitset::full(kn.num_edges()));
        int want = (cfg.mutant ? 3 * n - 5 : 3 * n - 6);
        if (c.rank != want || kn_rank(n, 1) != want)
            fail(rep, "r1(K_" + std::to_string(n) + ") = " + std::to_string(c.rank) +
                          ", expected " + std::to_string(want), gw(kn));
        if (!cofactor_certificate_valid(kn, Bitset::full(kn.num_edges()), c))
            fail(rep, "r1(K_" + std::to_string(n) + ") certificate failed re-evaluation",
                 gw(kn));
    }
    for (auto [n, t] : std::vector<std::pair<int, int>>{{12, 2}, {18, 3}}) {
        ++rep.cases;
        CofactorPacking packing = make_cofactor_packing(n, t);
        Bitset seen(packing.kn.num_edges());
        bool disjoint = true;
        for (const Bitset& part : packing.parts) {
            if (!(seen & part).empty()) disjoint = false;
            seen |= part;
        }
        if (!disjoint) {
            fail(rep, "cofactor_packing parts are not edge-disjoint", gw(packing.kn));
            continue;
        }
        for (int i = 0; i < t; ++i) {
            std::vector<int> order;
            for (int v = 0; v < n; ++v)
                if (v / 6 != i) order.push_back(v);
            int bound = peel_lower_bound(packing.kn, packing.parts[i], 1, order);
            if (bound != 3 * n - 6)
                fail(rep, "packing part peel bound " + std::to_string(bound) + " != " +
                              std::to_string(3 * n - 6), gw(packing.kn));
            MultiGraph h = packing.kn.edge_subgraph(packing.parts[i]);
            if (vertex_connectivity(h) < 3)
                fail(rep, "packing part is not 3-connected", gw(h));
        }
    }
}

void suite_reconstruction(const SuiteConfig& cfg, SuiteReport& rep) {
    struct Roundtrip {
        MultiGraph g;
        FamilyTag tag;
    };
    std::vector<Roundtrip> cases{
        {make_complete(5), {FamilyTag::Count, 1, 1, 1}},
        {make_wheel(6), {FamilyTag::Count, 1, 0, 1}},
        {make_complete(6), {FamilyTag::Cofactor, 1, 1, 1}},
    };
    for (const auto& c : cases) {
        ++rep.cases;
        try {
            MultiGraph h = reconstruct(make_labeled(c.g, c.tag));
            if (!isomorphic(h, c.g))
                fail(rep, "reconstruction returned a non-isomorphic graph", gw(c.g));
        } catch (const MatroidError& ex) {
            fail(rep, std::string("reconstruction refused: ") + ex.what(), gw(c.g));
        }
    }
    std::vector<Roundtrip> controls{
        {make_cycle(6), {FamilyTag::Count, 1, 0, 1}},
        {disjoint_union(make_cycle(3), make_cycle(3)), {FamilyTag::Count, 1, 1, 1}},
    };
    for (const auto& c : controls) {
        ++rep.cases;
        bool refused = false;
        try {
            reconstruct(make_labeled(c.g, c.tag));
        } catch (const MatroidError&) {
            refused = true;
        }
        bool want_refusal = !cfg.mutant;
        if (refused != want_refusal)
            fail(rep, want_refusal ? "negative control was not refused"
                                   : "mutant expected the control to reconstruct",
                 gw(c.g));
    }
}

void suite_matroid_xval(const SuiteConfig& cfg, SuiteReport& rep, std::mt19937& rng) {
    int samples = cfg.samples ? cfg.samples : 40;
    std::vector<MultiGraph> graphs;
    // every labeled simple graph on 4 vertices with at least one edge
    std::vector<std::pair<int, int>> k4pairs{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    for (int mask = 1; mask < 64; ++mask) {
        std::vector<std::pair<int, int>> edges;
        for (int i = 0; i < 6; ++i)
            if ((mask >> i) & 1) edges.push_back(k4pairs[i]);
        graphs.push_back(MultiGraph::from_edges(4, edges));
    }
    for (int it = 0; it < samples; ++it) {
        MultiGraph g = random_simple_graph(rng, 5, 0.6);
        if (g.num_edges()) graphs.push_back(g);
    }
    std::vector<std::pair<int, int>> pairs{{2, 3}, {1, 1}, {2, 0}};
    for (const MultiGraph& g : graphs) {
        auto [k, l] = pairs[rep.cases % pairs.size()];
        ++rep.cases;
        RankOracle o = count_oracle(g, CountParams(k, l));
        Components a = components(o);
        Components b = components_bruteforce(o);
        std::vector<Bitset> pa = a.parts;
        std::sort(pa.begin(), pa.end());
        size_t want_parts = cfg.mutant ? size_t(g.num_edges()) : b.parts.size();
        if (pa.size() != want_parts || (!cfg.mutant && pa != b.parts)) {
            fail(rep, "component engines disagree", gw(g));
            continue;
        }
        int rank_sum = 0;
        for (const Bitset& part : pa) rank_sum += o.rank(part);
        if (rank_sum != o.full_rank()) fail(rep, "component ranks do not sum to r(E)", gw(g));
        VerticalConnectivity vc = vertical_connectivity(o);
        VerticalConnectivity vs = vertical_connectivity_serial(o);
        if (vc.value != vs.value) fail(rep, "parallel/serial vconn disagree", gw(g));
        if (vc.witness) {
            const Separation& s = *vc.witness;
            bool ok = s.r1 >= s.order && s.r2 >= s.order &&
                      s.r1 + s.r2 <= o.full_rank() + s.order - 1 &&
                      o.rank(s.e1) == s.r1 && o.rank(s.e2) == s.r2 &&
                      (s.e1 & s.e2).empty() && (s.e1 | s.e2) == Bitset::full(o.m);
            if (!ok) fail(rep, "vertical separation witness fails its inequalities", gw(g));
        }
        bool single_nontrivial = pa.size() == 1 && pa[0].count() >= 2;
        if (g.num_edges() >= 2 && (vc.value >= 2) != single_nontrivial)
            fail(rep, "vconn >= 2 disagrees with matroid connectivity", gw(g));
        if (!check_rank_axioms(o, 60, cfg.seed + rep.cases))
            fail(rep, "rank axioms violated", gw(g));
    }
}

void suite_oracle_equivalence(const SuiteConfig& cfg, SuiteReport& rep, std::mt19937& rng) {
    int samples = cfg.samples ? cfg.samples : 60;
    std::vector<std::pair<int, int>> pairs{{1, 1}, {1, 0}, {2, 3}, {2, 2}, {2, 1},
                                           {2, 0}, {2, -1}, {3, 4}, {3, 5}};
    for (const auto& [k, l] : pairs) {
        // doubled K_4: the (k,l) and (k,l-1) ranks differ on it for every
        // tested pair, so the mutant is caught deterministically
        std::vector<std::pair<int, int>> dbl;
        for (int u = 0; u < 4; ++u)
            for (int v = u + 1; v < 4; ++v) {
                dbl.push_back({u, v});
                dbl.push_back({u, v});
            }
        for (int it = 0; it < samples; ++it) {
            MultiGraph g = cfg.mutant && it == 0
                               ? MultiGraph::from_edges(4, dbl)
                               : random_multigraph(rng, pick(rng, 2, 5),
                                                   std::max(1, 2 * k - l), 16);
            ++rep.cases;
            Bitset full = Bitset::full(g.num_edges());
            int fast = count_rank(g, CountParams(k, cfg.mutant ? l - 1 : l), full);
            int brute = count_rank_bruteforce(g, CountParams(k, l), full);
            if (fast != brute) {
                fail(rep, "(" + std::to_string(k) + "," + std::to_string(l) +
                              ") fast rank " + std::to_string(fast) + " != brute force " +
                              std::to_string(brute),
                     gw(g));
                break;
            }
        }
    }
}

void suite_smooth_orientation(const SuiteConfig& cfg, SuiteReport& rep, std::mt19937& rng) {
    int samples = cfg.samples ? cfg.samples : 1000;
    for (int it = 0; it < samples; ++it) {
        MultiGraph g = it == 0 ? make_path(2) : random_multigraph(rng, pick(rng, 2, 8), 3, 24);
        ++rep.cases;
        Orientation o = smooth_orientation(g);
        std::vector<int> in = in_degrees(g, o);
        for (int v = 0; v < g.num_vertices(); ++v) {
            int out = g.degree(v) - in[v];
            int gap = cfg.mutant ? 0 : 1;
            if (std::abs(in[v] - out) > gap) {
                fail(rep, "vertex " + g.vertex_id(v) + " has indeg " + std::to_string(in[v]) +
                              ", outdeg " + std::to_string(out), gw(g));
                break;
            }
        }
    }
}

} // namespace

std::vector<std::string> suite_names() {
    return {"lemma-2.4b",     "ly-construction",     "tree-packing",  "kriesell-f1",
            "degree-rigidity", "edge-conn-redundant", "conn-redundant", "union-identity",
            "cofactor-kn",    "reconstruction",      "matroid-xval",  "oracle-equivalence",
            "smooth-orientation"};
}

SuiteReport run_suite(const std::string& name, SuiteConfig cfg) {
    SuiteReport rep;
    rep.suite = name;
    rep.seed = cfg.seed;
    rep.mutant = cfg.mutant;
    std::mt19937 rng(cfg.seed);
    auto t0 = std::chrono::steady_clock::now();
    if (name == "lemma-2.4b")
        suite_lemma_24b(cfg, rep);
    else if (name == "ly-construction")
        suite_ly_construction(cfg, rep);
    else if (name == "tree-packing")
        suite_tree_packing(cfg, rep, rng);
    else if (name == "kriesell-f1")
        suite_kriesell_f1(cfg, rep, rng);
    else if (name == "degree-rigidity")
        suite_degree_rigidity(cfg, rep, rng);
    else if (name == "edge-conn-redundant")
        suite_edge_conn_redundant(cfg, rep, rng);
    else if (name == "conn-redundant")
        suite_conn_redundant(cfg, rep, rng);
    else if (name == "union-identity")
        suite_union_identity(cfg, rep, rng);
    else if (name == "cofactor-kn")
        suite_cofactor_kn(cfg, rep);
    else if (name == "reconstruction")
        suite_reconstruction(cfg, rep);
    else if (name == "matroid-xval")
        suite_matroid_xval(cfg, rep, rng);
    else if (name == "oracle-equivalence")
        suite_oracle_equivalence(cfg, rep, rng);
    else if (name == "smooth-orientation")
        suite_smooth_orientation(cfg, rep, rng);
    else
        throw MatroidError("unknown suite: " + name);
    rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rep;
}

std::string report_json(const SuiteReport& r) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["seed"] = r.seed;
    j["mutant"] = r.mutant;
    j["cases"] = r.cases;
    j["passed"] = r.passed();
    j["violations"] = nlohmann::json::array();
    for (const Violation& v : r.violations)
        j["violations"].push_back({{"description", v.description}, {"witness", v.witness_json}});
    return j.dump(2);
}

} // namespace matkit
