#include "matkit/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "matkit/maxflow.hpp"
#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matkit {

// ---- MultiGraph ------------------------------------------------------------

MultiGraph MultiGraph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    MultiGraph g;
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    int e = 0;
    for (auto [u, v] : edges) g.add_edge("e" + std::to_string(e++), u, v);
    return g;
}

int MultiGraph::add_vertex(const std::string& id) {
    if (vertex_index(id) >= 0) throw GraphError("duplicate vertex id: " + id);
    vertex_ids_.push_back(id);
    return int(vertex_ids_.size()) - 1;
}

int MultiGraph::add_edge(const std::string& id, int u, int v) {
    if (u == v) throw GraphError("loop edge not allowed: " + id);
    if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
        throw GraphError("edge endpoint out of range: " + id);
    if (edge_index(id) >= 0) throw GraphError("duplicate edge id: " + id);
    edges_.push_back({id, u, v});
    return int(edges_.size()) - 1;
}

int MultiGraph::vertex_index(const std::string& id) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertex_ids_[i] == id) return i;
    return -1;
}

int MultiGraph::edge_index(const std::string& id) const {
    for (int i = 0; i < num_edges(); ++i)
        if (edges_[i].id == id) return i;
    return -1;
}

int MultiGraph::degree(int v) const {
    int d = 0;
    for (const Edge& e : edges_)
        if (e.u == v || e.v == v) ++d;
    return d;
}

std::vector<int> MultiGraph::incident_edges(int v) const {
    std::vector<int> out;
    for (int i = 0; i < num_edges(); ++i)
        if (edges_[i].u == v || edges_[i].v == v) out.push_back(i);
    return out;
}

Bitset MultiGraph::star(int v) const {
    Bitset b(num_edges());
    for (int i = 0; i < num_edges(); ++i)
        if (edges_[i].u == v || edges_[i].v == v) b.set(i);
    return b;
}

std::vector<int> MultiGraph::span(const Bitset& es) const {
    std::vector<bool> seen(num_vertices(), false);
    es.for_each([&](int e) {
        seen[edges_[e].u] = true;
        seen[edges_[e].v] = true;
    });
    std::vector<int> out;
    for (int v = 0; v < num_vertices(); ++v)
        if (seen[v]) out.push_back(v);
    return out;
}

Bitset MultiGraph::induced_edges(const std::vector<bool>& in_x) const {
    Bitset b(num_edges());
    for (int i = 0; i < num_edges(); ++i)
        if (in_x[edges_[i].u] && in_x[edges_[i].v]) b.set(i);
    return b;
}

MultiGraph MultiGraph::edge_subgraph(const Bitset& keep) const {
    MultiGraph g;
    g.vertex_ids_ = vertex_ids_;
    keep.for_each([&](int e) { g.edges_.push_back(edges_[e]); });
    return g;
}

MultiGraph MultiGraph::without_edge(int e) const {
    Bitset keep = Bitset::full(num_edges());
    keep.reset(e);
    return edge_subgraph(keep);
}

std::vector<std::vector<int>> MultiGraph::simple_adjacency() const {
    std::vector<std::set<int>> adj(num_vertices());
    for (const Edge& e : edges_) {
        adj[e.u].insert(e.v);
        adj[e.v].insert(e.u);
    }
    std::vector<std::vector<int>> out(num_vertices());
    for (int v = 0; v < num_vertices(); ++v) out[v].assign(adj[v].begin(), adj[v].end());
    return out;
}

bool MultiGraph::is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (const Edge& e : edges_) {
        auto p = std::minmax(e.u, e.v);
        if (!seen.insert({p.first, p.second}).second) return false;
    }
    return true;
}

bool MultiGraph::is_connected() const {
    if (num_vertices() == 0) return true;
    auto adj = simple_adjacency();
    std::vector<bool> vis(num_vertices(), false);
    std::vector<int> q{0};
    vis[0] = true;
    while (!q.empty()) {
        int u = q.back();
        q.pop_back();
        for (int w : adj[u])
            if (!vis[w]) {
                vis[w] = true;
                q.push_back(w);
            }
    }
    return std::all_of(vis.begin(), vis.end(), [](bool b) { return b; });
}

MultiGraph MultiGraph::canonical() const {
    std::vector<int> vperm(num_vertices());
    std::iota(vperm.begin(), vperm.end(), 0);
    std::sort(vperm.begin(), vperm.end(),
              [&](int a, int b) { return vertex_ids_[a] < vertex_ids_[b]; });
    std::vector<int> vpos(num_vertices());
    for (int i = 0; i < num_vertices(); ++i) vpos[vperm[i]] = i;

    MultiGraph g;
    for (int i = 0; i < num_vertices(); ++i) g.vertex_ids_.push_back(vertex_ids_[vperm[i]]);
    g.edges_ = edges_;
    for (Edge& e : g.edges_) {
        e.u = vpos[e.u];
        e.v = vpos[e.v];
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(g.edges_.begin(), g.edges_.end(),
              [](const Edge& a, const Edge& b) { return a.id < b.id; });
    g.flag_no_isolated = flag_no_isolated;
    return g;
}

// ---- connectivity ----------------------------------------------------------

namespace {

// Max vertex-disjoint u-v paths in a simple graph via vertex splitting.
int local_vertex_connectivity(const std::vector<std::vector<int>>& adj, int u, int v) {
    int n = int(adj.size());
    // node 2i = in-copy, 2i+1 = out-copy
    MaxFlow mf(2 * n);
    for (int i = 0; i < n; ++i) mf.add_edge(2 * i, 2 * i + 1, (i == u || i == v) ? MaxFlow::INF : 1);
    for (int a = 0; a < n; ++a)
        for (int b : adj[a]) mf.add_edge(2 * a + 1, 2 * b, MaxFlow::INF);
    return mf.run(2 * u + 1, 2 * v);
}

template <bool Parallel>
int vertex_connectivity_impl(const MultiGraph& g) {
    int n = g.num_vertices();
    if (n < 2) throw GraphError("undefined connectivity: fewer than 2 vertices");
    auto adj = g.simple_adjacency();
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (std::find(adj[u].begin(), adj[u].end(), v) == adj[u].end())
                pairs.push_back({u, v});
    if (pairs.empty()) return n - 1; // complete
    int best = n - 1;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) reduction(min : best) if (Parallel)
#endif
    for (size_t i = 0; i < pairs.size(); ++i) {
        int c = local_vertex_connectivity(adj, pairs[i].first, pairs[i].second);
        if (c < best) best = c;
    }
    return best;
}

} // namespace

int vertex_connectivity(const MultiGraph& g) { return vertex_connectivity_impl<true>(g); }
int vertex_connectivity_serial(const MultiGraph& g) { return vertex_connectivity_impl<false>(g); }

int edge_connectivity(const MultiGraph& g) {
    int n = g.num_vertices();
    if (n < 2) throw GraphError("undefined connectivity: fewer than 2 vertices");
    if (!g.is_connected()) return 0;
    // multiplicity matrix
    std::vector<std::vector<int>> mult(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) {
        mult[e.u][e.v]++;
        mult[e.v][e.u]++;
    }
    int best = MaxFlow::INF;
    for (int t = 1; t < n; ++t) {
        MaxFlow mf(n);
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (mult[a][b]) {
                    mf.add_edge(a, b, mult[a][b]);
                    mf.add_edge(b, a, mult[a][b]);
                }
        best = std::min(best, mf.run(0, t));
    }
    return best;
}

// ---- smooth orientation ----------------------------------------------------

Orientation smooth_orientation(const MultiGraph& g) {
    int n = g.num_vertices();
    int m = g.num_edges();
    // incident lists over original edges + matching edges between odd vertices
    struct Arc {
        int edge, to;
    };
    std::vector<std::vector<Arc>> inc(n);
    for (int e = 0; e < m; ++e) {
        inc[g.edge(e).u].push_back({e, g.edge(e).v});
        inc[g.edge(e).v].push_back({e, g.edge(e).u});
    }
    std::vector<int> odd;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) % 2 == 1) odd.push_back(v);
    std::sort(odd.begin(), odd.end(),
              [&](int a, int b) { return g.vertex_id(a) < g.vertex_id(b); });
    int extra = m;
    for (size_t i = 0; i + 1 < odd.size(); i += 2) {
        inc[odd[i]].push_back({extra, odd[i + 1]});
        inc[odd[i + 1]].push_back({extra, odd[i]});
        ++extra;
    }

    // Eulerian circuit per component (all degrees even now), Hierholzer.
    std::vector<bool> used(extra, false);
    std::vector<size_t> it(n, 0);
    Orientation o;
    o.head.assign(m, -1);
    for (int s = 0; s < n; ++s) {
        while (it[s] < inc[s].size()) {
            if (used[inc[s][it[s]].edge]) {
                ++it[s];
                continue;
            }
            // walk a closed trail from s, orienting along the walk
            int u = s;
            while (true) {
                while (it[u] < inc[u].size() && used[inc[u][it[u]].edge]) ++it[u];
                if (it[u] == inc[u].size()) break; // trail closed back at u == s
                Arc a = inc[u][it[u]];
                used[a.edge] = true;
                if (a.edge < m) o.head[a.edge] = a.to;
                u = a.to;
            }
        }
    }
    return o;
}

std::vector<int> in_degrees(const MultiGraph& g, const Orientation& o) {
    std::vector<int> d(g.num_vertices(), 0);
    for (int e = 0; e < g.num_edges(); ++e) d[o.head[e]]++;
    return d;
}

// ---- generators ------------------------------------------------------------

MultiGraph make_complete(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.push_back({i, j});
    return MultiGraph::from_edges(n, es);
}

MultiGraph make_cycle(int n) {
    if (n < 3) throw GraphError("cycle needs >= 3 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.push_back({i, (i + 1) % n});
    return MultiGraph::from_edges(n, es);
}

MultiGraph make_path(int n) {
    if (n < 2) throw GraphError("path needs >= 2 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.push_back({i, i + 1});
    return MultiGraph::from_edges(n, es);
}

MultiGraph make_wheel(int n) {
    if (n < 4) throw GraphError("wheel needs >= 4 vertices");
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.push_back({0, i}); // hub = 0
    for (int i = 1; i < n; ++i) es.push_back({i, i == n - 1 ? 1 : i + 1});
    return MultiGraph::from_edges(n, es);
}

MultiGraph make_parallel_pair(int m) {
    std::vector<std::pair<int, int>> es(m, {0, 1});
    return MultiGraph::from_edges(2, es);
}

MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b) {
    MultiGraph g;
    for (int v = 0; v < a.num_vertices(); ++v) g.add_vertex("a." + a.vertex_id(v));
    for (int v = 0; v < b.num_vertices(); ++v) g.add_vertex("b." + b.vertex_id(v));
    for (const auto& e : a.edges()) g.add_edge("a." + e.id, e.u, e.v);
    for (const auto& e : b.edges())
        g.add_edge("b." + e.id, a.num_vertices() + e.u, a.num_vertices() + e.v);
    return g;
}

MultiGraph make_lovasz_yemini(int k, int l) {
    if (!(2 <= k && k < l && l <= 2 * k - 1))
        throw GraphError("lovasz_yemini requires 2 <= k < l <= 2k-1");
    int copies = 2 * l + 2;
    int s = 2 * l - 1;
    auto vid = [&](int copy, int j) { return copy * s + j; };
    std::vector<std::pair<int, int>> es;
    for (int c = 0; c < copies; ++c)
        for (int i = 0; i < s; ++i)
            for (int j = i + 1; j < s; ++j) es.push_back({vid(c, i), vid(c, j)});
    // matching of size l-1 between consecutive copies; vertex s-1 of each copy
    // stays unmatched and becomes v_i
    for (int c = 0; c < copies; ++c) {
        int cn = (c + 1) % copies;
        for (int j = 0; j < l - 1; ++j) es.push_back({vid(c, j), vid(cn, l - 1 + j)});
    }
    for (int i = 0; i < l + 1; ++i) es.push_back({vid(i, s - 1), vid(i + l + 1, s - 1)});
    return MultiGraph::from_edges(copies * s, es);
}

CofactorPacking make_cofactor_packing(int n, int t) {
    if (t < 1 || n < 6 * t) throw GraphError("cofactor_packing requires n >= 6t, t >= 1");
    MultiGraph kn = make_complete(n);
    int m = kn.num_edges();
    std::vector<Bitset> parts(t, Bitset(m));
    auto group = [&](int v) { return v < 6 * t ? v / 6 : -1; };
    for (int e = 0; e < m; ++e) {
        int a = kn.edge(e).u, b = kn.edge(e).v;
        int ga = group(a), gb = group(b);
        if (ga >= 0 && ga == gb) {
            parts[ga].set(e);
        } else if (ga >= 0 && gb >= 0) {
            // 3x3 biclique split between the two K_6 blocks
            bool la = (a - 6 * ga) < 3, lb = (b - 6 * gb) < 3;
            parts[la == lb ? ga : gb].set(e);
        } else if (ga >= 0 || gb >= 0) {
            // vertex outside the blocks: degree 3 into each block's first triple
            int u = ga >= 0 ? b : a;
            int w = ga >= 0 ? a : b;
            int gi = std::max(ga, gb);
            (void)u;
            if (w - 6 * gi < 3) parts[gi].set(e);
        }
    }
    return {std::move(kn), std::move(parts)};
}

// ---- isomorphism -----------------------------------------------------------

namespace {

std::vector<std::vector<int>> multiplicity_matrix(const MultiGraph& g) {
    int n = g.num_vertices();
    std::vector<std::vector<int>> m(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) {
        m[e.u][e.v]++;
        m[e.v][e.u]++;
    }
    return m;
}

bool iso_extend(const std::vector<std::vector<int>>& m1, const std::vector<std::vector<int>>& m2,
                std::vector<int>& map, std::vector<bool>& used, int v) {
    int n = int(m1.size());
    if (v == n) return true;
    for (int w = 0; w < n; ++w) {
        if (used[w]) continue;
        bool ok = true;
        for (int u = 0; u < v; ++u)
            if (m1[v][u] != m2[w][map[u]]) {
                ok = false;
                break;
            }
        if (!ok) continue;
        map[v] = w;
        used[w] = true;
        if (iso_extend(m1, m2, map, used, v + 1)) return true;
        used[w] = false;
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> isomorphic(const MultiGraph& g1, const MultiGraph& g2) {
    if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges())
        return std::nullopt;
    auto m1 = multiplicity_matrix(g1), m2 = multiplicity_matrix(g2);
    int n = g1.num_vertices();
    // degree profile pruning: (weighted degree, sorted incident multiplicities)
    auto profile = [n](const std::vector<std::vector<int>>& m) {
        std::vector<std::vector<int>> p(n);
        for (int v = 0; v < n; ++v) {
            for (int u = 0; u < n; ++u)
                if (m[v][u]) p[v].push_back(m[v][u]);
            std::sort(p[v].begin(), p[v].end());
        }
        return p;
    };
    auto p1 = profile(m1), p2 = profile(m2);
    auto s1 = p1, s2 = p2;
    std::sort(s1.begin(), s1.end());
    std::sort(s2.begin(), s2.end());
    if (s1 != s2) return std::nullopt;

    std::vector<int> map(n, -1);
    std::vector<bool> used(n, false);
    if (iso_extend(m1, m2, map, used, 0)) return map;
    return std::nullopt;
}

// ---- I/O -------------------------------------------------------------------

MultiGraph read_graph_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw GraphError(std::string("graph JSON parse error: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw GraphError("graph JSON must have \"vertices\" and \"edges\"");
    MultiGraph g;
    for (const auto& v : j["vertices"]) {
        if (!v.is_string()) throw GraphError("vertex id must be a string");
        g.add_vertex(v.get<std::string>());
    }
    for (const auto& e : j["edges"]) {
        if (!e.is_object() || !e.contains("id") || !e.contains("ends"))
            throw GraphError("edge must have \"id\" and \"ends\"");
        const auto& ends = e["ends"];
        if (!ends.is_array() || ends.size() != 2)
            throw GraphError("edge \"ends\" must be a pair");
        int u = g.vertex_index(ends[0].get<std::string>());
        int v = g.vertex_index(ends[1].get<std::string>());
        if (u < 0 || v < 0)
            throw GraphError("edge " + e["id"].get<std::string>() + ": unknown endpoint");
        g.add_edge(e["id"].get<std::string>(), u, v);
    }
    return g;
}

std::string write_graph_json(const MultiGraph& g0) {
    MultiGraph g = g0.canonical();
    nlohmann::json j;
    j["vertices"] = nlohmann::json::array();
    for (int v = 0; v < g.num_vertices(); ++v) j["vertices"].push_back(g.vertex_id(v));
    j["edges"] = nlohmann::json::array();
    for (const auto& e : g.edges()) {
        auto a = g.vertex_id(e.u), b = g.vertex_id(e.v);
        if (b < a) std::swap(a, b);
        j["edges"].push_back({{"id", e.id}, {"ends", {a, b}}});
    }
    return j.dump();
}

std::string write_graph_dot(const MultiGraph& g) {
    std::string out = "graph {\n";
    for (int v = 0; v < g.num_vertices(); ++v) out += "  \"" + g.vertex_id(v) + "\";\n";
    for (const auto& e : g.edges())
        out += "  \"" + g.vertex_id(e.u) + "\" -- \"" + g.vertex_id(e.v) + "\" [label=\"" +
               e.id + "\"];\n";
    out += "}\n";
    return out;
}

} // namespace matkit
