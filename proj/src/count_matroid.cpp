#include "matkit/count_matroid.hpp"

#include <algorithm>
#include <cassert>

#include <nlohmann/json.hpp>

#include "matkit/maxflow.hpp"

namespace matkit {

namespace {

// Lee-Streinu (k,l)-pebble game, valid for 0 <= l <= 2k-1. Feeding edges in
// order builds a basis greedily, so the number of accepted edges is the rank.
struct PebbleGame {
    const MultiGraph& g;
    int k, l;
    std::vector<int> pebbles;
    std::vector<std::vector<int>> out; // accepted edges, oriented
    std::vector<int> mark;
    int stamp = 0;

    PebbleGame(const MultiGraph& g_, CountParams p)
        : g(g_), k(p.k), l(p.l), pebbles(g_.num_vertices(), p.k), out(g_.num_vertices()),
          mark(g_.num_vertices(), -1) {}

    // DFS for a pebble reachable from start along oriented edges; vertex
    // `avoid` may be traversed but its pebbles are off limits.
    bool find_pebble(int start, int avoid) {
        ++stamp;
        std::vector<int> path;
        return dfs(start, avoid, path);
    }

    bool dfs(int v, int avoid, std::vector<int>& path) {
        mark[v] = stamp;
        if (v != avoid && !path.empty() && pebbles[v] > 0) {
            // reverse the path; the pebble moves to its origin
            --pebbles[v];
            ++pebbles[path[0]];
            int cur = path[0];
            for (size_t i = 1; i <= path.size(); ++i) {
                int nxt = i < path.size() ? path[i] : v;
                auto& lst = out[cur];
                lst.erase(std::find(lst.begin(), lst.end(), nxt));
                out[nxt].push_back(cur);
                cur = nxt;
            }
            return true;
        }
        for (size_t i = 0; i < out[v].size(); ++i) {
            int w = out[v][i];
            if (mark[w] == stamp) continue;
            path.push_back(v);
            if (dfs(w, avoid, path)) return true;
            path.pop_back();
        }
        return false;
    }

    bool accept(int u, int v) {
        while (pebbles[u] + pebbles[v] < l + 1) {
            if (!find_pebble(u, v) && !find_pebble(v, u)) return false;
        }
        if (pebbles[u] == 0) std::swap(u, v); // l+1 >= 1 pebbles sit on the endpoints
        --pebbles[u];
        out[u].push_back(v);
        return true;
    }
};

int rank_pebble(const MultiGraph& g, CountParams p, const Bitset& edges) {
    PebbleGame game(g, p);
    int rank = 0;
    edges.for_each([&](int e) {
        const auto& ed = g.edge(e);
        rank += game.accept(ed.u, ed.v);
    });
    return rank;
}

// For l < 0 the cover characterization gives r(E') = min(|E'|, min_W |E'-E'[W]| + k|W| - l)
// over vertex sets W inducing at least one edge. Fixing an edge whose
// endpoints must lie in W turns the inner minimum into a project-selection
// min-cut on the edge-vertex bipartite network.
int rank_negative(const MultiGraph& g, CountParams p, const Bitset& edges) {
    std::vector<int> elems = edges.elements();
    int me = int(elems.size());
    if (me == 0) return 0;
    int n = g.num_vertices();
    int best = me;
    for (int forced : elems) {
        // nodes: 0 = source, 1..me = edges, me+1..me+n = vertices, me+n+1 = sink
        MaxFlow mf(me + n + 2);
        int sink = me + n + 1;
        for (int i = 0; i < me; ++i) {
            const auto& ed = g.edge(elems[i]);
            mf.add_edge(0, 1 + i, elems[i] == forced ? MaxFlow::INF : 1);
            mf.add_edge(1 + i, me + 1 + ed.u, MaxFlow::INF);
            mf.add_edge(1 + i, me + 1 + ed.v, MaxFlow::INF);
        }
        for (int v = 0; v < n; ++v) mf.add_edge(me + 1 + v, sink, p.k);
        best = std::min(best, mf.run(0, sink) - p.l);
    }
    return best;
}

int threshold_for_merge(CountParams p) {
    if (p.l <= 0) return 0;          // merge everything
    if (p.l <= p.k) return 1;        // 0-thin target
    return 2;                        // 1-thin target
}

} // namespace

bool count_is_independent(const MultiGraph& g, CountParams p, const Bitset& edges) {
    return count_rank(g, p, edges) == edges.count();
}

int count_rank(const MultiGraph& g, CountParams p, const Bitset& edges) {
    if (edges.universe() != g.num_edges()) throw MatroidError("edge set universe mismatch");
    return p.l >= 0 ? rank_pebble(g, p, edges) : rank_negative(g, p, edges);
}

int count_rank_bruteforce(const MultiGraph& g, CountParams p, const Bitset& edges) {
    std::vector<int> elems = edges.elements();
    int me = int(elems.size());
    if (me > 20) throw MatroidError("count_rank_bruteforce: more than 2^20 subsets");
    uint64_t total = uint64_t(1) << me;
    std::vector<char> indep(total, 0);
    indep[0] = 1;
    int rank = 0;
    for (uint64_t s = 1; s < total; ++s) {
        std::vector<bool> seen(g.num_vertices(), false);
        int nv = 0, ne = 0;
        bool ok = true;
        for (int i = 0; i < me && ok; ++i) {
            if (!((s >> i) & 1)) continue;
            ++ne;
            if (!indep[s & ~(uint64_t(1) << i)]) ok = false;
            const auto& ed = g.edge(elems[i]);
            for (int x : {ed.u, ed.v})
                if (!seen[x]) {
                    seen[x] = true;
                    ++nv;
                }
        }
        if (ok && ne <= p.k * nv - p.l) {
            indep[s] = 1;
            rank = std::max(rank, ne);
        }
    }
    return rank;
}

RankOracle count_oracle(const MultiGraph& g, CountParams p) {
    return {g.num_edges(), [&g, p](const Bitset& s) { return count_rank(g, p, s); }};
}

std::vector<std::vector<int>> uncross_partition(const MultiGraph& g, CountParams p,
                                                const std::vector<Bitset>& parts) {
    std::vector<std::vector<bool>> sets;
    for (const Bitset& part : parts) {
        if (part.empty()) continue;
        std::vector<bool> in(g.num_vertices(), false);
        part.for_each([&](int e) {
            in[g.edge(e).u] = true;
            in[g.edge(e).v] = true;
        });
        sets.push_back(std::move(in));
    }
    int thr = threshold_for_merge(p);
    bool merged = true;
    while (merged) {
        merged = false;
        for (size_t i = 0; i < sets.size() && !merged; ++i)
            for (size_t j = i + 1; j < sets.size() && !merged; ++j) {
                int common = 0;
                for (int v = 0; v < g.num_vertices(); ++v) common += sets[i][v] && sets[j][v];
                if (common >= thr) {
                    for (int v = 0; v < g.num_vertices(); ++v)
                        if (sets[j][v]) sets[i][v] = true;
                    sets.erase(sets.begin() + j);
                    merged = true;
                }
            }
    }
    std::vector<std::vector<int>> out;
    for (const auto& in : sets) {
        std::vector<int> vs;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (in[v]) vs.push_back(v);
        out.push_back(std::move(vs));
    }
    std::sort(out.begin(), out.end());
    return out;
}

int certificate_value(CountParams p, const CoverCertificate& c) {
    int val = int(c.F.size());
    for (const auto& x : c.cover) val += p.k * int(x.size()) - p.l;
    return val;
}

CoverCertificate rank_certificate(const MultiGraph& g, CountParams p, const Bitset& edges) {
    if (edges.empty()) throw MatroidError("rank_certificate: empty edge set");
    CoverCertificate cert;
    cert.rank = count_rank(g, p, edges);

    RankOracle local = restrict_oracle(count_oracle(g, p), edges);
    Components comps = components(local);
    std::vector<int> elems = edges.elements();

    std::vector<Bitset> nontrivial;
    for (size_t i = 0; i < comps.parts.size(); ++i) {
        Bitset lifted(g.num_edges());
        comps.parts[i].for_each([&](int j) { lifted.set(elems[j]); });
        if (comps.trivial[i])
            cert.F.push_back(lifted.elements()[0]);
        else
            nontrivial.push_back(lifted);
    }
    std::sort(cert.F.begin(), cert.F.end());
    cert.cover = uncross_partition(g, p, nontrivial);

    if (certificate_value(p, cert) != cert.rank)
        throw MatroidError("internal: certificate value " +
                           std::to_string(certificate_value(p, cert)) + " != rank " +
                           std::to_string(cert.rank));
    return cert;
}

std::string certificate_json(const MultiGraph& g, const CoverCertificate& c) {
    nlohmann::json j;
    j["rank"] = c.rank;
    j["F"] = nlohmann::json::array();
    for (int e : c.F) j["F"].push_back(g.edge(e).id);
    j["cover"] = nlohmann::json::array();
    for (const auto& x : c.cover) {
        nlohmann::json set = nlohmann::json::array();
        for (int v : x) set.push_back(g.vertex_id(v));
        j["cover"].push_back(set);
    }
    return j.dump();
}

bool is_sparse(const MultiGraph& g, CountParams p) {
    Bitset all = Bitset::full(g.num_edges());
    return count_rank(g, p, all) == g.num_edges();
}

bool is_rigid(const MultiGraph& g, CountParams p) {
    if (g.num_vertices() < 2) throw MatroidError("rigidity predicates need >= 2 vertices");
    Bitset all = Bitset::full(g.num_edges());
    return count_rank(g, p, all) == p.k * g.num_vertices() - p.l;
}

bool is_tight(const MultiGraph& g, CountParams p) { return is_sparse(g, p) && is_rigid(g, p); }

bool is_redundant(const MultiGraph& g, CountParams p) {
    if (g.num_vertices() < 2) throw MatroidError("rigidity predicates need >= 2 vertices");
    int target = p.k * g.num_vertices() - p.l;
    Bitset all = Bitset::full(g.num_edges());
    if (count_rank(g, p, all) != target) return false;
    for (int e = 0; e < g.num_edges(); ++e) {
        Bitset rest = all;
        rest.reset(e);
        if (count_rank(g, p, rest) != target) return false;
    }
    return true;
}

Components m_components(const MultiGraph& g, CountParams p) {
    return components(count_oracle(g, p));
}

} // namespace matkit
