#include "matkit/cofactor.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include <nlohmann/json.hpp>

#include "matkit/graph.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matkit {

namespace {

// ---- shellability over vertex masks ----------------------------------------

uint64_t family_union(const std::vector<uint64_t>& sets, uint32_t members) {
    uint64_t u = 0;
    for (size_t i = 0; i < sets.size(); ++i)
        if ((members >> i) & 1) u |= sets[i];
    return u;
}

// Subset DP: S is orderable iff some member can come last, i.e. meets the
// union of the rest in <= 4 vertices.
bool shellable_masks(const std::vector<uint64_t>& sets, std::vector<int8_t>& memo,
                     uint32_t members) {
    if (members == 0) return true;
    int8_t& m = memo[members];
    if (m >= 0) return m;
    m = 0;
    for (size_t i = 0; i < sets.size() && !m; ++i) {
        if (!((members >> i) & 1)) continue;
        uint32_t rest = members & ~(uint32_t(1) << i);
        if (std::popcount(sets[i] & family_union(sets, rest)) <= 4 &&
            shellable_masks(sets, memo, rest))
            m = 1;
    }
    return m;
}

std::optional<std::vector<int>> shelling_masks(const std::vector<uint64_t>& sets) {
    int s = int(sets.size());
    if (s > 20) throw MatroidError("shelling_order: family too large");
    std::vector<int8_t> memo(size_t(1) << s, -1);
    uint32_t all = s == 0 ? 0 : (uint32_t(1) << s) - 1;
    if (!shellable_masks(sets, memo, all)) return std::nullopt;
    std::vector<int> order;
    uint32_t members = all;
    while (members) {
        for (int i = 0; i < s; ++i) {
            if (!((members >> i) & 1)) continue;
            uint32_t rest = members & ~(uint32_t(1) << i);
            if (std::popcount(sets[i] & family_union(sets, rest)) <= 4 &&
                shellable_masks(sets, memo, rest)) {
                order.push_back(i);
                members = rest;
                break;
            }
        }
    }
    std::reverse(order.begin(), order.end());
    return order;
}

std::vector<uint64_t> to_masks(const std::vector<std::vector<int>>& cover,
                               std::map<int, int>* vmap_out = nullptr) {
    std::map<int, int> vmap;
    for (const auto& x : cover)
        for (int v : x) vmap.emplace(v, 0);
    int idx = 0;
    for (auto& [v, i] : vmap) i = idx++;
    if (idx > 64) throw MatroidError("cover spans more than 64 vertices");
    std::vector<uint64_t> masks;
    for (const auto& x : cover) {
        uint64_t m = 0;
        for (int v : x) m |= uint64_t(1) << vmap[v];
        masks.push_back(m);
    }
    if (vmap_out) *vmap_out = vmap;
    return masks;
}

// ---- exhaustive rank search -------------------------------------------------

struct BestFamily {
    int value = -1;
    std::vector<int> family; // candidate indices

    bool better_than(const BestFamily& o) const {
        if (o.value < 0) return true;
        if (value != o.value) return value < o.value;
        return family < o.family;
    }
};

struct SearchCtx {
    const MultiGraph* g;
    int t;
    bool prune;
    std::vector<uint64_t> cand;      // vertex masks, popcount >= 5
    std::vector<int> elems;          // edge indices of E'
    std::vector<uint64_t> edge_mask; // endpoint mask per element

    int evaluate(const std::vector<int>& fam) const {
        std::vector<uint64_t> sets;
        for (int i : fam) sets.push_back(cand[i]);
        if (prune == false) {
            std::vector<int8_t> memo(size_t(1) << sets.size(), -1);
            uint32_t all = sets.empty() ? 0 : (uint32_t(1) << sets.size()) - 1;
            if (!shellable_masks(sets, memo, all)) return -1;
        }
        int value = 0;
        for (uint64_t em : edge_mask) {
            bool covered = false;
            for (uint64_t s : sets)
                if ((em & s) == em) {
                    covered = true;
                    break;
                }
            value += !covered;
        }
        for (uint64_t s : sets) value += t * (3 * std::popcount(s) - 6);
        int n = g->num_vertices();
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                uint64_t pair = (uint64_t(1) << x) | (uint64_t(1) << y);
                int deg = 0;
                for (uint64_t s : sets) deg += (s & pair) == pair;
                if (deg >= 2) value -= t * (deg - 1);
            }
        return value;
    }

    void extend(std::vector<int>& fam, int start, BestFamily& best) const {
        int value = evaluate(fam);
        if (value >= 0) {
            BestFamily here{value, fam};
            if (here.better_than(best)) best = here;
        }
        for (int i = start; i < int(cand.size()); ++i) {
            bool thin = true;
            for (int j : fam)
                if (std::popcount(cand[j] & cand[i]) > 2) {
                    thin = false;
                    break;
                }
            if (!thin) continue;
            fam.push_back(i);
            bool go = true;
            if (prune) {
                // unshellable families stay unshellable under extension
                std::vector<uint64_t> sets;
                for (int k : fam) sets.push_back(cand[k]);
                std::vector<int8_t> memo(size_t(1) << sets.size(), -1);
                go = shellable_masks(sets, memo, (uint32_t(1) << sets.size()) - 1);
            }
            if (go) extend(fam, i + 1, best);
            fam.pop_back();
        }
    }
};

BestFamily search_families(const SearchCtx& ctx, bool parallel) {
    BestFamily best;
    int s = int(ctx.cand.size());
#ifdef _OPENMP
#pragma omp parallel if (parallel)
#endif
    {
        BestFamily local;
#ifdef _OPENMP
#pragma omp for schedule(dynamic)
#endif
        for (int first = -1; first < s; ++first) {
            std::vector<int> fam;
            if (first >= 0) {
                fam.push_back(first);
                ctx.extend(fam, first + 1, local);
            } else {
                BestFamily here{ctx.evaluate(fam), fam};
                if (here.better_than(local)) local = here;
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            if (local.value >= 0 && local.better_than(best)) best = local;
        }
    }
    return best;
}

SearchCtx make_ctx(const MultiGraph& g, const Bitset& edges, int t, const CofactorOptions& o) {
    if (!g.is_simple()) throw MatroidError("cofactor matroid is defined for simple graphs only");
    if (edges.universe() != g.num_edges()) throw MatroidError("edge set universe mismatch");
    if (g.num_vertices() > o.max_vertices)
        throw MatroidError("cofactor rank: graph exceeds exhaustive cap (" +
                           std::to_string(o.max_vertices) + " vertices)");
    if (t < 1) throw MatroidError("cofactor rank: t must be positive");
    SearchCtx ctx;
    ctx.g = &g;
    ctx.t = t;
    ctx.prune = o.prune;
    ctx.elems = edges.elements();
    for (int e : ctx.elems)
        ctx.edge_mask.push_back((uint64_t(1) << g.edge(e).u) | (uint64_t(1) << g.edge(e).v));
    int n = g.num_vertices();
    for (uint64_t mask = 0; mask < (uint64_t(1) << n); ++mask)
        if (std::popcount(mask) >= 5) ctx.cand.push_back(mask);
    return ctx;
}

int rank_only(const MultiGraph& g, const Bitset& edges, int t, const CofactorOptions& o) {
    if (edges.empty()) return 0;
    SearchCtx ctx = make_ctx(g, edges, t, o);
    return search_families(ctx, o.parallel).value;
}

bool is_complete_simple(const MultiGraph& g) {
    if (!g.is_simple()) return false;
    int n = g.num_vertices();
    return g.num_edges() == n * (n - 1) / 2;
}

} // namespace

std::vector<Hinge> hinges(const std::vector<std::vector<int>>& cover) {
    for (size_t i = 0; i < cover.size(); ++i)
        for (size_t j = i + 1; j < cover.size(); ++j) {
            std::vector<int> a = cover[i], b = cover[j], common;
            std::sort(a.begin(), a.end());
            std::sort(b.begin(), b.end());
            std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                                  std::back_inserter(common));
            if (common.size() > 2) throw MatroidError("hinges: cover is not 2-thin");
        }
    std::map<std::pair<int, int>, int> deg;
    for (const auto& x : cover)
        for (size_t i = 0; i < x.size(); ++i)
            for (size_t j = i + 1; j < x.size(); ++j)
                ++deg[{std::min(x[i], x[j]), std::max(x[i], x[j])}];
    std::vector<Hinge> out;
    for (const auto& [pair, d] : deg)
        if (d >= 2) out.push_back({pair.first, pair.second, d});
    return out;
}

std::optional<std::vector<int>> shelling_order(const std::vector<std::vector<int>>& cover) {
    return shelling_masks(to_masks(cover));
}

int cofactor_certificate_value(const CofactorCertificate& c) {
    int v = int(c.F.size());
    for (const auto& x : c.cover) v += c.t * (3 * int(x.size()) - 6);
    for (const Hinge& h : hinges(c.cover)) v -= c.t * (h.degree - 1);
    return v;
}

bool cofactor_certificate_valid(const MultiGraph& g, const Bitset& edges,
                                const CofactorCertificate& c) {
    for (const auto& x : c.cover)
        if (x.size() < 5) return false;
    if (!shelling_order(c.cover)) return false;
    Bitset f(g.num_edges());
    for (int e : c.F) {
        if (!edges.test(e)) return false;
        f.set(e);
    }
    std::vector<int> leftovers = (edges - f).elements();
    for (int e : leftovers) {
        bool covered = false;
        for (const auto& x : c.cover) {
            bool u = std::find(x.begin(), x.end(), g.edge(e).u) != x.end();
            bool v = std::find(x.begin(), x.end(), g.edge(e).v) != x.end();
            if (u && v) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return cofactor_certificate_value(c) == c.rank;
}

CofactorCertificate cofactor_rt(const MultiGraph& g, const Bitset& edges, int t,
                                CofactorOptions opts) {
    CofactorCertificate cert;
    cert.t = t;
    if (edges.empty()) {
        if (!g.is_simple())
            throw MatroidError("cofactor matroid is defined for simple graphs only");
        return cert;
    }
    SearchCtx ctx = make_ctx(g, edges, t, opts);
    BestFamily best = search_families(ctx, opts.parallel);
    cert.rank = best.value;
    for (int i : best.family) {
        std::vector<int> vs;
        for (int v = 0; v < g.num_vertices(); ++v)
            if ((ctx.cand[i] >> v) & 1) vs.push_back(v);
        cert.cover.push_back(vs);
    }
    for (size_t i = 0; i < ctx.elems.size(); ++i) {
        bool covered = false;
        for (int j : best.family)
            if ((ctx.edge_mask[i] & ctx.cand[j]) == ctx.edge_mask[i]) covered = true;
        if (!covered) cert.F.push_back(ctx.elems[i]);
    }
    cert.hinge_list = hinges(cert.cover);
    cert.shelling = shelling_order(cert.cover).value();
    if (cofactor_certificate_value(cert) != cert.rank)
        throw MatroidError("internal: cofactor certificate value mismatch");
    // members of F must be bridges of E' in C^t(G)
    for (int f : cert.F) {
        Bitset rest = edges;
        rest.reset(f);
        if (rank_only(g, rest, t, opts) != cert.rank - 1)
            throw MatroidError("internal: certificate F contains a non-bridge");
    }
    return cert;
}

CofactorCertificate cofactor_r1(const MultiGraph& g, const Bitset& edges, CofactorOptions opts) {
    return cofactor_rt(g, edges, 1, opts);
}

int cofactor_rank(const MultiGraph& g, const Bitset& edges, int t, CofactorOptions opts) {
    return rank_only(g, edges, t, opts);
}

RankOracle cofactor_oracle(const MultiGraph& g, int t, CofactorOptions opts) {
    return {g.num_edges(), [&g, t, opts](const Bitset& s) { return rank_only(g, s, t, opts); }};
}

int kn_rank(int n, int t) {
    if (t < 1) throw MatroidError("kn_rank: t must be positive");
    if (n < 6 * t) throw MatroidError("kn_rank requires n >= 6t");
    return 3 * t * n - 6 * t;
}

int peel_lower_bound(const MultiGraph& g, const Bitset& edges, int t,
                     const std::vector<int>& order) {
    if (!g.is_simple()) throw MatroidError("peel_lower_bound: simple graphs only");
    int n = g.num_vertices();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    edges.for_each([&](int e) {
        adj[g.edge(e).u][g.edge(e).v] = true;
        adj[g.edge(e).v][g.edge(e).u] = true;
    });
    std::vector<bool> gone(n, false);
    int bound = 0;
    for (int v : order) {
        if (v < 0 || v >= n || gone[v]) throw MatroidError("peel_lower_bound: bad order");
        int d = 0;
        for (int w = 0; w < n; ++w) d += !gone[w] && adj[v][w];
        bound += std::min(3 * t, d);
        gone[v] = true;
    }
    std::vector<int> w; // vertices still incident to an edge
    for (int v = 0; v < n; ++v) {
        if (gone[v]) continue;
        for (int u = 0; u < n; ++u)
            if (!gone[u] && adj[v][u]) {
                w.push_back(v);
                break;
            }
    }
    int n0 = int(w.size());
    if (n0 == 0) return bound;
    int rest_edges = 0;
    bool complete = true;
    for (int i = 0; i < n0; ++i)
        for (int j = i + 1; j < n0; ++j) {
            rest_edges += adj[w[i]][w[j]];
            complete = complete && adj[w[i]][w[j]];
        }
    if (n0 <= 4) return bound + rest_edges; // everything independent below 5 vertices
    if (complete && n0 >= 6 * t) return bound + kn_rank(n0, t);
    throw MatroidError("peel_lower_bound: base graph rank unknown");
}

std::vector<MultiGraph> extract_three_connected(const MultiGraph& g, int t, CofactorOptions opts) {
    if (!g.is_simple()) throw MatroidError("extract_three_connected: simple graphs only");
    int n = g.num_vertices();
    int target = 3 * t * n - 6 * t;
    Bitset all = Bitset::full(g.num_edges());
    std::vector<Bitset> parts;

    if (n <= opts.max_vertices) {
        if (rank_only(g, all, t, opts) != target)
            throw MatroidError("extract_three_connected: r_t(E) < 3t|V|-6t");
        std::vector<RankOracle> oracles(t, cofactor_oracle(g, 1, opts));
        UnionResult ur = union_rank(oracles, all);
        if (ur.rank != target)
            throw MatroidError("internal: union rank disagrees with r_t");
        parts = ur.parts;
        // each part is independent and bounded by 3n-6, and they sum to the
        // target, so each has exactly rank 3n-6
        for (const Bitset& p : parts)
            if (p.count() != 3 * n - 6)
                throw MatroidError("internal: extracted part has wrong size");
    } else if (is_complete_simple(g) && n >= 6 * t) {
        CofactorPacking packing = make_cofactor_packing(n, t);
        // map the packing's K_n edges onto g's edge indices by endpoints
        std::map<std::pair<int, int>, int> by_ends;
        for (int e = 0; e < g.num_edges(); ++e) {
            auto& ed = g.edge(e);
            by_ends[{std::min(ed.u, ed.v), std::max(ed.u, ed.v)}] = e;
        }
        for (const Bitset& p : packing.parts) {
            Bitset mapped(g.num_edges());
            p.for_each([&](int e) {
                auto& ed = packing.kn.edge(e);
                mapped.set(by_ends.at({std::min(ed.u, ed.v), std::max(ed.u, ed.v)}));
            });
            parts.push_back(mapped);
        }
        // each part certifies rank 3n-6 by peeling its n-6 outside vertices
        for (int i = 0; i < t; ++i) {
            std::vector<int> order;
            for (int v = 0; v < n; ++v)
                if (v / 6 != i) order.push_back(v);
            if (peel_lower_bound(g, parts[i], 1, order) != 3 * n - 6)
                throw MatroidError("internal: packing part failed peel certification");
        }
    } else {
        throw MatroidError("extract_three_connected: instance beyond exhaustive cap and not a"
                           " complete graph with n >= 6t");
    }

    std::vector<MultiGraph> out;
    for (const Bitset& p : parts) {
        MultiGraph h = g.edge_subgraph(p);
        if (vertex_connectivity(h) < 3)
            throw MatroidError("internal: extracted part is not 3-connected");
        out.push_back(std::move(h));
    }
    return out;
}

std::string cofactor_certificate_json(const MultiGraph& g, const CofactorCertificate& c) {
    nlohmann::json j;
    j["rank"] = c.rank;
    j["t"] = c.t;
    j["F"] = nlohmann::json::array();
    for (int e : c.F) j["F"].push_back(g.edge(e).id);
    j["cover"] = nlohmann::json::array();
    for (const auto& x : c.cover) {
        nlohmann::json set = nlohmann::json::array();
        for (int v : x) set.push_back(g.vertex_id(v));
        j["cover"].push_back(set);
    }
    j["hinges"] = nlohmann::json::array();
    for (const Hinge& h : c.hinge_list)
        j["hinges"].push_back({{"pair", {g.vertex_id(h.a), g.vertex_id(h.b)}},
                               {"degree", h.degree}});
    j["shelling"] = c.shelling;
    return j.dump();
}

} // namespace matkit
