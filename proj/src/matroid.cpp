#include "matkit/matroid.hpp"

#include <algorithm>
#include <deque>
#include <random>

#include <nlohmann/json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace matkit {

namespace {

bool indep(const RankOracle& o, const Bitset& s) { return o.rank(s) == s.count(); }

} // namespace

bool check_rank_axioms(const RankOracle& o, int samples, unsigned seed) {
    std::mt19937 rng(seed);
    if (o.rank(Bitset(o.m)) != 0) return false;
    for (int it = 0; it < samples; ++it) {
        Bitset a(o.m), b(o.m);
        for (int e = 0; e < o.m; ++e) {
            int r = int(rng() % 4);
            if (r & 1) a.set(e);
            if (r & 2) b.set(e);
        }
        int ra = o.rank(a), rb = o.rank(b);
        if (ra < 0 || ra > a.count()) return false;
        if (a.contains(b) && rb > ra) return false; // b subseteq a
        if (o.rank(a | b) + o.rank(a & b) > ra + rb) return false;
    }
    return true;
}

// ---- union -----------------------------------------------------------------

UnionResult union_rank(const std::vector<RankOracle>& oracles, const Bitset& query) {
    int t = int(oracles.size());
    if (t == 0) throw MatroidError("union of zero matroids");
    int m = oracles[0].m;
    for (const auto& o : oracles)
        if (o.m != m) throw MatroidError("union oracles must share the ground set");

    std::vector<Bitset> parts(t, Bitset(m));
    std::vector<int> assign(m, -1);
    std::vector<int> elems = query.elements();

    // Both checks are only meaningful for x outside parts[i]; with x already
    // inside, parts[i] + x degenerates to parts[i] and would fake a sink.
    auto can_insert = [&](int i, int x) {
        if (assign[x] == i) return false;
        Bitset s = parts[i];
        s.set(x);
        return indep(oracles[i], s);
    };
    auto can_swap = [&](int i, int x, int y) {
        // parts[i] - y + x independent in oracle i
        if (assign[x] == i) return false;
        Bitset s = parts[i];
        s.reset(y);
        s.set(x);
        return indep(oracles[i], s);
    };

    for (int e : elems) {
        // BFS over the exchange digraph; arcs x -> y mean "x replaces y".
        std::vector<int> parent(m, -2);
        std::deque<int> queue{e};
        parent[e] = -1;
        int sink = -1, sink_part = -1;
        while (!queue.empty() && sink < 0) {
            int x = queue.front();
            queue.pop_front();
            for (int i = 0; i < t; ++i)
                if (can_insert(i, x)) {
                    sink = x;
                    sink_part = i;
                    break;
                }
            if (sink >= 0) break;
            for (int y : query.elements()) {
                if (parent[y] != -2 || assign[y] < 0) continue;
                if (can_swap(assign[y], x, y)) {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if (sink < 0) continue; // e stays outside the common independent set
        // Shift along the path: sink enters sink_part, each predecessor takes
        // the place its successor vacated.
        int z = sink;
        int into = sink_part;
        while (true) {
            if (assign[z] >= 0) {
                int from = assign[z];
                parts[from].reset(z);
                parts[into].set(z);
                assign[z] = into;
                into = from;
            } else {
                parts[into].set(z);
                assign[z] = into;
                break; // z == e
            }
            z = parent[z];
        }
    }

    UnionResult res;
    res.parts = parts;
    for (int x : elems) res.rank += assign[x] >= 0;
    return res;
}

int union_rank_exhaustive(const std::vector<RankOracle>& oracles, const Bitset& query) {
    std::vector<int> elems = query.elements();
    int mq = int(elems.size());
    if (mq > 22) throw MatroidError("union_rank_exhaustive: ground set too large");
    int best = mq + 1;
    for (uint64_t mask = 0; mask < (uint64_t(1) << mq); ++mask) {
        Bitset rest(oracles[0].m);
        int fsize = 0;
        for (int i = 0; i < mq; ++i) {
            if ((mask >> i) & 1)
                ++fsize;
            else
                rest.set(elems[i]);
        }
        if (fsize >= best) continue;
        int val = fsize;
        for (const auto& o : oracles) {
            val += o.rank(rest);
            if (val >= best) break;
        }
        best = std::min(best, val);
    }
    return best;
}

// ---- closure and flats -----------------------------------------------------

Bitset closure(const RankOracle& o, const Bitset& a) {
    int ra = o.rank(a);
    Bitset out = a;
    for (int e = 0; e < o.m; ++e) {
        if (a.test(e)) continue;
        Bitset s = a;
        s.set(e);
        if (o.rank(s) == ra) out.set(e);
    }
    return out;
}

bool is_closed(const RankOracle& o, const Bitset& a) { return closure(o, a) == a; }

bool is_k_hyperplane(const RankOracle& o, const Bitset& f, int k) {
    return o.rank(f) == o.full_rank() - k && is_closed(o, f);
}

Bitset fundamental_circuit(const RankOracle& o, const Bitset& basis, int e) {
    if (basis.test(e)) throw MatroidError("fundamental_circuit: e already in basis");
    int rb = o.rank(basis);
    Bitset be = basis;
    be.set(e);
    if (o.rank(be) != rb) throw MatroidError("fundamental_circuit: e independent of basis");
    Bitset circ(o.m);
    circ.set(e);
    basis.for_each([&](int b) {
        Bitset s = be;
        s.reset(b);
        if (o.rank(s) == rb) circ.set(b);
    });
    return circ;
}

Bitset greedy_basis(const RankOracle& o, const Bitset& within) {
    Bitset b(o.m);
    int r = 0;
    std::vector<int> elems = within.elements();
    for (int e : elems) {
        Bitset s = b;
        s.set(e);
        if (o.rank(s) == r + 1) {
            b = s;
            ++r;
        }
    }
    return b;
}

// ---- components ------------------------------------------------------------

namespace {

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) {
        for (int i = 0; i < n; ++i) p[i] = i;
    }
    int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

} // namespace

Components components(const RankOracle& o) {
    if (o.m == 0) throw MatroidError("components: empty ground set");
    UnionFind uf(o.m);
    std::vector<bool> loop(o.m, false);
    Bitset nonloops(o.m);
    for (int e = 0; e < o.m; ++e) {
        Bitset s(o.m);
        s.set(e);
        if (o.rank(s) == 0)
            loop[e] = true;
        else
            nonloops.set(e);
    }
    Bitset basis = greedy_basis(o, nonloops);
    nonloops.for_each([&](int e) {
        if (basis.test(e)) return;
        Bitset circ = fundamental_circuit(o, basis, e);
        circ.for_each([&](int f) { uf.unite(e, f); });
    });

    std::vector<int> root_part(o.m, -1);
    Components out;
    for (int e = 0; e < o.m; ++e) {
        int r = uf.find(e);
        if (root_part[r] < 0) {
            root_part[r] = int(out.parts.size());
            out.parts.emplace_back(o.m);
        }
        out.parts[root_part[r]].set(e);
    }
    for (const Bitset& p : out.parts) out.trivial.push_back(p.count() == 1);
    return out;
}

Components components_bruteforce(const RankOracle& o) {
    if (o.m == 0) throw MatroidError("components: empty ground set");
    Components out;
    std::vector<Bitset> stack{Bitset::full(o.m)};
    while (!stack.empty()) {
        Bitset s = stack.back();
        stack.pop_back();
        std::vector<int> elems = s.elements();
        int ms = int(elems.size());
        if (ms > 24) throw MatroidError("components_bruteforce: too large");
        int rs = o.rank(s);
        bool split = false;
        if (ms >= 2) {
            for (uint64_t mask = 1; mask < (uint64_t(1) << (ms - 1)) && !split; ++mask) {
                Bitset a(o.m), b(o.m);
                b.set(elems[ms - 1]); // fix last element on the b side
                for (int i = 0; i < ms - 1; ++i)
                    ((mask >> i) & 1 ? a : b).set(elems[i]);
                if (o.rank(a) + o.rank(b) == rs) {
                    stack.push_back(a);
                    stack.push_back(b);
                    split = true;
                }
            }
        }
        if (!split) {
            out.parts.push_back(s);
            out.trivial.push_back(ms == 1);
        }
    }
    std::sort(out.parts.begin(), out.parts.end());
    out.trivial.clear();
    for (const Bitset& p : out.parts) out.trivial.push_back(p.count() == 1);
    return out;
}

RankOracle restrict_oracle(const RankOracle& o, const Bitset& within) {
    std::vector<int> elems = within.elements();
    int m0 = o.m;
    return {int(elems.size()), [elems, m0, base = o.rank](const Bitset& s) {
                Bitset lifted(m0);
                s.for_each([&](int i) { lifted.set(elems[i]); });
                return base(lifted);
            }};
}

// ---- vertical connectivity ---------------------------------------------------

namespace {

template <bool Parallel>
VerticalConnectivity vconn_impl(const RankOracle& o, int max_m) {
    if (o.m > max_m)
        throw MatroidError("vertical_connectivity: ground set exceeds exhaustive cap (" +
                           std::to_string(max_m) + ")");
    if (o.m == 0) throw MatroidError("vertical_connectivity: empty ground set");
    int r = o.full_rank();
    int best_k = r + 1;
    uint64_t best_mask = 0;
    int best_r1 = 0, best_r2 = 0;
    uint64_t total = o.m >= 2 ? (uint64_t(1) << (o.m - 1)) : 1;

#ifdef _OPENMP
#pragma omp parallel if (Parallel)
#endif
    {
        int loc_k = r + 1;
        uint64_t loc_mask = 0;
        int loc_r1 = 0, loc_r2 = 0;
#ifdef _OPENMP
#pragma omp for schedule(dynamic, 256)
#endif
        for (int64_t mask = 1; mask < int64_t(total); ++mask) {
            Bitset e1(o.m), e2(o.m);
            e2.set(o.m - 1);
            for (int i = 0; i < o.m - 1; ++i)
                (((mask >> i) & 1) ? e1 : e2).set(i);
            int r1 = o.rank(e1), r2 = o.rank(e2);
            int k = std::max(1, r1 + r2 - r + 1);
            if (std::min(r1, r2) >= k && k < loc_k) {
                loc_k = k;
                loc_mask = uint64_t(mask);
                loc_r1 = r1;
                loc_r2 = r2;
            }
        }
#ifdef _OPENMP
#pragma omp critical
#endif
        {
            if (loc_k < best_k) {
                best_k = loc_k;
                best_mask = loc_mask;
                best_r1 = loc_r1;
                best_r2 = loc_r2;
            }
        }
    }

    VerticalConnectivity out;
    if (best_k > r) {
        out.value = r;
        return out;
    }
    out.value = best_k;
    Separation sep{Bitset(o.m), Bitset(o.m), best_k, best_r1, best_r2};
    sep.e2.set(o.m - 1);
    for (int i = 0; i < o.m - 1; ++i)
        (((best_mask >> i) & 1) ? sep.e1 : sep.e2).set(i);
    out.witness = sep;
    return out;
}

} // namespace

VerticalConnectivity vertical_connectivity(const RankOracle& o, int max_m) {
    return vconn_impl<true>(o, max_m);
}
VerticalConnectivity vertical_connectivity_serial(const RankOracle& o, int max_m) {
    return vconn_impl<false>(o, max_m);
}

std::string separation_json(const Separation& s, const std::vector<std::string>& elem_ids) {
    nlohmann::json j;
    j["order"] = s.order;
    j["r1"] = s.r1;
    j["r2"] = s.r2;
    auto names = [&](const Bitset& b) {
        nlohmann::json a = nlohmann::json::array();
        b.for_each([&](int e) { a.push_back(elem_ids[e]); });
        return a;
    };
    j["E1"] = names(s.e1);
    j["E2"] = names(s.e2);
    return j.dump();
}

} // namespace matkit
