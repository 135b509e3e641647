#include "matkit/reconstruct.hpp"

#include <algorithm>
#include <random>

#include <nlohmann/json.hpp>

#include "matkit/cofactor.hpp"
#include "matkit/count_matroid.hpp"

namespace matkit {

namespace {

RankOracle family_oracle(const std::shared_ptr<const MultiGraph>& g, FamilyTag tag, int cap = 8) {
    if (tag.kind == FamilyTag::Count) {
        CountParams p(tag.k, tag.l);
        return {g->num_edges(), [g, p](const Bitset& s) { return count_rank(*g, p, s); }};
    }
    CofactorOptions o;
    o.max_vertices = cap;
    o.parallel = false; // callers issue many small queries; threading costs more than it saves
    int t = tag.t;
    return {g->num_edges(),
            [g, t, o](const Bitset& s) { return cofactor_rank(*g, s, t, o); }};
}

bool matroid_connected(const RankOracle& o) {
    Components c = components(o);
    return c.parts.size() == 1 && !c.trivial[0];
}

struct StarSearch {
    const RankOracle& o;
    int r, drop, d_max;
    std::vector<Bitset> suffix; // suffix[i] = elements i..m-1
    std::vector<Bitset> found;

    void record(const Bitset& f) {
        if (int(o.m - f.count()) > d_max) return;
        if (!matroid_connected(restrict_oracle(o, f))) return;
        found.push_back(f);
    }

    void scan(int i, Bitset& kept, Bitset& deleted) {
        if (int(deleted.count()) > d_max) return;
        int lo = o.rank(kept);
        if (lo > r - drop) return;
        if (lo == r - drop) {
            // any completion F >= kept with the target rank that is closed
            // must equal closure(kept)
            Bitset f = closure(o, kept);
            if ((f & deleted).empty()) record(f);
            return;
        }
        Bitset s = kept | suffix[i];
        int hi = o.rank(s);
        if (hi < r - drop) return;
        if (hi == r - drop) {
            // the only completion inside s reaching rank r-drop while closed
            // is s itself
            if (is_closed(o, s)) record(s);
            return;
        }
        if (i == o.m) return; // lo < r-drop < hi is impossible here
        deleted.set(i);
        scan(i + 1, kept, deleted);
        deleted.reset(i);
        kept.set(i);
        scan(i + 1, kept, deleted);
        kept.reset(i);
    }
};

} // namespace

std::vector<Bitset> find_star_complements(const RankOracle& o, int drop, int d_max) {
    StarSearch s{o, o.full_rank(), drop, d_max, {}, {}};
    for (int i = 0; i <= o.m; ++i) {
        Bitset b(o.m);
        for (int j = i; j < o.m; ++j) b.set(j);
        s.suffix.push_back(b);
    }
    Bitset kept(o.m), deleted(o.m);
    s.scan(0, kept, deleted);
    std::sort(s.found.begin(), s.found.end());
    s.found.erase(std::unique(s.found.begin(), s.found.end()), s.found.end());
    return s.found;
}

MultiGraph assemble(const std::vector<Bitset>& stars, const std::vector<std::string>& ids) {
    int m = int(ids.size());
    MultiGraph g;
    for (size_t v = 0; v < stars.size(); ++v) g.add_vertex("v" + std::to_string(v));
    for (int e = 0; e < m; ++e) {
        std::vector<int> at;
        for (size_t v = 0; v < stars.size(); ++v)
            if (stars[v].test(e)) at.push_back(int(v));
        if (at.size() != 2) throw MatroidError("not a star family: element " + ids[e] +
                                               " lies in " + std::to_string(at.size()) +
                                               " stars");
        g.add_edge(ids[e], at[0], at[1]);
    }
    return g;
}

namespace {

MultiGraph reconstruct_impl(const LabeledMatroid& m, int drop, bool wheel_completion,
                            const ReconstructOptions& opts) {
    const RankOracle& o = m.oracle;
    if (o.m < 2) throw MatroidError("reconstruction failed: too few elements");
    if (!matroid_connected(o))
        throw MatroidError("reconstruction failed: matroid is not connected");

    std::vector<Bitset> complements = find_star_complements(o, drop, opts.d_max);
    std::vector<Bitset> stars;
    for (const Bitset& f : complements) stars.push_back(Bitset::full(o.m) - f);

    // incidence audit; under the bicircular wheel case the hub star is the
    // set of elements covered exactly once
    std::vector<int> times(o.m, 0);
    for (const Bitset& s : stars) s.for_each([&](int e) { ++times[e]; });
    bool all_two = std::all_of(times.begin(), times.end(), [](int c) { return c == 2; });
    if (!all_two && wheel_completion) {
        Bitset hub(o.m);
        bool plausible = true;
        for (int e = 0; e < o.m; ++e) {
            if (times[e] == 1)
                hub.set(e);
            else if (times[e] != 2)
                plausible = false;
        }
        if (plausible && !hub.empty()) {
            stars.push_back(hub);
            all_two = true;
        }
    }
    if (!all_two)
        throw MatroidError("reconstruction failed: hyperplane family is not a star family");

    MultiGraph h = assemble(stars, m.elements);

    // verify the output's matroid against the input oracle under the
    // identity element map
    auto hp = std::make_shared<const MultiGraph>(h);
    RankOracle ho = family_oracle(hp, m.family, opts.cofactor_cap);
    Bitset all = Bitset::full(o.m);
    if (ho.rank(all) != o.rank(all))
        throw MatroidError("reconstruction failed: full rank disagrees");
    std::mt19937 rng(opts.seed);
    for (int it = 0; it < opts.samples; ++it) {
        Bitset s(o.m);
        for (int e = 0; e < o.m; ++e)
            if (rng() & 1) s.set(e);
        if (ho.rank(s) != o.rank(s))
            throw MatroidError("reconstruction failed: rank function disagrees on a sample");
    }
    return h;
}

} // namespace

MultiGraph reconstruct_count(const LabeledMatroid& m, ReconstructOptions opts) {
    if (m.family.kind != FamilyTag::Count)
        throw MatroidError("reconstruct_count: family tag is not count");
    if (m.family.k == 1 && m.family.l == 0) return reconstruct_bicircular(m, opts);
    return reconstruct_impl(m, m.family.k, false, opts);
}

MultiGraph reconstruct_bicircular(const LabeledMatroid& m, ReconstructOptions opts) {
    if (m.family.kind != FamilyTag::Count || m.family.k != 1 || m.family.l != 0)
        throw MatroidError("reconstruct_bicircular: family tag is not count(1,0)");
    return reconstruct_impl(m, 1, true, opts);
}

MultiGraph reconstruct_cofactor(const LabeledMatroid& m, ReconstructOptions opts) {
    if (m.family.kind != FamilyTag::Cofactor)
        throw MatroidError("reconstruct_cofactor: family tag is not cofactor");
    return reconstruct_impl(m, 3 * m.family.t, false, opts);
}

MultiGraph reconstruct(const LabeledMatroid& m, ReconstructOptions opts) {
    return m.family.kind == FamilyTag::Count ? reconstruct_count(m, opts)
                                             : reconstruct_cofactor(m, opts);
}

LabeledMatroid make_labeled(const MultiGraph& hidden, FamilyTag tag) {
    LabeledMatroid m;
    m.hidden = std::make_shared<const MultiGraph>(hidden);
    m.family = tag;
    for (int e = 0; e < hidden.num_edges(); ++e) m.elements.push_back("x" + std::to_string(e));
    m.oracle = family_oracle(m.hidden, tag);
    return m;
}

LabeledMatroid read_labeled_matroid(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& ex) {
        throw MatroidError(std::string("matroid JSON parse error: ") + ex.what());
    }
    if (!j.contains("elements") || !j.contains("family") || !j.contains("graph"))
        throw MatroidError("matroid JSON needs elements, family, graph");
    LabeledMatroid m;
    for (const auto& e : j["elements"]) m.elements.push_back(e.get<std::string>());
    const auto& fam = j["family"];
    if (fam.contains("count")) {
        m.family.kind = FamilyTag::Count;
        m.family.k = fam["count"].at("k").get<int>();
        m.family.l = fam["count"].at("l").get<int>();
        CountParams check(m.family.k, m.family.l); // validates ranges
        (void)check;
    } else if (fam.contains("cofactor")) {
        m.family.kind = FamilyTag::Cofactor;
        m.family.t = fam["cofactor"].at("t").get<int>();
        if (m.family.t < 1) throw MatroidError("matroid JSON: t must be positive");
    } else {
        throw MatroidError("matroid JSON: family must be count or cofactor");
    }
    m.hidden = std::make_shared<const MultiGraph>(read_graph_json(j["graph"].dump()));
    if (int(m.elements.size()) != m.hidden->num_edges())
        throw MatroidError("matroid JSON: element count differs from graph edge count");
    m.oracle = family_oracle(m.hidden, m.family);
    return m;
}

} // namespace matkit
