#pragma once

#include <optional>
#include <string>
#include <vector>

#include "matkit/graph.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

struct Hinge {
    int a, b;
    int degree;
};

// Hinge pairs of a 2-thin cover; throws if some intersection exceeds 2.
std::vector<Hinge> hinges(const std::vector<std::vector<int>>& cover);

// An ordering with |X_i ∩ (X_1 ∪ … ∪ X_{i-1})| <= 4 for all i, found by
// backtracking, or nullopt if none exists.
std::optional<std::vector<int>> shelling_order(const std::vector<std::vector<int>>& cover);

struct CofactorCertificate {
    int rank = 0;
    int t = 1;
    std::vector<int> F;                  // edge indices
    std::vector<std::vector<int>> cover; // vertex sets, each of size >= 5
    std::vector<Hinge> hinge_list;
    std::vector<int> shelling;
};

struct CofactorOptions {
    int max_vertices = 8; // exhaustive-search cap; refuse above
    bool prune = true;    // false = no-pruning cross-check mode
    bool parallel = true;
};

CofactorCertificate cofactor_rt(const MultiGraph& g, const Bitset& edges, int t,
                                CofactorOptions opts = {});
CofactorCertificate cofactor_r1(const MultiGraph& g, const Bitset& edges,
                                CofactorOptions opts = {});
// Rank only, skipping certificate assembly and its bridge assertions.
int cofactor_rank(const MultiGraph& g, const Bitset& edges, int t, CofactorOptions opts = {});
RankOracle cofactor_oracle(const MultiGraph& g, int t = 1, CofactorOptions opts = {});

int cofactor_certificate_value(const CofactorCertificate& c);
// Recomputes coverage, thinness, hinges and shellability from scratch.
bool cofactor_certificate_valid(const MultiGraph& g, const Bitset& edges,
                                const CofactorCertificate& c);
std::string cofactor_certificate_json(const MultiGraph& g, const CofactorCertificate& c);

// r_t(K_n) = 3tn - 6t for n >= 6t.
int kn_rank(int n, int t);

// Telescoped lower bound from r_t(E) >= r_t(E - delta(v)) + min(3t, d(v));
// after peeling the listed vertices the rest of E' must induce a complete
// graph of known rank (or nothing).
int peel_lower_bound(const MultiGraph& g, const Bitset& edges, int t,
                     const std::vector<int>& order);

// t edge-disjoint spanning subgraphs, each of cofactor rank 3|V|-6 and
// 3-connected; requires r_t(E) = 3t|V|-6t.
std::vector<MultiGraph> extract_three_connected(const MultiGraph& g, int t,
                                                CofactorOptions opts = {});

} // namespace matkit
