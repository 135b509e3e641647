#ifndef MATKIT_MATROID_HPP
#define MATKIT_MATROID_HPP

#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "matkit/bitset.hpp"

namespace matkit {

struct MatroidError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matroid given by its ground set size and rank function. Rank functions
// must be pure; exhaustive scans may query them from parallel workers.
struct RankOracle {
    int m = 0;
    std::function<int(const Bitset&)> rank;

    int rank_of(const std::vector<int>& elems) const { return rank(Bitset::of(m, elems)); }
    int full_rank() const { return rank(Bitset::full(m)); }
};

struct Separation {
    Bitset e1, e2;
    int order = 0; // the k of the vertical k-separation
    int r1 = 0, r2 = 0;
};

// Spot-check of the rank axioms on random subsets (normalization,
// monotonicity, submodularity, unit increase).
bool check_rank_axioms(const RankOracle& o, int samples, unsigned seed);

// ---- union -----------------------------------------------------------------

struct UnionResult {
    int rank = 0;
    // parts[i] is independent in oracles[i]; parts partition a maximal
    // independent set of the union restricted to the query set.
    std::vector<Bitset> parts;
};

// Matroid union via exchange-digraph augmentation. All oracles must share the
// ground set.
UnionResult union_rank(const std::vector<RankOracle>& oracles, const Bitset& query);

// Exhaustive engine: min over F of |F| + sum r_i(E'-F). Desk scale only
// (refuses above 2^22 subsets).
int union_rank_exhaustive(const std::vector<RankOracle>& oracles, const Bitset& query);

// ---- closure and flats -----------------------------------------------------

Bitset closure(const RankOracle& o, const Bitset& a);
bool is_closed(const RankOracle& o, const Bitset& a);
bool is_k_hyperplane(const RankOracle& o, const Bitset& f, int k);

// Unique circuit in B + e for a basis B and e dependent on B.
Bitset fundamental_circuit(const RankOracle& o, const Bitset& basis, int e);

// Greedy basis of a subset (lowest element ids first).
Bitset greedy_basis(const RankOracle& o, const Bitset& within);

// ---- components ------------------------------------------------------------

struct Components {
    std::vector<Bitset> parts;      // partition of the ground set
    std::vector<bool> trivial;      // single-element classes (bridges/loops)
    int count_nontrivial() const {
        int c = 0;
        for (bool t : trivial) c += !t;
        return c;
    }
};

// Fixed-basis fundamental-circuit link graph. Loops are their own components.
Components components(const RankOracle& o);

// Brute-force reference: recursive bipartition scan for separators with
// r(E1) + r(E2) = r(E). Exponential; for cross-validation only.
Components components_bruteforce(const RankOracle& o);

// Restriction of an oracle to a subset (ground set re-indexed to the subset's
// elements in increasing order).
RankOracle restrict_oracle(const RankOracle& o, const Bitset& within);

// ---- vertical connectivity ---------------------------------------------------

struct VerticalConnectivity {
    int value = 0;
    std::optional<Separation> witness; // empty when no separation exists
};

// Exhaustive bipartition scan; refuses when the ground set exceeds max_m.
VerticalConnectivity vertical_connectivity(const RankOracle& o, int max_m = 20);
VerticalConnectivity vertical_connectivity_serial(const RankOracle& o, int max_m = 20);

std::string separation_json(const Separation& s, const std::vector<std::string>& elem_ids);

} // namespace matkit

#endif
