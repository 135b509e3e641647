#pragma once

#include <string>
#include <vector>

#include "matkit/graph.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

// Parameters of the count matroid M_{k,l}(G).
struct CountParams {
    int k;
    int l;
    CountParams(int k_, int l_) : k(k_), l(l_) {
        if (k < 1) throw MatroidError("count matroid requires k >= 1");
        if (l > 2 * k - 1) throw MatroidError("count matroid requires l <= 2k-1");
    }
};

// Rank certificate: r = |F| + sum over cover sets X of (k|X| - l).
struct CoverCertificate {
    int rank = 0;
    std::vector<int> F;                  // edge indices
    std::vector<std::vector<int>> cover; // vertex-index sets, each of size >= 2
};

bool count_is_independent(const MultiGraph& g, CountParams p, const Bitset& edges);
int count_rank(const MultiGraph& g, CountParams p, const Bitset& edges);
int count_rank_bruteforce(const MultiGraph& g, CountParams p, const Bitset& edges);

RankOracle count_oracle(const MultiGraph& g, CountParams p);

// Merge the vertex sets of an edge partition into a thin cover; the merge
// threshold follows the l-regime (<=0: single set; 0<l<=k: 0-thin; else 1-thin).
std::vector<std::vector<int>> uncross_partition(const MultiGraph& g, CountParams p,
                                                const std::vector<Bitset>& parts);

CoverCertificate rank_certificate(const MultiGraph& g, CountParams p, const Bitset& edges);
int certificate_value(CountParams p, const CoverCertificate& c);
std::string certificate_json(const MultiGraph& g, const CoverCertificate& c);

bool is_sparse(const MultiGraph& g, CountParams p);
bool is_rigid(const MultiGraph& g, CountParams p);
bool is_tight(const MultiGraph& g, CountParams p);
bool is_redundant(const MultiGraph& g, CountParams p);

Components m_components(const MultiGraph& g, CountParams p);

} // namespace matkit
