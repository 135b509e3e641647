#pragma once

#include <memory>
#include <string>
#include <vector>

#include "matkit/graph.hpp"
#include "matkit/matroid.hpp"

namespace matkit {

struct FamilyTag {
    enum Kind { Count, Cofactor } kind = Count;
    int k = 1, l = 1; // count parameters
    int t = 1;        // cofactor fold
};

// Edge-labeled matroid given by an oracle plus a declared family. The hidden
// graph is owned here only to keep the oracle alive; reconstruction never
// looks at it.
struct LabeledMatroid {
    std::vector<std::string> elements;
    FamilyTag family;
    RankOracle oracle;
    std::shared_ptr<const MultiGraph> hidden;
};

LabeledMatroid make_labeled(const MultiGraph& hidden, FamilyTag tag);
LabeledMatroid read_labeled_matroid(const std::string& json_text);

struct ReconstructOptions {
    int d_max = 9;       // max candidate star size
    int samples = 200;   // rank-agreement sample count
    unsigned seed = 1;
    int cofactor_cap = 8;
};

// All sets F with r(F) = r(E) - drop, F closed, and M|F connected, found by a
// keep/delete scan over candidate deleted sets D = E - F with |D| <= d_max.
std::vector<Bitset> find_star_complements(const RankOracle& o, int drop, int d_max = 9);

// One vertex per star, one edge per element joining its two stars.
MultiGraph assemble(const std::vector<Bitset>& stars, const std::vector<std::string>& ids);

MultiGraph reconstruct_count(const LabeledMatroid& m, ReconstructOptions opts = {});
MultiGraph reconstruct_bicircular(const LabeledMatroid& m, ReconstructOptions opts = {});
MultiGraph reconstruct_cofactor(const LabeledMatroid& m, ReconstructOptions opts = {});
MultiGraph reconstruct(const LabeledMatroid& m, ReconstructOptions opts = {});

} // namespace matkit
