#pragma once

#include <random>
#include <string>
#include <vector>

#include "matkit/graph.hpp"

namespace matkit {

struct SuiteConfig {
    unsigned seed = 1;
    int samples = 0; // 0 = suite default
    int max_n = 0;   // 0 = suite default
    bool mutant = false;
};

struct Violation {
    std::string description;
    std::string witness_json;
};

struct SuiteReport {
    std::string suite;
    unsigned seed = 0;
    bool mutant = false;
    int cases = 0;
    std::vector<Violation> violations;
    double wall_seconds = 0;
    bool passed() const { return violations.empty(); }
};

std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, SuiteConfig cfg);
// Deterministic given seed; wall time deliberately excluded.
std::string report_json(const SuiteReport& r);

// Rejection samplers (nonuniform) used by the property suites.
MultiGraph random_simple_graph(std::mt19937& rng, int n, double p);
MultiGraph random_multigraph(std::mt19937& rng, int n, int max_mult, int max_edges);
MultiGraph sample_vertex_connected(std::mt19937& rng, int n, int kappa);
MultiGraph sample_edge_connected(std::mt19937& rng, int n, int lambda);
MultiGraph sample_min_degree(std::mt19937& rng, int n, int dmin);

} // namespace matkit
