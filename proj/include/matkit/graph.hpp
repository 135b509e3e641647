#ifndef MATKIT_GRAPH_HPP
#define MATKIT_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "matkit/bitset.hpp"

namespace matkit {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Loopless multigraph with stable edge identities. Vertices and edges carry
// string ids for I/O; operations work on dense indices.
class MultiGraph {
public:
    struct Edge {
        std::string id;
        int u, v; // vertex indices, u != v
    };

    MultiGraph() = default;

    // Programmatic construction with generated ids ("v0".., "e0"..).
    static MultiGraph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int add_vertex(const std::string& id);
    int add_edge(const std::string& id, int u, int v);

    int num_vertices() const { return int(vertex_ids_.size()); }
    int num_edges() const { return int(edges_.size()); }
    const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
    const Edge& edge(int e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }

    int vertex_index(const std::string& id) const; // -1 if absent
    int edge_index(const std::string& id) const;   // -1 if absent

    int degree(int v) const;
    std::vector<int> incident_edges(int v) const;
    Bitset star(int v) const; // delta(v) as an edge set

    // Vertices spanned by an edge set.
    std::vector<int> span(const Bitset& es) const;

    // Edges with both endpoints inside X (X given as vertex mask).
    Bitset induced_edges(const std::vector<bool>& in_x) const;

    // Subgraph on the same vertex set keeping only the given edges.
    MultiGraph edge_subgraph(const Bitset& keep) const;
    MultiGraph without_edge(int e) const;

    // Underlying simple graph adjacency (parallel edges collapsed).
    std::vector<std::vector<int>> simple_adjacency() const;
    bool is_simple() const;
    bool is_connected() const; // isolated vertices count as components

    // Vertex ids and edge ids sorted; endpoint pairs stored sorted.
    MultiGraph canonical() const;

    bool flag_no_isolated = false;

private:
    std::vector<std::string> vertex_ids_;
    std::vector<Edge> edges_;
};

// ---- connectivity ----------------------------------------------------------

// Minimum over vertex pairs of max vertex-disjoint paths; parallel edges
// collapse to the underlying simple graph first. Throws on < 2 vertices.
int vertex_connectivity(const MultiGraph& g);

// Global min cut counting parallel edges; 0 when disconnected.
int edge_connectivity(const MultiGraph& g);

// Serial reference implementation (pair scan without OpenMP), kept for the
// benchmark and cross-checks.
int vertex_connectivity_serial(const MultiGraph& g);

// ---- orientations ----------------------------------------------------------

struct Orientation {
    // head[e] is the head endpoint of edge e.
    std::vector<int> head;
};

// |indeg(v) - outdeg(v)| <= 1 for all v, via matching of odd-degree vertices
// (paired in canonical id order) plus an Eulerian orientation.
Orientation smooth_orientation(const MultiGraph& g);

std::vector<int> in_degrees(const MultiGraph& g, const Orientation& o);

// ---- generators ------------------------------------------------------------

MultiGraph make_complete(int n);
MultiGraph make_cycle(int n);
MultiGraph make_path(int n);   // n vertices, n-1 edges
MultiGraph make_wheel(int n);  // n vertices: hub + cycle of n-1
MultiGraph make_parallel_pair(int m); // two vertices, m parallel edges
MultiGraph disjoint_union(const MultiGraph& a, const MultiGraph& b);

// 2l+2 copies of K_{2l-1} joined by consecutive matchings of size l-1 plus
// the l+1 long diagonals; requires 2 <= k < l <= 2k-1.
MultiGraph make_lovasz_yemini(int k, int l);

// K_n together with t edge-disjoint spanning subgraphs, each a K_6 plus
// vertices of degree 3; requires n >= 6t.
struct CofactorPacking {
    MultiGraph kn;
    std::vector<Bitset> parts; // edge sets of G_1..G_t within kn
};
CofactorPacking make_cofactor_packing(int n, int t);

// ---- isomorphism -----------------------------------------------------------

// Multigraph isomorphism (edge multiplicities preserved). Returns the vertex
// bijection g1 -> g2 or nullopt. Backtracking; meant for <= ~12 vertices.
std::optional<std::vector<int>> isomorphic(const MultiGraph& g1, const MultiGraph& g2);

// ---- I/O -------------------------------------------------------------------

MultiGraph read_graph_json(const std::string& text);
std::string write_graph_json(const MultiGraph& g);
std::string write_graph_dot(const MultiGraph& g);

} // namespace matkit

#endif
