#pragma once

#include <string>
#include <utility>
#include <vector>

namespace sgl {

using Vertex = int;
using Label = long long;

/// Unordered vertex pair. Stored as given; (u,v) and (v,u) denote the same edge.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;
};

/// Finite simple graph with dense vertex indices 0..p-1 and an ordered edge
/// list. No loops, no duplicate edges, no isolated vertices, q >= 1.
/// Edge order is preserved from construction so that constructions can
/// address "the i-th component's edge" deterministically.
class Graph {
  public:
    Graph(int vertex_count, std::vector<Edge> edges);

    int p() const { return p_; }
    int q() const { return static_cast<int>(edges_.size()); }
    int component_count() const { return component_count_; }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<size_t>(e)]; }

    /// Per-vertex list of (neighbor, edge index).
    const std::vector<std::pair<Vertex, int>>& neighbors(Vertex v) const {
        return adj_[static_cast<size_t>(v)];
    }
    int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }

    /// Component id per vertex, in [0, component_count).
    const std::vector<int>& component_of() const { return component_of_; }
    /// Vertices of each component, ascending.
    std::vector<std::vector<Vertex>> components() const;

    bool adjacent(Vertex u, Vertex v) const;

  private:
    int p_ = 0;
    int component_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<Vertex, int>>> adj_;
    std::vector<int> component_of_;
};

// Family builders. Vertex numbering contract (constructions depend on it):
//   nk2(n):                 component i has vertices 2i, 2i+1 and edge index i.
//   path(n):                vertices 0..n-1 along the path, edges (i, i+1).
//   cycle(n):               vertices 0..n-1 around the cycle, edges (i, (i+1) mod n).
//   star(q):                center 0, leaves 1..q, edge i-1 joins 0 to leaf i.
//   complete_bipartite(m,n): side A = 0..m-1, side B = m..m+n-1,
//                            edges (i, m+j) ordered by i then j.
//   near_complete(r):       K(1,...,1,2) of order r+2, i.e. K_{r+2} minus one
//                           edge; vertices 0..r-1 are the degree-(r+1)
//                           vertices, r and r+1 the nonadjacent pair; edges
//                           are pairs (i,j), i<j, lexicographic, minus (r,r+1).
//   cycles(c, len):         c disjoint copies of C_len, copy i on vertices
//                           [i*len, (i+1)*len).
//   cycle_plus_path(n, m):  C_n on 0..n-1 followed by P_m on n..n+m-1.
//   two_paths(n, r):        P_{n+r} on 0..n+r-1 followed by P_n on n+r..2n+r-1.
Graph nk2(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int q);
Graph complete_bipartite(int m, int n);
Graph near_complete(int r);
Graph cycles(int count, int len);
Graph cycle_plus_path(int n, int m);
Graph two_paths(int n, int r);
Graph disjoint_union(const std::vector<Graph>& parts);

/// Builder dispatch by family name, e.g. ("nK2", {5}).
/// Known names: nK2, path, cycle, star, complete_bipartite, near_complete,
/// cycles, cycle_plus_path, two_paths.
Graph make_family(const std::string& name, const std::vector<long long>& params);

/// Compact graph specs: "5K2", "C10", "P4", "2C3", "K3,4", "K1,5", "K5-e",
/// "C4+P3", "P4+P2". Throws std::invalid_argument on anything else.
Graph parse_graph_spec(const std::string& spec);

}  // namespace sgl
