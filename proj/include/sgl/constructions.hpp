#pragma once

#include <string>
#include <vector>

#include "sgl/graph.hpp"
#include "sgl/labeling.hpp"

namespace sgl {

struct Constructed {
    Graph graph;
    Labeling labeling;
};

/// Uniform dispatch record for the CLI: family id, integer parameters and
/// target offset.
struct ConstructionRecipe {
    std::string family;
    std::vector<long long> params;
    Label k = 1;
    std::string variant;  // free-form, e.g. "a"/"b" for the even-edge tables
};

/// Star K(1,q) with center 2q+1, edges 1,3,...,2q-1 and leaves
/// 2q,2q-2,...,2; k = 1, every edge label odd.
Constructed star_all_odd_edges(int q);

/// h(u) = 2g(u)+1, h(uv) = 2g*(uv): a graceful labeling of a (q+1,q)-graph
/// becomes super graceful with all vertex labels odd.
Labeling graceful_to_odd_super(const Graph& g, const GracefulLabeling& graceful);

/// f(u) = (h(u)-1)/2 + q + 1, f(uv) = h(uv)/2: all-odd vertex labels become
/// a super graceful labeling with edge-label set [1, q].
Labeling odd_super_to_edge_interval(const Graph& g, const Labeling& lab);

/// g(u) = f(u) - q - 1 on a super graceful labeling with edge set [1, q].
GracefulLabeling edge_interval_to_graceful(const Graph& g, const Labeling& lab);

/// Grafts a path of order n at the vertex labeled 1, iterating the one-step
/// reflection w -> 2q+4-f(w) with the new end vertex labeled 1. Preserves
/// all-odd vertex labels.
Constructed extend_by_path(const Graph& g, const Labeling& lab, Vertex v, int n);

/// The affine reflection u -> 2n+2-f(u) on an all-odd-vertex super graceful
/// labeling of an (n+1,n)-graph; edge labels are preserved and the map is an
/// involution. (The reflection constant 2n+2 is the one the verifier
/// accepts; 2n maps 1 and 2n+1 onto each other's values minus two and
/// double-books labels.)
Labeling complement_labeling(const Graph& g, const Labeling& lab);

/// Disjoint-union composition. Interval mode: every part's edge labels are
/// its smallest q_i labels and k_{i+1} = k_i + q_i; part i's vertex labels
/// shift up by the total size of the later parts, edge labels stay. Chain
/// mode: k_{i+1} is part i's largest label + 1 and labels are used as given.
/// Throws when neither precondition holds.
Constructed compose_disjoint(const std::vector<Constructed>& parts);

/// The explicit all-even-edge nK2 labelings for n = 4, 5, 8, 9 (k = 1).
/// n = 4 has two published variants, "a" and "b".
Constructed nk2_even_edges(int n, char variant = 'a');

/// From an all-even-edge super graceful (4t)K2 labeling: add 2 to the labels
/// of the 3t odd-endpoint components, keep the t even-endpoint components,
/// and append a K2 labeled (1, 12t+3). Yields (4t+1)K2, all edges even.
Constructed even_edges_extend(const Graph& g, const Labeling& lab);

/// All-odd-vertex super graceful labelings of C3+Pm (m >= 4) and C4+Pm
/// (m >= 3): one routine per residue m mod 4 plus the three small special
/// cases.
Constructed cycle_plus_path_labeling(int n, int m);

/// P_{n+r} + P_n at k = 2 with edge-label set exactly [2, 2n+r-1], r = 2 or
/// 3 (n >= 2). Path relabeling with one edge deleted and its label reused on
/// the grafted vertex.
Constructed two_paths_k2(int n, int r);

/// P_{n+r} + P_n at k = n+1 with edge-label set [2n+2, 4n+1] (r = 2) or
/// [2n+3, 4n+3] (r = 3).
Constructed two_paths_kn1(int n, int r);

enum class GrowthMode { A1, A2 };

/// Iterative bipartite constructions. A1 needs d > k >= 1, A2 needs
/// 2 <= d <= k. Each round adds a batch of new vertices joined to every
/// u_i; an edge is deleted when its induced label is already a vertex label,
/// and of several edges sharing a label only the one with the smallest u_i
/// (then earliest batch position) survives.
Constructed bipartite_growth(GrowthMode mode, int n, Label d, Label k, int rounds);

/// Per component of nK2, swap the larger endpoint label with the edge label;
/// the result satisfies g(uv) = g(u) + g(v) over the same label set.
Labeling nk2_to_sequentially_additive(const Graph& g, const Labeling& lab);

/// Inverse of nk2_to_sequentially_additive.
Labeling nk2_from_sequentially_additive(const Graph& g, const Labeling& lab);

/// Recipe dispatch for the CLI. Known families: star_odd_edges(q),
/// nk2_even_edges(n), cycle_plus_path(n,m), two_paths_k2(n,r),
/// two_paths_kn1(n,r), bipartite_a1(n,d,rounds)/bipartite_a2(n,d,rounds)
/// with --k, skolem_nk2(n) with --k, recursive_nk2(r) with --k.
Constructed build_recipe(const ConstructionRecipe& recipe);

}  // namespace sgl
