#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sgl/graph.hpp"
#include "sgl/labeling.hpp"

namespace sgl {

// Necessary-condition filters. Each returns infeasible only when a rule's
// hypothesis is met exactly; anything else is unknown. None of them ever
// asserts feasibility.

enum class Feasibility { Infeasible, Unknown };

struct FeasibilityVerdict {
    Feasibility status = Feasibility::Unknown;
    std::string rule_id;     // empty when unknown
    std::string citation;    // rule statement in words
    std::string parameters;  // echo of the checked instance

    bool infeasible() const { return status == Feasibility::Infeasible; }
};

FeasibilityVerdict feasibility_unknown(std::string parameters);
FeasibilityVerdict feasibility_infeasible(std::string rule_id, std::string citation,
                                          std::string parameters);

/// A k-super graceful labeling needs 1 <= k <= alpha(g).
FeasibilityVerdict check_k_range(const Graph& g, Label k);

/// nK2 rules: label-sum parity, n >= 2k-1, residue classes of n against the
/// parity of k, and the k = n exclusion (n >= 2).
FeasibilityVerdict check_nk2(int n, Label k);

/// All-even-edge nK2 labelings exist only in three (n mod 4, k parity) cases.
FeasibilityVerdict check_even_edge_nk2(int n, Label k);

/// All vertex labels odd forces a (q+1, q)-graph and k = 1.
FeasibilityVerdict check_all_odd_vertices(const Graph& g, Label k);

/// All edge labels odd forces a star K(1,q) and k = 1.
FeasibilityVerdict check_all_odd_edges(const Graph& g, Label k);

/// Admissible (a, b) = (even vertex labels in the m-side, in the n-side)
/// for a k-super graceful K(m,n), from counting even vs odd labels.
struct ParityProfile {
    int m = 0;
    int n = 0;
    Label k = 1;
    std::vector<std::pair<int, int>> admissible_ab;
};

/// Requires n >= m >= 2. Infeasible when no (a, b) satisfies the counting
/// identity, and also when m = 2 with k outside {1, 2, n} (the K(2,n)
/// offsets are exactly 1, 2 and n).
std::variant<ParityProfile, FeasibilityVerdict> kmn_parity_profile(int m, int n, Label k);

/// In any labeling, the two smaller edge labels of a triangle sum to the
/// third. Checks every fully edge-labeled triangle of a partial assignment.
FeasibilityVerdict c3_edge_sum_filter(const Graph& g,
                                      const std::vector<std::optional<Label>>& edge_labels);

bool is_star(const Graph& g);

}  // namespace sgl
