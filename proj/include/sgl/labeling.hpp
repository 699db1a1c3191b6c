#pragma once

#include <string>
#include <vector>

#include "sgl/graph.hpp"

namespace sgl {

/// Total assignment for a graph: distinct integers on vertices and edges
/// covering [k, k+p+q-1] exactly once, with every edge labeled by the
/// absolute difference of its endpoint labels.
struct Labeling {
    Label k = 1;
    std::vector<Label> vertex_labels;  // indexed by vertex
    std::vector<Label> edge_labels;    // indexed by edge position
};

struct VerifyResult {
    bool valid = false;
    std::vector<std::string> violations;
};

/// Checks both labeling invariants (bijection onto [k, k+p+q-1] and the
/// edge-difference rule). Pure. Throws std::invalid_argument when the
/// labeling does not assign every vertex and edge (a structural error,
/// distinct from an invalid labeling).
VerifyResult verify_labeling(const Graph& g, const Labeling& lab);

/// Builds a labeling whose edge labels are the induced |f(u)-f(v)| values.
/// No validity check; run verify_labeling on the result.
Labeling labeling_from_vertex_labels(const Graph& g, Label k, std::vector<Label> vertex_labels);

bool all_vertex_labels_odd(const Labeling& lab);
bool all_edge_labels_even(const Labeling& lab);
bool all_edge_labels_odd(const Labeling& lab);
Label max_label(const Labeling& lab);

/// True when edge labels are exactly the interval [lo, hi] (as a set).
bool edge_labels_are_interval(const Labeling& lab, Label lo, Label hi);

/// Injective vertex labeling into [0, q] whose induced edge differences are
/// bijective onto [1, q].
struct GracefulLabeling {
    std::vector<Label> vertex_labels;
};

VerifyResult verify_graceful(const Graph& g, const GracefulLabeling& lab);

/// Same label bijection as a k-super graceful labeling but every edge label
/// equals the SUM of its endpoint labels.
VerifyResult verify_sequentially_additive(const Graph& g, const Labeling& lab);

}  // namespace sgl
