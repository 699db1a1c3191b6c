#pragma once

#include <vector>

#include "sgl/graph.hpp"

namespace sgl {

struct IndependenceCertificate {
    int alpha = 0;
    std::vector<Vertex> witness;  // one maximum independent set, ascending
};

/// Exact maximum independent set by branch and bound with degree-0/1
/// reductions. Intended for desk-scale graphs.
IndependenceCertificate independence_number(const Graph& g);

}  // namespace sgl
