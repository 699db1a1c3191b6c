#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "sgl/graph.hpp"

namespace sgl {

/// The leftover-pairing instance behind the 2-Skolem construction for
/// n = 4r-1: partition ground_set into pairs whose differences are exactly
/// target_differences.
struct PairingProblem {
    int r = 0;
    std::vector<Label> ground_set;          // {4l+2 : 2<=l<=r-2} u {2l : 2r-1<=l<=3r-1}
    std::vector<Label> target_differences;  // {2} u {2l : 3<=l<=r}

    static PairingProblem for_r(int r);
};

/// One pairing: unordered set of (larger, smaller) pairs, kept sorted by
/// smaller element for a canonical representation.
using PairingSolution = std::vector<std::pair<Label, Label>>;

struct CensusReport {
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    bool exhausted = false;
    std::vector<PairingSolution> witnesses;
};

/// Exhaustive count of all pairings. Two solutions are distinct iff their
/// pair sets differ (the target differences are themselves distinct, so the
/// difference-labeled reading coincides). Deterministic; multi-threaded runs
/// split the top-level branches and merge counts.
CensusReport pairing_census(int r, int witness_cap = 0, int threads = 1);

/// First pairing in the deterministic search order, if any.
std::optional<PairingSolution> first_pairing(int r);

/// Exhaustive count for an arbitrary instance (used by the census and by
/// oracle comparisons).
CensusReport pairing_census_instance(const PairingProblem& problem, int witness_cap = 0,
                                     int threads = 1, bool find_first_only = false);

}  // namespace sgl
