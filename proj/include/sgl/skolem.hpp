#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sgl/feasibility.hpp"
#include "sgl/graph.hpp"
#include "sgl/labeling.hpp"

namespace sgl {

/// Pairs (a_i, b_i), i = 1..n, with a_i - b_i = k + i - 1 and all 2n values
/// distinct in [1, 2n].
struct SkolemSequence {
    Label k = 1;
    int n = 0;
    std::vector<std::pair<Label, Label>> pairs;
};

/// Empty string when the sequence satisfies all invariants.
std::string skolem_violation(const SkolemSequence& s);
bool skolem_valid(const SkolemSequence& s);

struct SkolemSearchReport {
    std::optional<SkolemSequence> sequence;  // first one found, if any
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    bool exhausted = false;
};

/// Complete backtracking over pair placements in [1, 2n]. The lowest free
/// position is always the smaller element of its pair, so the scan is
/// exhaustive. The parity prune is a sound local invariant (odd cells left
/// minus odd differences left must be even); disabling it changes node
/// counts, never counts.
SkolemSearchReport skolem_search(int n, Label k, bool count_all = false,
                                 bool parity_prune = true);

/// k = 1. Returns the constructed sequence for n = 0,1 (mod 4); otherwise
/// nullopt after the search exhausts (certified nonexistence).
std::optional<SkolemSequence> skolem_classic(int n);

/// The closed form for n = 2k-1: (2k-2+2i, k-1+i) for 1 <= i <= k and
/// (2i-1, i-k) for k+1 <= i <= 2k-1.
SkolemSequence k_skolem_length_2k_minus_1(Label k);

/// k = 2, supported for n <= 84 (throws beyond). Constructive for
/// n = 0,3 (mod 4): closed forms plus per-r ad hoc pairs for n = 4r-1, and
/// the shift rule for n = 4r. Returns nullopt for n = 1,2 (mod 4).
std::optional<SkolemSequence> two_skolem(int n);

/// Integrality of the pair-sum n(5n+2k+1)/4: infeasible unless
/// n = 0,3 (mod 4) for even k and n = 0,1 (mod 4) for odd k.
FeasibilityVerdict k_skolem_feasible(int n, Label k);

/// Adds k+n-1 to every a_i, b_i; component i of nK2 gets edge label k+i-1.
Labeling skolem_to_nk2_labeling(const SkolemSequence& s);

/// Inverse of skolem_to_nk2_labeling. The labeling must be valid on nK2 with
/// edge-label set exactly [k, k+n-1]; throws otherwise.
SkolemSequence nk2_labeling_to_skolem(const Graph& g, const Labeling& lab);

/// n for the recursive family: (2k-1)(3^r - 1)/2.
long long nk2_recursive_size(Label k, int r);

/// nK2 labeling with n = (2k-1)(3^r-1)/2 and edge-label set [k, k+n-1],
/// built by repeatedly appending the closed-form sequence at the next offset
/// and concatenating the label intervals.
Labeling nk2_recursive_family(Label k, int r);

/// The underlying k-Skolem sequence of nk2_recursive_family.
SkolemSequence k_skolem_recursive(Label k, int r);

}  // namespace sgl
