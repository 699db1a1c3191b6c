#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sgl/feasibility.hpp"
#include "sgl/graph.hpp"
#include "sgl/labeling.hpp"

namespace sgl {

enum class SearchMode { FindFirst, CountAll };

/// Optional restriction on the label parities the search may use.
enum class ParityMask { None, AllOddVertices, AllEvenEdges };

struct SearchConfig {
    Label k = 1;
    SearchMode mode = SearchMode::CountAll;
    int witness_cap = 1;

    /// Branch avoidance from the top-of-range argument: the k largest labels
    /// can only sit on mutually non-adjacent vertices, so those branches are
    /// not generated. Disabling it changes node counts, never solution
    /// counts.
    bool top_range_prune = true;

    /// Count labelings up to permutation of isomorphic components (same
    /// order and size). Default counts distinct functions.
    bool component_symmetry = false;

    ParityMask parity = ParityMask::None;

    /// Vertex groups whose members are interchangeable (e.g. the partite
    /// sets of K(m,n)); inside a group, labels are assigned to members in
    /// index order. Counts become counts up to those permutations.
    std::vector<std::vector<Vertex>> interchangeable_groups;

    /// Admissible (even-label count in group 0, in group 1) pairs; requires
    /// exactly two interchangeable_groups. Used by the K(m,n) search.
    std::vector<std::pair<int, int>> parity_profiles;

    std::uint64_t node_budget = 1'000'000'000;
    double time_budget_seconds = 0;  // 0 = unlimited
    int threads = 1;

    /// When false (default), solve() refuses instances the quick filters
    /// already rule out; set to run the search regardless.
    bool ignore_filters = false;
};

struct SearchReport {
    bool exhausted = false;  // tree fully explored (vs budget hit)
    std::uint64_t count = 0;
    std::uint64_t nodes = 0;
    std::vector<Labeling> witnesses;
};

/// Exhaustive backtracking over k-super graceful labelings. Labels are
/// processed from k+p+q-1 downward; each unforced label is either placed on
/// an unlabeled vertex or consumed as the label of an edge with exactly one
/// labeled endpoint (which forces the other endpoint). Every implied edge
/// label is reserved immediately, so the difference constraints and the
/// triangle edge-sum rule are enforced as the tree is built. Every witness
/// passes verify_labeling before it is reported.
SearchReport solve(const Graph& g, const SearchConfig& cfg);

struct NonexistenceEntry {
    Label k = 0;
    SearchReport report;
};

/// Count-all runs for each offset. A report with exhausted = true and
/// count = 0 certifies nonexistence at that offset.
std::vector<NonexistenceEntry> certify_nonexistence(const Graph& g, const std::vector<Label>& ks,
                                                    const SearchConfig& base = {});

/// The set {k : a labeling exists} over 1 <= k <= alpha(g), each verdict by
/// exhaustive search. Empty optional when some run hit its budget.
std::optional<std::vector<Label>> feasible_offsets(const Graph& g, const SearchConfig& base = {});

/// solve() on K(m,n) with partite-set interchangeability and, optionally,
/// the even-label-count profiles as pruning.
SearchReport kmn_search(int m, int n, Label k, bool use_parity_profiles = true,
                        const SearchConfig& base = {});

}  // namespace sgl
