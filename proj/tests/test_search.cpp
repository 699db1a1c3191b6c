#include <doctest.h>

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "sgl/catalog.hpp"
#include "sgl/graph.hpp"
#include "sgl/independence.hpp"
#include "sgl/labeling.hpp"
#include "sgl/search.hpp"

using namespace sgl;

namespace {

// Oracle: try every injective assignment of labels to vertices, induce the
// edge labels and keep bijections. Linear scan over placements, no pruning
// beyond injectivity; intended for p + q <= 12.
std::uint64_t brute_force_count(const Graph& g, Label k) {
    int total = g.p() + g.q();
    std::vector<Label> vlab(static_cast<size_t>(g.p()), 0);
    std::vector<char> used(static_cast<size_t>(total), 0);
    std::uint64_t count = 0;
    std::function<void(int)> place = [&](int v) {
        if (v == g.p()) {
            std::vector<char> edge_used(static_cast<size_t>(total), 0);
            for (const Edge& e : g.edges()) {
                Label diff = vlab[static_cast<size_t>(e.u)] - vlab[static_cast<size_t>(e.v)];
                if (diff < 0) diff = -diff;
                if (diff < k || diff >= k + total) return;
                size_t idx = static_cast<size_t>(diff - k);
                if (used[idx] || edge_used[idx]) return;
                edge_used[idx] = 1;
            }
            ++count;
            return;
        }
        for (int i = 0; i < total; ++i) {
            if (used[static_cast<size_t>(i)]) continue;
            used[static_cast<size_t>(i)] = 1;
            vlab[static_cast<size_t>(v)] = k + i;
            place(v + 1);
            used[static_cast<size_t>(i)] = 0;
        }
    };
    place(0);
    return count;
}

SearchReport run(const Graph& g, Label k, bool prune = true, int threads = 1,
                 bool symmetry = false) {
    SearchConfig cfg;
    cfg.k = k;
    cfg.ignore_filters = true;
    cfg.top_range_prune = prune;
    cfg.threads = threads;
    cfg.component_symmetry = symmetry;
    return solve(g, cfg);
}

}  // namespace

TEST_CASE("search agrees with the brute-force oracle on small graphs") {
    std::vector<Graph> graphs = {nk2(1),  nk2(2),   nk2(3),  path(3),
                                 path(4), path(5),  cycle(3), cycle(4),
                                 star(3), star(4),  complete_bipartite(2, 2),
                                 cycles(2, 3)};
    for (const Graph& g : graphs) {
        REQUIRE(g.p() + g.q() <= 12);
        int alpha = independence_number(g).alpha;
        for (Label k = 1; k <= alpha + 1; ++k) {
            std::uint64_t expected = brute_force_count(g, k);
            SearchReport report = run(g, k);
            CHECK_MESSAGE(report.count == expected, "p=", g.p(), " q=", g.q(), " k=", k,
                          " got ", report.count, " expected ", expected);
            CHECK(report.exhausted);
        }
    }
}

TEST_CASE("pruning changes node counts, never solution counts") {
    bool some_node_count_differs = false;
    std::vector<Graph> graphs = {nk2(3), path(5), cycle(4), star(4), cycles(2, 3)};
    for (const Graph& g : graphs) {
        int alpha = independence_number(g).alpha;
        for (Label k = 1; k <= alpha; ++k) {
            SearchReport pruned = run(g, k, true);
            SearchReport plain = run(g, k, false);
            CHECK(pruned.count == plain.count);
            if (pruned.nodes != plain.nodes) some_node_count_differs = true;
        }
    }
    CHECK(some_node_count_differs);
}

TEST_CASE("identical configurations give identical reports") {
    Graph g = cycles(2, 3);
    SearchReport a = run(g, 1);
    SearchReport b = run(g, 1);
    CHECK(a.count == b.count);
    CHECK(a.nodes == b.nodes);
}

TEST_CASE("witnesses always pass the verifier") {
    SearchConfig cfg;
    cfg.k = 3;
    cfg.ignore_filters = true;
    cfg.mode = SearchMode::CountAll;
    cfg.witness_cap = 16;
    Graph g = nk2(3);
    SearchReport report = solve(g, cfg);
    CHECK(report.count > 0);
    CHECK(!report.witnesses.empty());
    for (const Labeling& w : report.witnesses) CHECK(verify_labeling(g, w).valid);
}

TEST_CASE("the published 8K2 offset-3 witness is found by search") {
    Graph g = nk2(8);
    SearchConfig cfg;
    cfg.k = 3;
    cfg.mode = SearchMode::FindFirst;
    cfg.ignore_filters = true;
    SearchReport report = solve(g, cfg);
    CHECK(report.count > 0);
    const CatalogEntry* fixture = find_fixture("8k2-k3");
    REQUIRE(fixture != nullptr);
    CHECK(verify_labeling(g, fixture->labeling).valid);
}

TEST_CASE("nonexistence: 2C3 admits no labeling at offsets 1 and 2") {
    Graph g = cycles(2, 3);
    for (const NonexistenceEntry& entry : certify_nonexistence(g, {1, 2})) {
        CHECK(entry.report.exhausted);
        CHECK(entry.report.count == 0);
    }
}

TEST_CASE("feasible offsets for 3K2") {
    auto feasible = feasible_offsets(nk2(3));
    REQUIRE(feasible.has_value());
    CHECK(*feasible == std::vector<Label>{2});
}

TEST_CASE("kmn search finds the K(2,3) offset-2 witness and refutes K(3,4) at 2") {
    SearchReport k23 = kmn_search(2, 3, 2);
    CHECK(k23.exhausted);
    CHECK(k23.count > 0);

    SearchReport k34 = kmn_search(3, 4, 2);
    CHECK(k34.exhausted);
    CHECK(k34.count == 0);

    // With and without the counting profiles, emptiness must agree.
    SearchReport k34_plain = kmn_search(3, 4, 2, false);
    CHECK(k34_plain.exhausted);
    CHECK(k34_plain.count == 0);
}

TEST_CASE("parallel search merges to the same counts") {
    Graph g = nk2(4);
    for (Label k : {1, 2}) {
        SearchReport solo = run(g, k);
        SearchReport multi = run(g, k, true, 4);
        CHECK(solo.count == multi.count);
        CHECK(solo.exhausted);
        CHECK(multi.exhausted);
    }
}

TEST_CASE("component symmetry quotients the count") {
    Graph g = nk2(3);
    SearchReport plain = run(g, 2);
    SearchReport quotient = run(g, 2, true, 1, true);
    CHECK(quotient.count > 0);
    CHECK(plain.count % quotient.count == 0);
    CHECK(plain.count > quotient.count);
}

TEST_CASE("budget exhaustion is reported, not silently truncated") {
    SearchConfig cfg;
    cfg.k = 1;
    cfg.ignore_filters = true;
    cfg.node_budget = 3;
    SearchReport report = solve(cycle_plus_path(4, 5), cfg);
    CHECK_FALSE(report.exhausted);

    cfg.node_budget = 0;
    CHECK_THROWS_AS(solve(cycle(4), cfg), std::invalid_argument);
}

TEST_CASE("filters gate the search unless overridden") {
    SearchConfig cfg;
    cfg.k = 2;  // alpha(C3) = 1
    CHECK_THROWS_AS(solve(cycle(3), cfg), std::invalid_argument);
    cfg.ignore_filters = true;
    SearchReport report = solve(cycle(3), cfg);
    CHECK(report.exhausted);
    CHECK(report.count == 0);
}

TEST_CASE("parity masks restrict the search soundly") {
    // C4+P3 has all-odd-vertex labelings; the restricted search finds one.
    Graph g = cycle_plus_path(4, 3);
    SearchConfig cfg;
    cfg.k = 1;
    cfg.mode = SearchMode::FindFirst;
    cfg.parity = ParityMask::AllOddVertices;
    SearchReport report = solve(g, cfg);
    CHECK(report.count > 0);
    CHECK(all_vertex_labels_odd(report.witnesses.front()));

    // C3+P2 and C3+P3 admit no all-odd-vertex labeling at offset 1.
    for (int m : {2, 3}) {
        SearchConfig strict;
        strict.k = 1;
        strict.parity = ParityMask::AllOddVertices;
        strict.ignore_filters = true;
        SearchReport none = solve(cycle_plus_path(3, m), strict);
        CHECK(none.exhausted);
        CHECK(none.count == 0);
    }
}
