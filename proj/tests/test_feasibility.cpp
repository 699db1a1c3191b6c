#include <doctest.h>

#include <stdexcept>

#include "sgl/feasibility.hpp"
#include "sgl/graph.hpp"
#include "sgl/search.hpp"

using namespace sgl;

TEST_CASE("offset range against the independence number") {
    CHECK(check_k_range(cycle(3), 2).infeasible());       // alpha = 1
    CHECK_FALSE(check_k_range(nk2(5), 5).infeasible());   // alpha = 5
    CHECK(check_k_range(near_complete(3), 3).infeasible());  // alpha = 2
    CHECK(check_k_range(path(4), 0).infeasible());
    FeasibilityVerdict v = check_k_range(cycle(3), 2);
    CHECK(v.rule_id == "k-range");
    CHECK_FALSE(v.citation.empty());
}

TEST_CASE("nK2 rules") {
    for (Label k = 1; k <= 6; ++k) CHECK(check_nk2(6, k).infeasible());  // n = 2 (mod 4)
    CHECK(check_nk2(4, 3).infeasible());                                 // n < 2k-1
    CHECK_FALSE(check_nk2(3, 2).infeasible());
    CHECK(check_nk2(5, 2).infeasible());   // n = 1 (mod 4), even k
    CHECK(check_nk2(3, 1).infeasible());   // n = 3 (mod 4), odd k
    CHECK(check_nk2(4, 4).infeasible());   // k = n, n >= 2
    CHECK_FALSE(check_nk2(1, 1).infeasible());
}

TEST_CASE("nK2 rules agree with exhaustive search for n <= 6, k <= 4") {
    for (int n = 1; n <= 6; ++n) {
        Graph g = nk2(n);
        for (Label k = 1; k <= 4 && k <= n; ++k) {
            SearchConfig cfg;
            cfg.k = k;
            cfg.ignore_filters = true;
            cfg.component_symmetry = true;
            SearchReport report = solve(g, cfg);
            REQUIRE(report.exhausted);
            bool filter_says_no = check_nk2(n, k).infeasible();
            // Sound: the filter never rejects a satisfiable instance. On this
            // grid the converse holds too.
            CHECK(filter_says_no == (report.count == 0));
        }
    }
}

TEST_CASE("even-edge nK2 residues") {
    CHECK(check_even_edge_nk2(3, 1).infeasible());
    CHECK_FALSE(check_even_edge_nk2(4, 1).infeasible());
    CHECK(check_even_edge_nk2(2, 1).infeasible());
    CHECK(check_even_edge_nk2(2, 2).infeasible());
    CHECK_FALSE(check_even_edge_nk2(3, 2).infeasible());
    CHECK_FALSE(check_even_edge_nk2(5, 1).infeasible());
    CHECK(check_even_edge_nk2(5, 2).infeasible());
}

TEST_CASE("all-odd-vertex labelings force (q+1,q) and offset 1") {
    CHECK(check_all_odd_vertices(cycle(4), 1).infeasible());   // p = q
    CHECK_FALSE(check_all_odd_vertices(path(5), 1).infeasible());
    CHECK(check_all_odd_vertices(path(5), 2).infeasible());
}

TEST_CASE("all-odd-edge labelings force a star and offset 1") {
    CHECK(check_all_odd_edges(path(4), 1).infeasible());
    CHECK_FALSE(check_all_odd_edges(star(5), 1).infeasible());
    CHECK(check_all_odd_edges(star(5), 2).infeasible());
    CHECK_FALSE(check_all_odd_edges(nk2(1), 1).infeasible());  // K2 is K(1,1)
}

TEST_CASE("K(m,n) parity profiles") {
    auto k33 = kmn_parity_profile(3, 3, 2);
    CHECK(std::holds_alternative<FeasibilityVerdict>(k33));

    auto k24 = kmn_parity_profile(2, 4, 3);
    REQUIRE(std::holds_alternative<FeasibilityVerdict>(k24));
    CHECK(std::get<FeasibilityVerdict>(k24).rule_id == "k2n-offsets");

    auto k34 = kmn_parity_profile(3, 4, 2);
    REQUIRE(std::holds_alternative<ParityProfile>(k34));
    const auto& admissible = std::get<ParityProfile>(k34).admissible_ab;
    CHECK(admissible == std::vector<std::pair<int, int>>{{0, 1}, {2, 2}});

    auto k35_2 = kmn_parity_profile(3, 5, 2);
    CHECK(std::holds_alternative<FeasibilityVerdict>(k35_2));
    auto k35_4 = kmn_parity_profile(3, 5, 4);
    CHECK(std::holds_alternative<FeasibilityVerdict>(k35_4));

    CHECK_THROWS_AS(kmn_parity_profile(1, 4, 1), std::invalid_argument);
}

TEST_CASE("parity profiles satisfy the even-label counting identity") {
    for (int m = 2; m <= 5; ++m)
        for (int n = m; n <= 6; ++n)
            for (Label k = 1; k <= 5; ++k) {
                auto result = kmn_parity_profile(m, n, k);
                if (!std::holds_alternative<ParityProfile>(result)) continue;
                long long total = m + n + static_cast<long long>(m) * n;
                long long evens_expected = 0;
                for (Label x = k; x < k + total; ++x)
                    if (x % 2 == 0) ++evens_expected;
                for (auto [a, b] : std::get<ParityProfile>(result).admissible_ab) {
                    long long evens = a + b + static_cast<long long>(a) * b +
                                      static_cast<long long>(m - a) * (n - b);
                    CHECK(evens == evens_expected);
                }
            }
}

TEST_CASE("triangle edge-sum filter") {
    Graph c3 = cycle(3);
    CHECK_FALSE(c3_edge_sum_filter(c3, {Label{2}, Label{3}, Label{5}}).infeasible());
    CHECK(c3_edge_sum_filter(c3, {Label{2}, Label{3}, Label{6}}).infeasible());
    CHECK_FALSE(c3_edge_sum_filter(c3, {Label{2}, std::nullopt, Label{6}}).infeasible());

    Graph two_triangles = cycles(2, 3);
    std::vector<std::optional<Label>> partial(6, std::nullopt);
    partial[3] = 4;
    partial[4] = 5;
    partial[5] = 10;
    CHECK(c3_edge_sum_filter(two_triangles, partial).infeasible());
}
