#include <doctest.h>

#include <stdexcept>

#include "sgl/catalog.hpp"
#include "sgl/graph.hpp"
#include "sgl/labeling.hpp"
#include "sgl/skolem.hpp"

using namespace sgl;

TEST_CASE("classic sequences exist exactly for n = 0,1 mod 4") {
    auto one = skolem_classic(1);
    REQUIRE(one.has_value());
    CHECK(one->pairs == std::vector<std::pair<Label, Label>>{{2, 1}});

    auto four = skolem_classic(4);
    REQUIRE(four.has_value());
    CHECK(skolem_valid(*four));

    CHECK_FALSE(skolem_classic(2).has_value());
    CHECK_FALSE(skolem_classic(3).has_value());
    CHECK_FALSE(skolem_classic(6).has_value());
}

TEST_CASE("parity prune never changes solution counts") {
    for (int n = 1; n <= 9; ++n) {
        SkolemSearchReport pruned = skolem_search(n, 1, true, true);
        SkolemSearchReport plain = skolem_search(n, 1, true, false);
        CHECK(pruned.count == plain.count);
    }
    for (int n = 1; n <= 7; ++n) {
        SkolemSearchReport pruned = skolem_search(n, 2, true, true);
        SkolemSearchReport plain = skolem_search(n, 2, true, false);
        CHECK(pruned.count == plain.count);
    }
}

TEST_CASE("closed form for length 2k-1") {
    SkolemSequence two = k_skolem_length_2k_minus_1(2);
    CHECK(two.pairs == std::vector<std::pair<Label, Label>>{{4, 2}, {6, 3}, {5, 1}});

    SkolemSequence one = k_skolem_length_2k_minus_1(1);
    CHECK(one.pairs == std::vector<std::pair<Label, Label>>{{2, 1}});

    for (Label k = 1; k <= 100; ++k) CHECK(skolem_valid(k_skolem_length_2k_minus_1(k)));
}

TEST_CASE("two_skolem matches the published length-7 sequence") {
    auto seven = two_skolem(7);
    REQUIRE(seven.has_value());
    CHECK(seven->pairs == std::vector<std::pair<Label, Label>>{
                              {10, 8}, {4, 1}, {6, 2}, {14, 9}, {13, 7}, {12, 5}, {11, 3}});
}

TEST_CASE("two_skolem over its whole supported range") {
    for (int n = 1; n <= 84; ++n) {
        auto s = two_skolem(n);
        if (n % 4 == 0 || n % 4 == 3) {
            REQUIRE_MESSAGE(s.has_value(), "expected a sequence at n=", n);
            CHECK(skolem_valid(*s));
            CHECK(s->k == 2);
            CHECK(s->n == n);
        } else {
            CHECK_FALSE(s.has_value());
        }
    }
    CHECK_THROWS_AS(two_skolem(85), std::out_of_range);
}

TEST_CASE("integrality filter for general (n, k)") {
    CHECK(k_skolem_feasible(5, 2).infeasible());
    CHECK_FALSE(k_skolem_feasible(3, 2).infeasible());
    CHECK(k_skolem_feasible(2, 1).infeasible());
    // Never infeasible where a construction succeeds.
    for (Label k = 1; k <= 60; ++k)
        CHECK_FALSE(k_skolem_feasible(static_cast<int>(2 * k - 1), k).infeasible());
    for (int n = 1; n <= 84; ++n)
        if (n % 4 == 0 || n % 4 == 3) CHECK_FALSE(k_skolem_feasible(n, 2).infeasible());
}

TEST_CASE("sequence to nK2 labeling and back") {
    SkolemSequence s;
    s.k = 2;
    s.n = 3;
    s.pairs = {{4, 2}, {6, 3}, {5, 1}};
    Labeling lab = skolem_to_nk2_labeling(s);
    Graph g = nk2(3);
    CHECK(verify_labeling(g, lab).valid);
    CHECK(lab.edge_labels == std::vector<Label>{2, 3, 4});
    CHECK(lab.vertex_labels == std::vector<Label>{6, 8, 7, 10, 5, 9});

    SkolemSequence back = nk2_labeling_to_skolem(g, lab);
    CHECK(back.k == s.k);
    CHECK(back.pairs == s.pairs);
}

TEST_CASE("k=1, n=1 sequence labels K2 as (3, 2; 1)") {
    SkolemSequence s;
    s.k = 1;
    s.n = 1;
    s.pairs = {{2, 1}};
    Labeling lab = skolem_to_nk2_labeling(s);
    CHECK(lab.vertex_labels == std::vector<Label>{2, 3});
    CHECK(lab.edge_labels == std::vector<Label>{1});
}

TEST_CASE("invalid sequences are rejected before conversion") {
    SkolemSequence bad;
    bad.k = 1;
    bad.n = 2;
    bad.pairs = {{2, 1}, {4, 2}};  // value 2 repeated
    CHECK_THROWS_AS(skolem_to_nk2_labeling(bad), std::invalid_argument);
}

TEST_CASE("conversion requires the edge interval") {
    // 12K2 at offset 5 has a non-interval edge set.
    const CatalogEntry* entry = find_fixture("12k2-k5");
    REQUIRE(entry != nullptr);
    CHECK_THROWS_AS(nk2_labeling_to_skolem(nk2(12), entry->labeling), std::invalid_argument);
}

TEST_CASE("round trips across supported generators") {
    for (int n : {3, 4, 7, 8, 11, 12, 43, 84}) {
        auto s = two_skolem(n);
        REQUIRE(s.has_value());
        Labeling lab = skolem_to_nk2_labeling(*s);
        CHECK(nk2_labeling_to_skolem(nk2(n), lab).pairs == s->pairs);
    }
}

TEST_CASE("recursive family sizes and validity") {
    CHECK(nk2_recursive_size(1, 1) == 1);
    CHECK(nk2_recursive_size(2, 2) == 12);
    CHECK(nk2_recursive_size(1, 2) == 4);
    CHECK(nk2_recursive_size(4, 4) == 280);

    Labeling twelve = nk2_recursive_family(2, 2);
    CHECK(verify_labeling(nk2(12), twelve).valid);
    CHECK(edge_labels_are_interval(twelve, 2, 13));

    Labeling four = nk2_recursive_family(1, 2);
    CHECK(verify_labeling(nk2(4), four).valid);
    CHECK(edge_labels_are_interval(four, 1, 4));
}

TEST_CASE("every generator output satisfies the sequence invariants") {
    for (int n = 1; n <= 24; ++n) {
        auto s = skolem_classic(n);
        if (s) CHECK(skolem_valid(*s));
    }
    for (Label k = 1; k <= 10; ++k)
        for (int r = 1; r <= 3; ++r) CHECK(skolem_valid(k_skolem_recursive(k, r)));
}
