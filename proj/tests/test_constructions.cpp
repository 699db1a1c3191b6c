#include <doctest.h>

#include <set>
#include <stdexcept>

#include "sgl/catalog.hpp"
#include "sgl/constructions.hpp"
#include "sgl/graph.hpp"
#include "sgl/labeling.hpp"
#include "sgl/skolem.hpp"

using namespace sgl;

TEST_CASE("star with all edge labels odd") {
    Constructed one = star_all_odd_edges(1);
    CHECK(one.labeling.vertex_labels == std::vector<Label>{3, 2});
    CHECK(one.labeling.edge_labels == std::vector<Label>{1});

    Constructed three = star_all_odd_edges(3);
    CHECK(three.labeling.vertex_labels == std::vector<Label>{7, 6, 4, 2});
    CHECK(three.labeling.edge_labels == std::vector<Label>{1, 3, 5});

    for (int q = 1; q <= 30; ++q) {
        Constructed s = star_all_odd_edges(q);
        CHECK(verify_labeling(s.graph, s.labeling).valid);
        CHECK(all_edge_labels_odd(s.labeling));
    }
}

TEST_CASE("graceful to odd-vertex super graceful") {
    Graph p2 = path(2);
    Labeling lab = graceful_to_odd_super(p2, {{0, 1}});
    CHECK(lab.vertex_labels == std::vector<Label>{1, 3});
    CHECK(lab.edge_labels == std::vector<Label>{2});

    Graph p4 = path(4);
    Labeling p4lab = graceful_to_odd_super(p4, {{0, 3, 1, 2}});
    CHECK(p4lab.vertex_labels == std::vector<Label>{1, 7, 3, 5});
    CHECK(p4lab.edge_labels == std::vector<Label>{6, 4, 2});
    CHECK(verify_labeling(p4, p4lab).valid);

    Graph k13 = star(3);
    Labeling k13lab = graceful_to_odd_super(k13, {{0, 1, 2, 3}});
    CHECK(k13lab.vertex_labels == std::vector<Label>{1, 3, 5, 7});
    CHECK(verify_labeling(k13, k13lab).valid);

    CHECK_THROWS_AS(graceful_to_odd_super(p4, {{0, 1, 2, 3}}), std::invalid_argument);
}

TEST_CASE("odd-vertex labels to edge-interval labels and back") {
    Graph k2 = nk2(1);
    Labeling odd = labeling_from_vertex_labels(k2, 1, {1, 3});
    Labeling interval = odd_super_to_edge_interval(k2, odd);
    CHECK(interval.vertex_labels == std::vector<Label>{2, 3});
    CHECK(interval.edge_labels == std::vector<Label>{1});

    GracefulLabeling graceful = edge_interval_to_graceful(k2, interval);
    CHECK(graceful.vertex_labels == std::vector<Label>{0, 1});
    Labeling again = graceful_to_odd_super(k2, graceful);
    CHECK(again.vertex_labels == odd.vertex_labels);

    Labeling not_odd = labeling_from_vertex_labels(k2, 1, {2, 3});
    CHECK_THROWS_AS(odd_super_to_edge_interval(k2, not_odd), std::invalid_argument);
}

TEST_CASE("edge_interval_to_graceful on nK2 built from a classic sequence") {
    auto s = skolem_classic(4);
    REQUIRE(s.has_value());
    Labeling lab = skolem_to_nk2_labeling(*s);
    Graph g = nk2(4);
    GracefulLabeling graceful = edge_interval_to_graceful(g, lab);
    CHECK(verify_graceful(g, graceful).valid);
}

TEST_CASE("path extension keeps labels odd and ends at 1") {
    Graph k2 = nk2(1);
    Labeling lab = labeling_from_vertex_labels(k2, 1, {3, 1});
    Constructed ext = extend_by_path(k2, lab, 1, 2);
    CHECK(ext.graph.p() == 3);
    CHECK(ext.labeling.vertex_labels == std::vector<Label>{3, 5, 1});
    CHECK(verify_labeling(ext.graph, ext.labeling).valid);

    // Two single steps equal one double step.
    Constructed two_steps = extend_by_path(ext.graph, ext.labeling, 2, 2);
    Constructed direct = extend_by_path(k2, lab, 1, 3);
    CHECK(two_steps.labeling.vertex_labels == direct.labeling.vertex_labels);

    Constructed longer = extend_by_path(ext.graph, ext.labeling, 2, 2);
    CHECK(all_vertex_labels_odd(longer.labeling));
    CHECK(verify_labeling(longer.graph, longer.labeling).valid);

    CHECK_THROWS_AS(extend_by_path(k2, lab, 0, 2), std::invalid_argument);
}

TEST_CASE("complement reflection is valid and involutive") {
    Graph p3 = path(3);
    Labeling lab = labeling_from_vertex_labels(p3, 1, {3, 5, 1});
    Labeling reflected = complement_labeling(p3, lab);
    CHECK(verify_labeling(p3, reflected).valid);
    CHECK(all_vertex_labels_odd(reflected));
    CHECK(reflected.edge_labels == lab.edge_labels);
    Labeling back = complement_labeling(p3, reflected);
    CHECK(back.vertex_labels == lab.vertex_labels);

    Graph k2 = nk2(1);
    Labeling k2lab = labeling_from_vertex_labels(k2, 1, {3, 1});
    Labeling k2ref = complement_labeling(k2, k2lab);
    CHECK(verify_labeling(k2, k2ref).valid);
    CHECK(k2ref.edge_labels == k2lab.edge_labels);
}

TEST_CASE("compose_disjoint single part is the identity") {
    Constructed part{nk2(1), labeling_from_vertex_labels(nk2(1), 1, {2, 3})};
    Constructed same = compose_disjoint({part});
    CHECK(same.labeling.vertex_labels == part.labeling.vertex_labels);
}

TEST_CASE("compose_disjoint rejects parts that tile neither way") {
    Constructed a{nk2(1), labeling_from_vertex_labels(nk2(1), 1, {2, 3})};
    Constructed b{nk2(1), labeling_from_vertex_labels(nk2(1), 1, {2, 3})};
    CHECK_THROWS_AS(compose_disjoint({a, b}), std::invalid_argument);
}

TEST_CASE("chain-mode composition concatenates label ranges") {
    // P3 on [1,5] with largest label 5; the closed-form 11K2 at offset 6
    // occupies [6, 38], so the ranges chain.
    Constructed p3{path(3), labeling_from_vertex_labels(path(3), 1, {4, 3, 5})};
    REQUIRE(verify_labeling(p3.graph, p3.labeling).valid);
    Labeling eleven = skolem_to_nk2_labeling(k_skolem_length_2k_minus_1(6));
    REQUIRE(eleven.k == 6);
    Constructed merged = compose_disjoint({p3, {nk2(11), eleven}});
    CHECK(verify_labeling(merged.graph, merged.labeling).valid);
    CHECK(merged.labeling.k == 1);
}

TEST_CASE("published even-edge tables verify") {
    for (auto [n, variant] : std::vector<std::pair<int, char>>{
             {4, 'a'}, {4, 'b'}, {5, 'a'}, {8, 'a'}, {9, 'a'}}) {
        Constructed c = nk2_even_edges(n, variant);
        CHECK(verify_labeling(c.graph, c.labeling).valid);
        CHECK(all_edge_labels_even(c.labeling));
    }
    CHECK(nk2_even_edges(4, 'a').labeling.edge_labels == std::vector<Label>{2, 6, 10, 4});
    std::multiset<Label> nine(nk2_even_edges(9).labeling.edge_labels.begin(),
                              nk2_even_edges(9).labeling.edge_labels.end());
    CHECK(nine == std::multiset<Label>{2, 4, 6, 8, 10, 12, 18, 20, 24});
    CHECK_THROWS_AS(nk2_even_edges(6), std::invalid_argument);
}

TEST_CASE("even-edge extension from 4t to 4t+1 components") {
    for (auto [n, variant] : std::vector<std::pair<int, char>>{{4, 'a'}, {4, 'b'}, {8, 'a'}}) {
        Constructed base = nk2_even_edges(n, variant);
        Constructed ext = even_edges_extend(base.graph, base.labeling);
        CHECK(ext.graph.q() == n + 1);
        CHECK(verify_labeling(ext.graph, ext.labeling).valid);
        CHECK(all_edge_labels_even(ext.labeling));
        CHECK(max_label(ext.labeling) == 3 * (n + 1));  // 12t + 3
    }
    Constructed five = nk2_even_edges(5);
    CHECK_THROWS_AS(even_edges_extend(five.graph, five.labeling), std::invalid_argument);
}

TEST_CASE("cycle-plus-path fixtures match the published labels") {
    Constructed c4p3 = cycle_plus_path_labeling(4, 3);
    CHECK(c4p3.labeling.vertex_labels == std::vector<Label>{1, 11, 5, 13, 3, 7, 9});
    CHECK(c4p3.labeling.edge_labels == std::vector<Label>{10, 6, 8, 12, 4, 2});

    Constructed c3p6 = cycle_plus_path_labeling(3, 6);
    CHECK(c3p6.labeling.vertex_labels ==
          std::vector<Label>{5, 7, 11, 9, 17, 1, 15, 3, 13});
}

TEST_CASE("cycle-plus-path residue-case formulas") {
    Constructed c38 = cycle_plus_path_labeling(3, 8);
    CHECK(verify_labeling(c38.graph, c38.labeling).valid);
    Constructed c48 = cycle_plus_path_labeling(4, 8);
    CHECK(verify_labeling(c48.graph, c48.labeling).valid);
    for (int m = 4; m <= 60; ++m) {
        Constructed c3 = cycle_plus_path_labeling(3, m);
        CHECK_MESSAGE(verify_labeling(c3.graph, c3.labeling).valid, "C3+P", m);
        CHECK(all_vertex_labels_odd(c3.labeling));
    }
    for (int m = 3; m <= 60; ++m) {
        Constructed c4 = cycle_plus_path_labeling(4, m);
        CHECK_MESSAGE(verify_labeling(c4.graph, c4.labeling).valid, "C4+P", m);
        CHECK(all_vertex_labels_odd(c4.labeling));
    }
    CHECK_THROWS_AS(cycle_plus_path_labeling(3, 3), std::invalid_argument);
    CHECK_THROWS_AS(cycle_plus_path_labeling(5, 5), std::invalid_argument);
}

TEST_CASE("two-path constructions at offset 2") {
    Constructed small = two_paths_k2(2, 2);
    CHECK(verify_labeling(small.graph, small.labeling).valid);
    std::multiset<Label> verts(small.labeling.vertex_labels.begin(),
                               small.labeling.vertex_labels.end());
    CHECK(verts == std::multiset<Label>{6, 7, 8, 9, 10, 11});
    CHECK(edge_labels_are_interval(small.labeling, 2, 5));

    for (int n = 2; n <= 50; ++n)
        for (int r : {2, 3}) {
            Constructed c = two_paths_k2(n, r);
            CHECK(verify_labeling(c.graph, c.labeling).valid);
            CHECK(edge_labels_are_interval(c.labeling, 2, 2 * n + r - 1));
        }
}

TEST_CASE("two-path constructions at offset n+1") {
    Constructed small = two_paths_kn1(2, 2);
    CHECK(small.labeling.k == 3);
    CHECK(edge_labels_are_interval(small.labeling, 6, 9));

    Constructed n4 = two_paths_kn1(4, 2);
    CHECK(edge_labels_are_interval(n4.labeling, 10, 17));

    Constructed r3 = two_paths_kn1(2, 3);
    CHECK(edge_labels_are_interval(r3.labeling, 7, 11));

    for (int n = 2; n <= 50; ++n)
        for (int r : {2, 3}) {
            Constructed c = two_paths_kn1(n, r);
            CHECK(verify_labeling(c.graph, c.labeling).valid);
        }
}

TEST_CASE("bipartite growth produces verified labelings") {
    Constructed a1 = bipartite_growth(GrowthMode::A1, 1, 2, 1, 0);
    CHECK(verify_labeling(a1.graph, a1.labeling).valid);

    Constructed a2 = bipartite_growth(GrowthMode::A2, 2, 2, 3, 1);
    CHECK(verify_labeling(a2.graph, a2.labeling).valid);
    CHECK(a2.labeling.k == 3);

    CHECK_THROWS_AS(bipartite_growth(GrowthMode::A1, 1, 2, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(bipartite_growth(GrowthMode::A2, 1, 5, 3, 0), std::invalid_argument);

    for (Label k = 1; k <= 4; ++k)
        for (Label d = k + 1; d <= k + 4; ++d)
            for (int n = 1; n <= 3; ++n)
                for (int rounds = 0; rounds <= 2; ++rounds) {
                    Constructed c = bipartite_growth(GrowthMode::A1, n, d, k, rounds);
                    CHECK_MESSAGE(verify_labeling(c.graph, c.labeling).valid, "A1 n=", n, " d=", d,
                                  " k=", k, " rounds=", rounds);
                }
    for (Label k = 2; k <= 5; ++k)
        for (Label d = 2; d <= k; ++d)
            for (int n = 1; n <= 3; ++n)
                for (int rounds = 0; rounds <= 2; ++rounds) {
                    Constructed c = bipartite_growth(GrowthMode::A2, n, d, k, rounds);
                    CHECK_MESSAGE(verify_labeling(c.graph, c.labeling).valid, "A2 n=", n, " d=", d,
                                  " k=", k, " rounds=", rounds);
                }
}

TEST_CASE("sequentially additive swap and its inverse") {
    Graph k2 = nk2(1);
    Labeling lab = labeling_from_vertex_labels(k2, 1, {3, 2});
    Labeling sum = nk2_to_sequentially_additive(k2, lab);
    CHECK(verify_sequentially_additive(k2, sum).valid);
    CHECK(sum.vertex_labels == std::vector<Label>{1, 2});
    CHECK(sum.edge_labels == std::vector<Label>{3});

    // The closed-form (2k-1)K2 at k = 2 becomes sequentially additive with
    // edge labels [5k-2, 7k-4] = [8, 10].
    Labeling three = skolem_to_nk2_labeling(k_skolem_length_2k_minus_1(2));
    Graph g3 = nk2(3);
    Labeling sum3 = nk2_to_sequentially_additive(g3, three);
    CHECK(verify_sequentially_additive(g3, sum3).valid);
    std::multiset<Label> edges(sum3.edge_labels.begin(), sum3.edge_labels.end());
    CHECK(edges == std::multiset<Label>{8, 9, 10});

    Labeling round = nk2_from_sequentially_additive(g3, sum3);
    CHECK(round.vertex_labels == three.vertex_labels);
    CHECK(round.edge_labels == three.edge_labels);
}

TEST_CASE("recipe dispatch") {
    ConstructionRecipe recipe;
    recipe.family = "cycle_plus_path";
    recipe.params = {4, 3};
    Constructed c = build_recipe(recipe);
    CHECK(verify_labeling(c.graph, c.labeling).valid);

    recipe.family = "nope";
    CHECK_THROWS_AS(build_recipe(recipe), std::invalid_argument);
}
