#include <doctest.h>

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sgl/graph.hpp"
#include "sgl/independence.hpp"
#include "sgl/labeling.hpp"

using namespace sgl;

namespace {

// Oracle: maximum independent set by subset enumeration, p <= 20.
int alpha_by_enumeration(const Graph& g) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << g.p()); ++mask) {
        bool independent = true;
        for (const Edge& e : g.edges())
            if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
                independent = false;
                break;
            }
        if (independent) best = std::max(best, __builtin_popcount(mask));
    }
    return best;
}

}  // namespace

TEST_CASE("graph construction validates") {
    CHECK_THROWS_AS(Graph(2, {{0, 0}}), std::invalid_argument);          // loop
    CHECK_THROWS_AS(Graph(2, {{0, 1}, {1, 0}}), std::invalid_argument);  // duplicate
    CHECK_THROWS_AS(Graph(3, {{0, 1}}), std::invalid_argument);          // isolated vertex
    CHECK_THROWS_AS(Graph(2, {}), std::invalid_argument);                // no edge
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), std::invalid_argument);          // out of range
}

TEST_CASE("family builders and counts") {
    Graph five_k2 = nk2(5);
    CHECK(five_k2.p() == 10);
    CHECK(five_k2.q() == 5);
    CHECK(five_k2.component_count() == 5);

    Graph c4p3 = cycle_plus_path(4, 3);
    CHECK(c4p3.p() == 7);
    CHECK(c4p3.q() == 6);
    CHECK(c4p3.component_count() == 2);

    Graph k34 = complete_bipartite(3, 4);
    CHECK(k34.p() == 7);
    CHECK(k34.q() == 12);

    Graph k5e = near_complete(3);  // order 5, complete minus one edge
    CHECK(k5e.p() == 5);
    CHECK(k5e.q() == 9);
    CHECK_FALSE(k5e.adjacent(3, 4));

    CHECK_THROWS_AS(cycle(2), std::invalid_argument);
    CHECK_THROWS_AS(make_family("cycle", {2}), std::invalid_argument);
    CHECK_THROWS_AS(make_family("nope", {1}), std::invalid_argument);
}

TEST_CASE("compact graph specs") {
    CHECK(parse_graph_spec("5K2").q() == 5);
    CHECK(parse_graph_spec("C10").p() == 10);
    CHECK(parse_graph_spec("P4").q() == 3);
    CHECK(parse_graph_spec("2C3").component_count() == 2);
    CHECK(parse_graph_spec("K3,4").q() == 12);
    CHECK(parse_graph_spec("K5-e").q() == 9);
    CHECK(parse_graph_spec("C4+P3").p() == 7);
    CHECK(parse_graph_spec("P4+P2").component_count() == 2);
    CHECK_THROWS_AS(parse_graph_spec("Q7"), std::invalid_argument);
}

TEST_CASE("verify_labeling accepts the published 4K2 even-edge labeling") {
    Graph g = nk2(4);
    Labeling lab;
    lab.k = 1;
    lab.vertex_labels = {5, 7, 8, 12, 3, 9, 1, 11};
    lab.edge_labels = {2, 4, 6, 10};
    CHECK(verify_labeling(g, lab).valid);
}

TEST_CASE("verify_labeling on K2") {
    Graph g = nk2(1);
    Labeling good;
    good.k = 1;
    good.vertex_labels = {2, 3};
    good.edge_labels = {1};
    CHECK(verify_labeling(g, good).valid);

    Labeling bad = good;
    bad.edge_labels = {2};  // label 2 repeated and difference wrong
    VerifyResult result = verify_labeling(g, bad);
    CHECK_FALSE(result.valid);
    CHECK(result.violations.size() >= 1);

    Labeling missing = good;
    missing.edge_labels.clear();
    CHECK_THROWS_AS(verify_labeling(g, missing), std::invalid_argument);
}

TEST_CASE("verify_labeling is a pure function") {
    Graph g = path(4);
    Labeling lab = labeling_from_vertex_labels(g, 1, {1, 7, 3, 5});
    VerifyResult a = verify_labeling(g, lab);
    VerifyResult b = verify_labeling(g, lab);
    CHECK(a.valid == b.valid);
    CHECK(a.violations == b.violations);
}

TEST_CASE("independence number on the named examples") {
    CHECK(independence_number(nk2(3)).alpha == 3);
    CHECK(independence_number(cycle(3)).alpha == 1);
    CHECK(independence_number(complete_bipartite(3, 4)).alpha == 4);
    CHECK(independence_number(near_complete(4)).alpha == 2);

    IndependenceCertificate cert = independence_number(complete_bipartite(3, 4));
    std::set<Vertex> witness(cert.witness.begin(), cert.witness.end());
    CHECK(static_cast<int>(witness.size()) == cert.alpha);
    for (const Edge& e : complete_bipartite(3, 4).edges())
        CHECK_FALSE(witness.count(e.u) && witness.count(e.v));
}

TEST_CASE("independence number matches subset enumeration") {
    std::vector<Graph> graphs = {nk2(4),        path(7),          cycle(8),
                                 star(6),       complete_bipartite(3, 4),
                                 near_complete(3), cycles(2, 3),  cycle_plus_path(4, 5),
                                 two_paths(3, 2)};
    for (const Graph& g : graphs) {
        REQUIRE(g.p() <= 20);
        CHECK(independence_number(g).alpha == alpha_by_enumeration(g));
    }
}

TEST_CASE("independence handles a large disjoint-edge graph") {
    CHECK(independence_number(nk2(280)).alpha == 280);
}
