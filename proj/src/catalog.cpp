#include "sgl/catalog.hpp"

#include <array>
#include <stdexcept>

#include "sgl/constructions.hpp"
#include "sgl/skolem.hpp"

namespace sgl {

namespace {

Labeling from_triples(Label k, const std::vector<std::array<Label, 3>>& triples) {
    Labeling lab;
    lab.k = k;
    for (const auto& t : triples) {
        lab.vertex_labels.push_back(t[0]);
        lab.vertex_labels.push_back(t[2]);
        lab.edge_labels.push_back(t[1]);
    }
    return lab;
}

Labeling cycle_labeling(Label k, const std::vector<Label>& verts) {
    Graph g = cycle(static_cast<int>(verts.size()));
    return labeling_from_vertex_labels(g, k, verts);
}

void add(std::vector<CatalogEntry>& out, std::string id, std::string provenance,
         std::string graph_spec, Labeling lab) {
    const Graph g = parse_graph_spec(graph_spec);
    VerifyResult check = verify_labeling(g, lab);
    if (!check.valid)
        throw std::logic_error("catalog entry " + id + " is invalid: " + check.violations[0]);
    out.push_back({std::move(id), std::move(provenance), std::move(graph_spec), std::move(lab)});
}

std::vector<CatalogEntry> build_catalog() {
    std::vector<CatalogEntry> out;

    add(out, "4k2-k2", "published example: 4K2 at offset 2 with edge labels 2..5", "4K2",
        from_triples(2, {{{7, 2, 9}}, {{10, 3, 13}}, {{8, 4, 12}}, {{6, 5, 11}}}));
    add(out, "5k2-k3", "published example: 5K2 at offset 3 with edge labels 3..7", "5K2",
        from_triples(3, {{{11, 3, 14}}, {{9, 4, 13}}, {{12, 5, 17}}, {{10, 6, 16}}, {{8, 7, 15}}}));

    add(out, "p3-odd", "the only all-odd-vertex labeling shape of P3", "P3",
        labeling_from_vertex_labels(path(3), 1, {3, 5, 1}));

    for (auto [n, variant] : std::vector<std::pair<int, char>>{{4, 'a'}, {4, 'b'}, {5, 'a'}, {8, 'a'}, {9, 'a'}}) {
        Constructed c = nk2_even_edges(n, variant);
        add(out, "nk2-even-" + std::to_string(n) + std::string(1, variant),
            "published all-even-edge table, n = " + std::to_string(n),
            std::to_string(n) + "K2", c.labeling);
    }

    add(out, "8k2-k3", "published triples: 8K2 at offset 3", "8K2",
        from_triples(3, {{{10, 3, 13}},
                         {{18, 4, 22}},
                         {{16, 5, 21}},
                         {{14, 6, 20}},
                         {{19, 7, 26}},
                         {{17, 8, 25}},
                         {{15, 9, 24}},
                         {{12, 11, 23}}}));
    add(out, "8k2-k3-interval", "published triples: 8K2 at offset 3, edge labels 3..10", "8K2",
        from_triples(3, {{{13, 3, 16}},
                         {{14, 4, 18}},
                         {{21, 5, 26}},
                         {{19, 6, 25}},
                         {{17, 7, 24}},
                         {{15, 8, 23}},
                         {{11, 9, 20}},
                         {{12, 10, 22}}}));
    add(out, "9k2-k3", "published triples: 9K2 at offset 3", "9K2",
        from_triples(3, {{{24, 5, 29}},
                         {{22, 6, 28}},
                         {{20, 7, 27}},
                         {{17, 9, 26}},
                         {{15, 10, 25}},
                         {{12, 11, 23}},
                         {{13, 8, 21}},
                         {{16, 3, 19}},
                         {{14, 4, 18}}}));
    add(out, "12k2-k3", "published triples: 12K2 at offset 3", "12K2",
        from_triples(3, {{{18, 3, 21}},
                         {{19, 4, 23}},
                         {{20, 5, 25}},
                         {{32, 6, 38}},
                         {{30, 7, 37}},
                         {{28, 8, 36}},
                         {{26, 9, 35}},
                         {{24, 10, 34}},
                         {{22, 11, 33}},
                         {{15, 12, 27}},
                         {{16, 13, 29}},
                         {{17, 14, 31}}}));
    add(out, "12k2-k3-alt", "published triples: 12K2 at offset 3, alternate last three components",
        "12K2",
        from_triples(3, {{{18, 3, 21}},
                         {{19, 4, 23}},
                         {{20, 5, 25}},
                         {{32, 6, 38}},
                         {{30, 7, 37}},
                         {{28, 8, 36}},
                         {{26, 9, 35}},
                         {{24, 10, 34}},
                         {{22, 11, 33}},
                         {{14, 13, 27}},
                         {{17, 12, 29}},
                         {{16, 15, 31}}}));
    add(out, "13k2-k3", "published triples: 13K2 at offset 3", "13K2",
        from_triples(3, {{{36, 5, 41}},
                         {{34, 6, 40}},
                         {{32, 7, 39}},
                         {{30, 8, 38}},
                         {{22, 15, 37}},
                         {{21, 14, 35}},
                         {{20, 13, 33}},
                         {{19, 12, 31}},
                         {{18, 11, 29}},
                         {{24, 4, 28}},
                         {{17, 10, 27}},
                         {{23, 3, 26}},
                         {{16, 9, 25}}}));
    add(out, "12k2-k5", "published triples: 12K2 at offset 5 (edge labels not an interval)", "12K2",
        from_triples(5, {{{32, 8, 40}},
                         {{30, 9, 39}},
                         {{28, 10, 38}},
                         {{22, 15, 37}},
                         {{20, 16, 36}},
                         {{18, 17, 35}},
                         {{23, 11, 34}},
                         {{21, 12, 33}},
                         {{25, 6, 31}},
                         {{24, 5, 29}},
                         {{14, 13, 27}},
                         {{19, 7, 26}}}));

    add(out, "c10-k5", "published cycle labeling: C10 at offset 5", "C10",
        cycle_labeling(5, {24, 6, 20, 12, 21, 10, 23, 7, 22, 5}));
    add(out, "c12-k6", "published cycle labeling: C12 at offset 6", "C12",
        cycle_labeling(6, {27, 6, 29, 7, 26, 14, 24, 13, 28, 8, 25, 9}));

    add(out, "c4p3", "published labeling: C4+P3, all vertex labels odd", "C4+P3",
        cycle_plus_path_labeling(4, 3).labeling);
    add(out, "c3p6", "published labeling: C3+P6, all vertex labels odd", "C3+P6",
        cycle_plus_path_labeling(3, 6).labeling);
    add(out, "c4p4",
        "C4+P4, all vertex labels odd; rederived (the published path row reuses a cycle label)",
        "C4+P4", cycle_plus_path_labeling(4, 4).labeling);

    for (int r = 1; r <= 21; ++r) {
        int n = 4 * r - 1;
        std::string provenance;
        if (r <= 3) provenance = "published 2-Skolem sequence, length " + std::to_string(n);
        else if (r == 10)
            provenance = "published 2-Skolem table row r=10, rederived: the printed pair "
                         "(44,48) has a negative difference; (54,48) completes the pairing";
        else if (r <= 11)
            provenance = "published 2-Skolem table row r=" + std::to_string(r);
        else
            provenance = "2-Skolem pairing for r=" + std::to_string(r) +
                         " derived by exhaustive pairing search (existence is published, "
                         "the witness is not)";
        add(out, "two-skolem-r" + std::to_string(r), provenance, std::to_string(n) + "K2",
            skolem_to_nk2_labeling(*two_skolem(n)));
    }

    return out;
}

}  // namespace

const std::vector<CatalogEntry>& fixture_catalog() {
    static const std::vector<CatalogEntry> catalog = build_catalog();
    return catalog;
}

const CatalogEntry* find_fixture(const std::string& id) {
    for (const CatalogEntry& entry : fixture_catalog()) {
        if (entry.id == id) return &entry;
    }
    return nullptr;
}

}  // namespace sgl
