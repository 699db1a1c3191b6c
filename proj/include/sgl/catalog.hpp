#pragma once

#include <string>
#include <vector>

#include "sgl/graph.hpp"
#include "sgl/labeling.hpp"

namespace sgl {

/// One known labeling: where it comes from, the graph it lives on (as a
/// compact spec) and the labeling itself.
struct CatalogEntry {
    std::string id;
    std::string provenance;  // nonempty; notes rederivations explicitly
    std::string graph_spec;
    Labeling labeling;
};

/// Every explicitly known labeling: the published small examples, the
/// even-edge tables, the explicit triples, the two cycles, the cycle-plus-
/// path specials, and the 2-Skolem table rows (r <= 11, with the r = 10
/// entry rederived) plus search-derived pairings for 12 <= r <= 21. Every
/// entry is checked by verify_labeling when the catalog is first built; a
/// bad entry throws.
const std::vector<CatalogEntry>& fixture_catalog();

const CatalogEntry* find_fixture(const std::string& id);

}  // namespace sgl
