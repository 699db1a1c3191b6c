#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "sgl/graph.hpp"
#include "sgl/labeling.hpp"

namespace sgl {

/// A graph with an optional labeling and an optional family spec, as read
/// from or written to disk.
struct LabelingDocument {
    std::optional<std::string> family_spec;  // compact spec when known
    std::vector<Edge> edges;
    int p = 0;
    std::optional<Labeling> labeling;

    Graph graph() const { return Graph(p, edges); }
};

LabelingDocument document_for(const Graph& g, std::optional<Labeling> lab = std::nullopt,
                              std::optional<std::string> family_spec = std::nullopt);

/// Edge-list text: first line "p q" or "p q k", one "u v" line per edge
/// (0-based), then optional "V i label" and "E i label" lines. Output order
/// is stable: vertices ascending, edges in graph order.
void write_edge_list(std::ostream& out, const LabelingDocument& doc);
LabelingDocument read_edge_list(std::istream& in);

/// JSON document: {"format", "k", "family", "params"?, "edges",
/// "vertex_labels", "edge_labels"}.
void write_labeling_json(std::ostream& out, const LabelingDocument& doc);
LabelingDocument read_labeling_json(std::istream& in);

/// Reads a file in either format (json when the first non-space byte is
/// '{').
LabelingDocument read_document_file(const std::string& path);
void write_document_file(const std::string& path, const LabelingDocument& doc, bool json);

}  // namespace sgl
