#include "sgl/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace sgl {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::runtime_error(msg); }

}  // namespace

LabelingDocument document_for(const Graph& g, std::optional<Labeling> lab,
                              std::optional<std::string> family_spec) {
    LabelingDocument doc;
    doc.family_spec = std::move(family_spec);
    doc.p = g.p();
    doc.edges = g.edges();
    doc.labeling = std::move(lab);
    return doc;
}

void write_edge_list(std::ostream& out, const LabelingDocument& doc) {
    out << doc.p << ' ' << doc.edges.size();
    if (doc.labeling) out << ' ' << doc.labeling->k;
    out << '\n';
    for (const Edge& e : doc.edges) out << e.u << ' ' << e.v << '\n';
    if (doc.labeling) {
        for (size_t i = 0; i < doc.labeling->vertex_labels.size(); ++i)
            out << "V " << i << ' ' << doc.labeling->vertex_labels[i] << '\n';
        for (size_t i = 0; i < doc.labeling->edge_labels.size(); ++i)
            out << "E " << i << ' ' << doc.labeling->edge_labels[i] << '\n';
    }
}

LabelingDocument read_edge_list(std::istream& in) {
    LabelingDocument doc;
    std::string line;
    if (!std::getline(in, line)) fail("empty edge-list document");
    std::istringstream head(line);
    long long q = 0;
    Label k = 0;
    if (!(head >> doc.p >> q)) fail("bad edge-list header; expected \"p q\" or \"p q k\"");
    bool has_k = static_cast<bool>(head >> k);

    std::vector<std::pair<size_t, Label>> vlabels, elabels;
    while (std::getline(in, line)) {
        std::istringstream row(line);
        std::string first;
        if (!(row >> first)) continue;
        if (first == "V" || first == "E") {
            size_t index;
            Label value;
            if (!(row >> index >> value)) fail("bad label line: " + line);
            (first == "V" ? vlabels : elabels).push_back({index, value});
        } else {
            Edge e;
            e.u = std::stoi(first);
            if (!(row >> e.v)) fail("bad edge line: " + line);
            doc.edges.push_back(e);
        }
    }
    if (static_cast<long long>(doc.edges.size()) != q)
        fail("edge-list header promises " + std::to_string(q) + " edges, found " +
             std::to_string(doc.edges.size()));
    if (!vlabels.empty() || !elabels.empty()) {
        if (!has_k) fail("labeled edge-list document needs k in the header");
        if (vlabels.size() != static_cast<size_t>(doc.p) || elabels.size() != doc.edges.size())
            fail("labeling must assign every vertex and every edge");
        Labeling lab;
        lab.k = k;
        lab.vertex_labels.assign(static_cast<size_t>(doc.p), 0);
        lab.edge_labels.assign(doc.edges.size(), 0);
        std::vector<char> seen_v(static_cast<size_t>(doc.p), 0), seen_e(doc.edges.size(), 0);
        for (auto [i, value] : vlabels) {
            if (i >= static_cast<size_t>(doc.p) || seen_v[i]) fail("bad or repeated V index");
            seen_v[i] = 1;
            lab.vertex_labels[i] = value;
        }
        for (auto [i, value] : elabels) {
            if (i >= doc.edges.size() || seen_e[i]) fail("bad or repeated E index");
            seen_e[i] = 1;
            lab.edge_labels[i] = value;
        }
        doc.labeling = std::move(lab);
    }
    return doc;
}

void write_labeling_json(std::ostream& out, const LabelingDocument& doc) {
    nlohmann::json j;
    j["format"] = "sgl-labeling/1";
    if (doc.family_spec) j["family"] = *doc.family_spec;
    j["p"] = doc.p;
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : doc.edges) edges.push_back({e.u, e.v});
    j["edges"] = std::move(edges);
    if (doc.labeling) {
        j["k"] = doc.labeling->k;
        j["vertex_labels"] = doc.labeling->vertex_labels;
        j["edge_labels"] = doc.labeling->edge_labels;
    }
    out << j.dump(2) << '\n';
}

LabelingDocument read_labeling_json(std::istream& in) {
    nlohmann::json j = nlohmann::json::parse(in);
    LabelingDocument doc;
    if (j.contains("family")) doc.family_spec = j["family"].get<std::string>();
    doc.p = j.at("p").get<int>();
    for (const auto& e : j.at("edges"))
        doc.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>()});
    if (j.contains("vertex_labels")) {
        Labeling lab;
        lab.k = j.at("k").get<Label>();
        lab.vertex_labels = j.at("vertex_labels").get<std::vector<Label>>();
        lab.edge_labels = j.at("edge_labels").get<std::vector<Label>>();
        doc.labeling = std::move(lab);
    }
    return doc;
}

LabelingDocument read_document_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path);
    char first = 0;
    in >> std::ws;
    first = static_cast<char>(in.peek());
    if (first == '{') return read_labeling_json(in);
    return read_edge_list(in);
}

void write_document_file(const std::string& path, const LabelingDocument& doc, bool json) {
    std::ofstream out(path);
    if (!out) fail("cannot open " + path + " for writing");
    if (json) write_labeling_json(out, doc);
    else write_edge_list(out, doc);
}

}  // namespace sgl
