#include "sgl/labeling.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace sgl {

namespace {

// Bijection check shared by the difference and sum verifiers.
void check_bijection(const Graph& g, const Labeling& lab, VerifyResult& result) {
    long long total = g.p() + g.q();
    std::vector<Label> all;
    all.reserve(static_cast<size_t>(total));
    all.insert(all.end(), lab.vertex_labels.begin(), lab.vertex_labels.end());
    all.insert(all.end(), lab.edge_labels.begin(), lab.edge_labels.end());
    std::sort(all.begin(), all.end());
    for (long long i = 0; i < total; ++i) {
        Label expected = lab.k + i;
        if (all[static_cast<size_t>(i)] != expected) {
            result.violations.push_back("label multiset is not [" + std::to_string(lab.k) + ", " +
                                        std::to_string(lab.k + total - 1) + "]: saw " +
                                        std::to_string(all[static_cast<size_t>(i)]) +
                                        " where " + std::to_string(expected) + " belongs");
            break;
        }
    }
}

void check_sizes(const Graph& g, const Labeling& lab) {
    if (static_cast<int>(lab.vertex_labels.size()) != g.p())
        throw std::invalid_argument("labeling does not assign every vertex");
    if (static_cast<int>(lab.edge_labels.size()) != g.q())
        throw std::invalid_argument("labeling does not assign every edge");
}

}  // namespace

VerifyResult verify_labeling(const Graph& g, const Labeling& lab) {
    check_sizes(g, lab);
    VerifyResult result;
    check_bijection(g, lab, result);
    for (int e = 0; e < g.q(); ++e) {
        auto [u, v] = g.edge(e);
        Label want = std::llabs(lab.vertex_labels[static_cast<size_t>(u)] -
                                lab.vertex_labels[static_cast<size_t>(v)]);
        Label got = lab.edge_labels[static_cast<size_t>(e)];
        if (got != want)
            result.violations.push_back("edge " + std::to_string(e) + " (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") labeled " +
                                        std::to_string(got) + " but |f(u)-f(v)| = " +
                                        std::to_string(want));
    }
    result.valid = result.violations.empty();
    return result;
}

Labeling labeling_from_vertex_labels(const Graph& g, Label k, std::vector<Label> vertex_labels) {
    if (static_cast<int>(vertex_labels.size()) != g.p())
        throw std::invalid_argument("need one label per vertex");
    Labeling lab;
    lab.k = k;
    lab.vertex_labels = std::move(vertex_labels);
    lab.edge_labels.reserve(static_cast<size_t>(g.q()));
    for (const Edge& e : g.edges())
        lab.edge_labels.push_back(std::llabs(lab.vertex_labels[static_cast<size_t>(e.u)] -
                                             lab.vertex_labels[static_cast<size_t>(e.v)]));
    return lab;
}

bool all_vertex_labels_odd(const Labeling& lab) {
    return std::all_of(lab.vertex_labels.begin(), lab.vertex_labels.end(),
                       [](Label x) { return x % 2 != 0; });
}

bool all_edge_labels_even(const Labeling& lab) {
    return std::all_of(lab.edge_labels.begin(), lab.edge_labels.end(),
                       [](Label x) { return x % 2 == 0; });
}

bool all_edge_labels_odd(const Labeling& lab) {
    return std::all_of(lab.edge_labels.begin(), lab.edge_labels.end(),
                       [](Label x) { return x % 2 != 0; });
}

Label max_label(const Labeling& lab) {
    Label best = lab.k;
    for (Label x : lab.vertex_labels) best = std::max(best, x);
    for (Label x : lab.edge_labels) best = std::max(best, x);
    return best;
}

bool edge_labels_are_interval(const Labeling& lab, Label lo, Label hi) {
    if (static_cast<long long>(lab.edge_labels.size()) != hi - lo + 1) return false;
    std::vector<Label> sorted = lab.edge_labels;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != lo + static_cast<Label>(i)) return false;
    return true;
}

VerifyResult verify_graceful(const Graph& g, const GracefulLabeling& lab) {
    if (static_cast<int>(lab.vertex_labels.size()) != g.p())
        throw std::invalid_argument("graceful labeling does not assign every vertex");
    VerifyResult result;
    std::vector<Label> verts = lab.vertex_labels;
    std::sort(verts.begin(), verts.end());
    if (verts.front() < 0 || verts.back() > g.q())
        result.violations.push_back("vertex labels must lie in [0, q]");
    if (std::adjacent_find(verts.begin(), verts.end()) != verts.end())
        result.violations.push_back("vertex labels must be distinct");
    std::vector<Label> diffs;
    for (const Edge& e : g.edges())
        diffs.push_back(std::llabs(lab.vertex_labels[static_cast<size_t>(e.u)] -
                                   lab.vertex_labels[static_cast<size_t>(e.v)]));
    std::sort(diffs.begin(), diffs.end());
    for (int i = 0; i < g.q(); ++i) {
        if (diffs[static_cast<size_t>(i)] != i + 1) {
            result.violations.push_back("induced edge labels are not [1, q]");
            break;
        }
    }
    result.valid = result.violations.empty();
    return result;
}

VerifyResult verify_sequentially_additive(const Graph& g, const Labeling& lab) {
    check_sizes(g, lab);
    VerifyResult result;
    check_bijection(g, lab, result);
    for (int e = 0; e < g.q(); ++e) {
        auto [u, v] = g.edge(e);
        Label want = lab.vertex_labels[static_cast<size_t>(u)] +
                     lab.vertex_labels[static_cast<size_t>(v)];
        if (lab.edge_labels[static_cast<size_t>(e)] != want)
            result.violations.push_back("edge " + std::to_string(e) + " labeled " +
                                        std::to_string(lab.edge_labels[static_cast<size_t>(e)]) +
                                        " but f(u)+f(v) = " + std::to_string(want));
    }
    result.valid = result.violations.empty();
    return result;
}

}  // namespace sgl
