#include "sgl/constructions.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>

#include "sgl/skolem.hpp"

namespace sgl {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

void require_valid(const Graph& g, const Labeling& lab, const std::string& who) {
    VerifyResult check = verify_labeling(g, lab);
    if (!check.valid) fail(who + ": input labeling is invalid (" + check.violations[0] + ")");
}

}  // namespace

Constructed star_all_odd_edges(int q) {
    if (q < 1) fail("star_all_odd_edges needs q >= 1");
    Graph g = star(q);
    std::vector<Label> verts(static_cast<size_t>(q) + 1);
    verts[0] = 2LL * q + 1;
    for (int i = 1; i <= q; ++i) verts[static_cast<size_t>(i)] = 2LL * (q - i + 1);
    return {g, labeling_from_vertex_labels(g, 1, std::move(verts))};
}

Labeling graceful_to_odd_super(const Graph& g, const GracefulLabeling& graceful) {
    if (g.p() != g.q() + 1) fail("graceful_to_odd_super needs a (q+1,q)-graph");
    VerifyResult check = verify_graceful(g, graceful);
    if (!check.valid) fail("input is not a graceful labeling: " + check.violations[0]);
    std::vector<Label> verts;
    verts.reserve(graceful.vertex_labels.size());
    for (Label x : graceful.vertex_labels) verts.push_back(2 * x + 1);
    return labeling_from_vertex_labels(g, 1, std::move(verts));
}

Labeling odd_super_to_edge_interval(const Graph& g, const Labeling& lab) {
    require_valid(g, lab, "odd_super_to_edge_interval");
    if (lab.k != 1) fail("odd_super_to_edge_interval needs k = 1");
    if (!all_vertex_labels_odd(lab)) fail("odd_super_to_edge_interval: some vertex label is even");
    std::vector<Label> verts;
    verts.reserve(lab.vertex_labels.size());
    for (Label x : lab.vertex_labels) verts.push_back((x - 1) / 2 + g.q() + 1);
    return labeling_from_vertex_labels(g, 1, std::move(verts));
}

GracefulLabeling edge_interval_to_graceful(const Graph& g, const Labeling& lab) {
    require_valid(g, lab, "edge_interval_to_graceful");
    if (lab.k != 1 || g.p() != g.q() + 1 || !edge_labels_are_interval(lab, 1, g.q()))
        fail("edge_interval_to_graceful needs a (q+1,q)-graph labeled with edge set [1, q]");
    GracefulLabeling out;
    out.vertex_labels.reserve(lab.vertex_labels.size());
    for (Label x : lab.vertex_labels) out.vertex_labels.push_back(x - g.q() - 1);
    return out;
}

Constructed extend_by_path(const Graph& g, const Labeling& lab, Vertex v, int n) {
    require_valid(g, lab, "extend_by_path");
    if (!all_vertex_labels_odd(lab) || lab.k != 1)
        fail("extend_by_path needs an all-odd-vertex super graceful labeling");
    if (v < 0 || v >= g.p() || lab.vertex_labels[static_cast<size_t>(v)] != 1)
        fail("extend_by_path: the graft vertex must be labeled 1");
    if (n < 2) fail("extend_by_path needs n >= 2");

    std::vector<Edge> edges = g.edges();
    std::vector<Label> verts = lab.vertex_labels;
    Vertex end = v;
    for (int step = 0; step + 2 <= n; ++step) {
        Label q = static_cast<Label>(edges.size());
        for (Label& x : verts) x = 2 * q + 4 - x;
        Vertex fresh = static_cast<Vertex>(verts.size());
        verts.push_back(1);
        edges.push_back({end, fresh});
        end = fresh;
    }
    Graph extended(static_cast<int>(verts.size()), std::move(edges));
    return {extended, labeling_from_vertex_labels(extended, 1, std::move(verts))};
}

Labeling complement_labeling(const Graph& g, const Labeling& lab) {
    require_valid(g, lab, "complement_labeling");
    if (!all_vertex_labels_odd(lab) || lab.k != 1 || g.p() != g.q() + 1)
        fail("complement_labeling needs an all-odd-vertex super graceful (n+1,n)-graph");
    Label n = g.q();
    std::vector<Label> verts;
    verts.reserve(lab.vertex_labels.size());
    for (Label x : lab.vertex_labels) verts.push_back(2 * n + 2 - x);
    return labeling_from_vertex_labels(g, 1, std::move(verts));
}

Constructed compose_disjoint(const std::vector<Constructed>& parts) {
    if (parts.empty()) fail("compose_disjoint needs at least one part");
    for (size_t i = 0; i < parts.size(); ++i)
        require_valid(parts[i].graph, parts[i].labeling, "compose_disjoint part " + std::to_string(i));
    if (parts.size() == 1) return parts[0];

    bool interval_mode = true;
    for (size_t i = 0; i < parts.size() && interval_mode; ++i) {
        const auto& [g, lab] = parts[i];
        if (!edge_labels_are_interval(lab, lab.k, lab.k + g.q() - 1)) interval_mode = false;
        if (i + 1 < parts.size() && parts[i + 1].labeling.k != lab.k + g.q()) interval_mode = false;
    }
    bool chain_mode = true;
    for (size_t i = 0; i + 1 < parts.size() && chain_mode; ++i)
        if (parts[i + 1].labeling.k != max_label(parts[i].labeling) + 1) chain_mode = false;
    if (!interval_mode && !chain_mode)
        fail("compose_disjoint: parts tile neither as edge intervals nor as label chains");

    // Interval mode keeps every edge label and shifts part i's vertex labels
    // above all later parts; chain mode concatenates labels untouched.
    std::vector<long long> shift(parts.size(), 0);
    if (interval_mode) {
        long long suffix = 0;
        for (size_t i = parts.size(); i-- > 0;) {
            shift[i] = suffix;
            suffix += parts[i].graph.p() + parts[i].graph.q();
        }
    }

    std::vector<Graph> graphs;
    Labeling merged;
    merged.k = parts.front().labeling.k;
    for (size_t i = 0; i < parts.size(); ++i) {
        graphs.push_back(parts[i].graph);
        for (Label x : parts[i].labeling.vertex_labels) merged.vertex_labels.push_back(x + shift[i]);
        for (Label x : parts[i].labeling.edge_labels) merged.edge_labels.push_back(x);
    }
    Graph whole = disjoint_union(graphs);
    VerifyResult check = verify_labeling(whole, merged);
    if (!check.valid)
        fail("compose_disjoint: parts do not tile correctly (" + check.violations[0] + ")");
    return {whole, merged};
}

namespace {

// Explicit all-even-edge triples (endpoint, edge, endpoint) per component.
const std::map<std::pair<int, char>, std::vector<std::array<Label, 3>>> kEvenEdgeTriples = {
    {{4, 'a'}, {{{5, 2, 7}}, {{3, 6, 9}}, {{1, 10, 11}}, {{8, 4, 12}}}},
    {{4, 'b'}, {{{5, 4, 9}}, {{1, 6, 7}}, {{3, 8, 11}}, {{10, 2, 12}}}},
    {{5, 'a'}, {{{7, 2, 9}}, {{5, 6, 11}}, {{3, 10, 13}}, {{1, 14, 15}}, {{8, 4, 12}}}},
    {{8, 'a'},
     {{{7, 4, 11}},
      {{15, 6, 21}},
      {{3, 10, 13}},
      {{5, 12, 17}},
      {{9, 14, 23}},
      {{1, 18, 19}},
      {{20, 2, 22}},
      {{16, 8, 24}}}},
    {{9, 'a'},
     {{{9, 6, 15}},
      {{11, 8, 19}},
      {{7, 10, 17}},
      {{13, 12, 25}},
      {{5, 18, 23}},
      {{1, 20, 21}},
      {{3, 24, 27}},
      {{14, 2, 16}},
      {{22, 4, 26}}}},
};

}  // namespace

Constructed nk2_even_edges(int n, char variant) {
    auto it = kEvenEdgeTriples.find({n, variant});
    if (it == kEvenEdgeTriples.end())
        fail("nk2_even_edges: no catalogued labeling for n=" + std::to_string(n) + " variant " +
             std::string(1, variant));
    Graph g = nk2(n);
    Labeling lab;
    lab.k = 1;
    for (const auto& triple : it->second) {
        lab.vertex_labels.push_back(triple[0]);
        lab.vertex_labels.push_back(triple[2]);
        lab.edge_labels.push_back(triple[1]);
    }
    return {g, lab};
}

Constructed even_edges_extend(const Graph& g, const Labeling& lab) {
    require_valid(g, lab, "even_edges_extend");
    int n = g.q();
    if (g.p() != 2 * n || n % 4 != 0) fail("even_edges_extend needs an all-even-edge (4t)K2");
    if (!all_edge_labels_even(lab) || lab.k != 1)
        fail("even_edges_extend needs an all-even-edge super graceful labeling, k = 1");
    int t = n / 4;
    int odd_components = 0;
    for (int i = 0; i < n; ++i) {
        Label a = lab.vertex_labels[static_cast<size_t>(2 * i)];
        Label b = lab.vertex_labels[static_cast<size_t>(2 * i + 1)];
        if (a % 2 != b % 2) fail("even_edges_extend: mixed-parity component");
        if (a % 2 != 0) ++odd_components;
    }
    if (odd_components != 3 * t)
        fail("even_edges_extend: expected exactly 3t odd-endpoint components");

    Graph bigger = nk2(n + 1);
    Labeling out;
    out.k = 1;
    for (int i = 0; i < n; ++i) {
        Label a = lab.vertex_labels[static_cast<size_t>(2 * i)];
        Label b = lab.vertex_labels[static_cast<size_t>(2 * i + 1)];
        Label shift = a % 2 != 0 ? 2 : 0;
        out.vertex_labels.push_back(a + shift);
        out.vertex_labels.push_back(b + shift);
        out.edge_labels.push_back(lab.edge_labels[static_cast<size_t>(i)]);
    }
    out.vertex_labels.push_back(1);
    out.vertex_labels.push_back(12LL * t + 3);
    out.edge_labels.push_back(12LL * t + 2);
    return {bigger, out};
}

namespace {

// Vertex labels for C3+Pm / C4+Pm, by residue s = m mod 4 and r = (m-s)/4.
// The path is u1 v1 u2 v2 ...; cycle labels are listed in cycle order. Only
// vertex labels are assigned; edge labels are forced as differences and the
// verifier gates every case.
struct CpPlan {
    std::vector<Label> cycle;
    std::vector<Label> path;  // in path order
};

CpPlan cp_plan_c3(int m) {
    int r = m / 4, s = m % 4;
    long long R = r;
    CpPlan plan;
    int u_count = (m + 1) / 2, v_count = m / 2;
    std::vector<Label> u(static_cast<size_t>(u_count) + 1), v(static_cast<size_t>(v_count) + 1);
    if (s == 0) {
        plan.cycle = {4 * R + 1, 4 * R + 3, 4 * R + 7};
        for (int i = 1; i <= u_count; ++i)
            u[static_cast<size_t>(i)] = i % 2 != 0 ? 2LL * i + 1 : 2LL * i - 3;
        v[1] = 8 * R + 5;
        v[static_cast<size_t>(v_count)] = 4 * R + 5;
        for (int i = 3; i <= 2 * r - 1; i += 2) v[static_cast<size_t>(i)] = 8 * R + 9 - 2 * i;
        for (int i = 2; i <= 2 * r - 2; i += 2) v[static_cast<size_t>(i)] = 8 * R + 5 - 2 * i;
    } else if (s == 1) {
        plan.cycle = {4 * R + 1, 4 * R + 5, 4 * R + 7};
        for (int i = 1; i <= u_count; ++i)
            u[static_cast<size_t>(i)] = i % 2 != 0 ? 2LL * i + 1 : 2LL * i - 3;
        for (int i = 1; i <= v_count; ++i)
            v[static_cast<size_t>(i)] = i % 2 != 0 ? 8 * R + 7 - 2LL * i : 8 * R + 11 - 2LL * i;
    } else if (s == 2) {
        if (m == 6) {
            plan.cycle = {5, 7, 11};
            plan.path = {9, 17, 1, 15, 3, 13};
            return plan;
        }
        plan.cycle = {4 * R + 3, 4 * R + 5, 4 * R + 9};
        for (int i = 1; i <= 2 * r - 2; ++i)
            u[static_cast<size_t>(i)] = i % 2 != 0 ? 2LL * i + 1 : 2LL * i - 3;
        u[static_cast<size_t>(2 * r - 1)] = 4 * R - 3;
        u[static_cast<size_t>(2 * r)] = 4 * R + 1;
        u[static_cast<size_t>(2 * r + 1)] = 4 * R - 1;
        v[1] = 8 * R + 9;
        for (int i = 2; i <= 2 * r - 2; i += 2) v[static_cast<size_t>(i)] = 8 * R + 9 - 2 * i;
        for (int i = 3; i <= 2 * r - 1; i += 2) v[static_cast<size_t>(i)] = 8 * R + 13 - 2 * i;
        v[static_cast<size_t>(2 * r)] = 4 * R + 11;
        v[static_cast<size_t>(2 * r + 1)] = 4 * R + 7;
    } else {
        plan.cycle = {4 * R + 3, 4 * R + 7, 4 * R + 9};
        u[1] = 3;
        u[2] = 5;
        u[3] = 1;
        for (int i = 4; i <= u_count; ++i)
            u[static_cast<size_t>(i)] = i % 2 == 0 ? 2LL * i + 1 : 2LL * i - 3;
        v[1] = 8 * R + 7;
        v[2] = 8 * R + 11;
        v[3] = 8 * R + 9;
        for (int i = 4; i <= v_count; ++i)
            v[static_cast<size_t>(i)] = i % 2 != 0 ? 8 * R + 15 - 2LL * i : 8 * R + 11 - 2LL * i;
    }
    for (int i = 1; i <= m; ++i)
        plan.path.push_back(i % 2 != 0 ? u[static_cast<size_t>((i + 1) / 2)]
                                       : v[static_cast<size_t>(i / 2)]);
    return plan;
}

CpPlan cp_plan_c4(int m) {
    int r = m / 4, s = m % 4;
    long long R = r;
    CpPlan plan;
    if (m == 3) {
        plan.cycle = {1, 11, 5, 13};
        plan.path = {3, 7, 9};
        return plan;
    }
    if (m == 4) {
        // Rederived: the published path row reuses a cycle label; this
        // arrangement passes the verifier.
        plan.cycle = {1, 13, 5, 15};
        plan.path = {3, 9, 7, 11};
        return plan;
    }
    int u_count = (m + 1) / 2, v_count = m / 2;
    std::vector<Label> u(static_cast<size_t>(u_count) + 1), v(static_cast<size_t>(v_count) + 1);
    if (s == 0) {
        plan.cycle = {1, 8 * R + 5, 5, 8 * R + 7};
        u[1] = 3;  // published as 2, which is even; 3 matches the stated edge labels
        u[2] = 7;
        for (int i = 3; i <= u_count; ++i)
            u[static_cast<size_t>(i)] = i % 2 != 0 ? 2LL * i + 5 : 2LL * i + 1;
        for (int i = 1; i <= v_count; ++i)
            v[static_cast<size_t>(i)] = i % 2 != 0 ? 8 * R + 3 - 2LL * i : 8 * R + 7 - 2LL * i;
    } else if (s == 1) {
        plan.cycle = {1, 8 * R + 5, 3, 8 * R + 9};
        for (int i = 1; i <= u_count; ++i)
            u[static_cast<size_t>(i)] = i % 2 != 0 ? 8 * R + 9 - 2LL * i : 8 * R + 5 - 2LL * i;
        for (int i = 1; i <= v_count; ++i)
            v[static_cast<size_t>(i)] = i % 2 != 0 ? 5 + 2LL * i : 2LL * i + 1;
    } else if (s == 2) {
        plan.cycle = {1, 8 * R + 7, 3, 8 * R + 11};
        u[1] = 8 * R + 9;
        u[2] = 8 * R + 5;
        for (int i = 3; i <= u_count; ++i)
            u[static_cast<size_t>(i)] = i % 2 != 0 ? 8 * R + 7 - 2LL * i : 8 * R + 11 - 2LL * i;
        for (int i = 1; i <= v_count; ++i)
            v[static_cast<size_t>(i)] = i % 2 != 0 ? 5 + 2LL * i : 2LL * i + 1;
    } else {
        plan.cycle = {1, 8 * R + 9, 3, 8 * R + 13};
        for (int i = 1; i <= 2 * r + 1; ++i)
            u[static_cast<size_t>(i)] = i % 2 != 0 ? 8 * R + 13 - 2LL * i : 8 * R + 9 - 2LL * i;
        u[static_cast<size_t>(2 * r + 2)] = 4 * R + 5;  // published 4r+3 collides with v1 at r=1
        for (int i = 1; i <= v_count; ++i)
            v[static_cast<size_t>(i)] = i % 2 != 0 ? 5 + 2LL * i : 2LL * i + 1;
    }
    for (int i = 1; i <= m; ++i)
        plan.path.push_back(i % 2 != 0 ? u[static_cast<size_t>((i + 1) / 2)]
                                       : v[static_cast<size_t>(i / 2)]);
    return plan;
}

}  // namespace

Constructed cycle_plus_path_labeling(int n, int m) {
    if (!((n == 3 && m >= 4) || (n == 4 && m >= 3)))
        fail("cycle_plus_path_labeling covers n = 3 with m >= 4 and n = 4 with m >= 3");
    CpPlan plan = n == 3 ? cp_plan_c3(m) : cp_plan_c4(m);
    Graph g = cycle_plus_path(n, m);
    std::vector<Label> verts;
    verts.insert(verts.end(), plan.cycle.begin(), plan.cycle.end());
    verts.insert(verts.end(), plan.path.begin(), plan.path.end());
    return {g, labeling_from_vertex_labels(g, 1, std::move(verts))};
}

namespace {

// Shared frame for both two-path constructions: label the long working path
// w_1..w_len, delete the edge (w_cut, w_cut+1), graft the spare vertex at one
// end, then map onto the two_paths(n, r) vertex numbering.
Constructed assemble_two_paths(int n, int r, const std::vector<Label>& w, Label spare,
                               int cut, bool graft_at_front, Label k) {
    int len = static_cast<int>(w.size()) - 1;  // w is 1-based
    Graph g = two_paths(n, r);
    std::vector<Label> verts(static_cast<size_t>(g.p()));
    // Long part P_{n+r}.
    std::vector<Label> long_part;
    if (graft_at_front) {
        long_part.push_back(spare);
        for (int i = 1; i <= cut; ++i) long_part.push_back(w[static_cast<size_t>(i)]);
    } else {
        for (int i = cut + 1; i <= len; ++i) long_part.push_back(w[static_cast<size_t>(i)]);
        long_part.push_back(spare);
    }
    std::vector<Label> short_part;
    if (graft_at_front)
        for (int i = cut + 1; i <= len; ++i) short_part.push_back(w[static_cast<size_t>(i)]);
    else
        for (int i = 1; i <= cut; ++i) short_part.push_back(w[static_cast<size_t>(i)]);

    if (static_cast<int>(long_part.size()) != n + r || static_cast<int>(short_part.size()) != n)
        fail("two-path assembly split lengths are off");
    for (int i = 0; i < n + r; ++i) verts[static_cast<size_t>(i)] = long_part[static_cast<size_t>(i)];
    for (int i = 0; i < n; ++i) verts[static_cast<size_t>(n + r + i)] = short_part[static_cast<size_t>(i)];
    return {g, labeling_from_vertex_labels(g, k, std::move(verts))};
}

}  // namespace

Constructed two_paths_k2(int n, int r) {
    if (n < 2) fail("two_paths_k2 needs n >= 2");
    if (r != 2 && r != 3) fail("two_paths_k2 covers r = 2 and r = 3");
    if (r == 2) {
        // w_{2j-1} = 3n+3-j, w_{2j} = 3n+3+j; edge i carries i+1; cut at the
        // edge labeled n+1 and graft 3n+3 after w_{2n+1}.
        std::vector<Label> w(static_cast<size_t>(2 * n + 2));
        for (int j = 1; j <= n + 1; ++j) w[static_cast<size_t>(2 * j - 1)] = 3LL * n + 3 - j;
        for (int j = 1; j <= n; ++j) w[static_cast<size_t>(2 * j)] = 3LL * n + 3 + j;
        return assemble_two_paths(n, r, w, 3LL * n + 3, n, false, 2);
    }
    // r = 3: same symmetric scheme around A = 3n+4 on P_{2n+2}.
    Label a = 3LL * n + 4;
    std::vector<Label> w(static_cast<size_t>(2 * n + 3));
    for (int j = 1; j <= n + 1; ++j) {
        w[static_cast<size_t>(2 * j - 1)] = a - j;
        w[static_cast<size_t>(2 * j)] = a + j;
    }
    return assemble_two_paths(n, r, w, a, n, false, 2);
}

Constructed two_paths_kn1(int n, int r) {
    if (n < 2) fail("two_paths_kn1 needs n >= 2");
    if (r != 2 && r != 3) fail("two_paths_kn1 covers r = 2 and r = 3");
    if (r == 2) {
        // Evens n+1..2n inside, odds 4n+2..5n+2 descending; edge i carries
        // 4n+2-i; cut the edge labeled 3n+1 and graft 2n+1 before w_1.
        std::vector<Label> w(static_cast<size_t>(2 * n + 2));
        for (int j = 1; j <= n; ++j) w[static_cast<size_t>(2 * j)] = static_cast<Label>(n) + j;
        for (int j = 1; j <= n + 1; ++j) w[static_cast<size_t>(2 * j - 1)] = 5LL * n + 3 - j;
        return assemble_two_paths(n, r, w, 2LL * n + 1, n + 1, true, static_cast<Label>(n) + 1);
    }
    std::vector<Label> w(static_cast<size_t>(2 * n + 3));
    for (int j = 1; j <= n + 1; ++j) {
        w[static_cast<size_t>(2 * j)] = static_cast<Label>(n) + j;
        w[static_cast<size_t>(2 * j - 1)] = 5LL * n + 5 - j;
    }
    return assemble_two_paths(n, r, w, 2LL * n + 2, n + 2, true, static_cast<Label>(n) + 1);
}

Constructed bipartite_growth(GrowthMode mode, int n, Label d, Label k, int rounds) {
    if (n < 1 || rounds < 0) fail("bipartite_growth needs n >= 1 and rounds >= 0");
    if (mode == GrowthMode::A1 && !(d > k && k >= 1)) fail("A1 needs d > k >= 1");
    if (mode == GrowthMode::A2 && !(2 <= d && d <= k)) fail("A2 needs 2 <= d <= k");

    std::vector<Label> vertex_labels;  // index = vertex id
    for (int i = 0; i <= n; ++i) vertex_labels.push_back(k + i * d);

    struct CandidateEdge {
        Vertex a;  // u_i index
        Vertex b;  // new vertex index
        Label label;
    };
    std::vector<CandidateEdge> candidates;

    auto add_batch = [&](Label first_label, Label batch_size) {
        std::vector<Vertex> fresh;
        for (Label s = 0; s < batch_size; ++s) {
            fresh.push_back(static_cast<Vertex>(vertex_labels.size()));
            vertex_labels.push_back(first_label + s);
        }
        for (int i = 0; i <= n; ++i)
            for (Vertex b : fresh) {
                Label diff = vertex_labels[static_cast<size_t>(b)] - (k + i * d);
                if (diff < 0) diff = -diff;
                candidates.push_back({i, b, diff});
            }
    };

    if (mode == GrowthMode::A1) {
        add_batch(2 * k + 1 + static_cast<Label>(n) * d, d - 1);
        for (int t = 1; t <= rounds; ++t)
            add_batch((t + 2) * k + (static_cast<Label>(n) * t + n + t) * d, d);
    } else {
        add_batch(2 * k + 1 + static_cast<Label>(n) * d, k);
        for (int t = 1; t <= rounds; ++t) add_batch(2 * (t + 1) * k + (t + 1) * d + 1, k);
    }

    std::set<Label> vertex_label_set(vertex_labels.begin(), vertex_labels.end());
    if (vertex_label_set.size() != vertex_labels.size())
        fail("bipartite_growth: vertex labels collide; parameters outside the usable domain");

    // An edge survives when its label is no vertex label and no earlier kept
    // edge claimed it (earlier = smaller u_i, then insertion order).
    std::set<Label> used_edge_labels;
    std::vector<Edge> edges;
    std::vector<Label> edge_labels;
    for (const CandidateEdge& c : candidates) {
        if (vertex_label_set.count(c.label) || used_edge_labels.count(c.label)) continue;
        used_edge_labels.insert(c.label);
        edges.push_back({c.a, c.b});
        edge_labels.push_back(c.label);
    }

    Graph g(static_cast<int>(vertex_labels.size()), std::move(edges));
    Labeling lab;
    lab.k = k;
    lab.vertex_labels = std::move(vertex_labels);
    lab.edge_labels = std::move(edge_labels);
    return {g, lab};
}

Labeling nk2_to_sequentially_additive(const Graph& g, const Labeling& lab) {
    require_valid(g, lab, "nk2_to_sequentially_additive");
    if (g.p() != 2 * g.q()) fail("nk2_to_sequentially_additive needs nK2");
    Labeling out = lab;
    for (int i = 0; i < g.q(); ++i) {
        size_t a = static_cast<size_t>(2 * i), b = a + 1;
        size_t larger = out.vertex_labels[a] > out.vertex_labels[b] ? a : b;
        std::swap(out.vertex_labels[larger], out.edge_labels[static_cast<size_t>(i)]);
    }
    return out;
}

Labeling nk2_from_sequentially_additive(const Graph& g, const Labeling& lab) {
    VerifyResult check = verify_sequentially_additive(g, lab);
    if (!check.valid)
        fail("nk2_from_sequentially_additive: input is not sequentially additive (" +
             check.violations[0] + ")");
    if (g.p() != 2 * g.q()) fail("nk2_from_sequentially_additive needs nK2");
    // The endpoint with the smaller label takes the edge's sum back; on
    // edge-interval labelings this inverts nk2_to_sequentially_additive.
    Labeling out = lab;
    for (int i = 0; i < g.q(); ++i) {
        size_t a = static_cast<size_t>(2 * i), b = a + 1;
        size_t smaller = out.vertex_labels[a] < out.vertex_labels[b] ? a : b;
        std::swap(out.vertex_labels[smaller], out.edge_labels[static_cast<size_t>(i)]);
    }
    return out;
}

Constructed build_recipe(const ConstructionRecipe& recipe) {
    const auto& p = recipe.params;
    auto need = [&](size_t count) {
        if (p.size() != count)
            fail("construction " + recipe.family + " expects " + std::to_string(count) +
                 " parameter(s)");
    };
    if (recipe.family == "star_odd_edges") {
        need(1);
        return star_all_odd_edges(static_cast<int>(p[0]));
    }
    if (recipe.family == "nk2_even_edges") {
        need(1);
        char variant = recipe.variant.empty() ? 'a' : recipe.variant[0];
        return nk2_even_edges(static_cast<int>(p[0]), variant);
    }
    if (recipe.family == "cycle_plus_path") {
        need(2);
        return cycle_plus_path_labeling(static_cast<int>(p[0]), static_cast<int>(p[1]));
    }
    if (recipe.family == "two_paths_k2") {
        need(2);
        return two_paths_k2(static_cast<int>(p[0]), static_cast<int>(p[1]));
    }
    if (recipe.family == "two_paths_kn1") {
        need(2);
        return two_paths_kn1(static_cast<int>(p[0]), static_cast<int>(p[1]));
    }
    if (recipe.family == "bipartite_a1" || recipe.family == "bipartite_a2") {
        need(3);
        GrowthMode mode = recipe.family == "bipartite_a1" ? GrowthMode::A1 : GrowthMode::A2;
        return bipartite_growth(mode, static_cast<int>(p[0]), p[1], recipe.k,
                                static_cast<int>(p[2]));
    }
    if (recipe.family == "skolem_nk2") {
        need(1);
        int n = static_cast<int>(p[0]);
        SkolemSearchReport report = skolem_search(n, recipe.k);
        if (!report.sequence)
            throw std::runtime_error("no sequence of length " + std::to_string(n) +
                                     " exists at this offset");
        return {nk2(n), skolem_to_nk2_labeling(*report.sequence)};
    }
    if (recipe.family == "recursive_nk2") {
        need(1);
        Labeling lab = nk2_recursive_family(recipe.k, static_cast<int>(p[0]));
        return {nk2(static_cast<int>(lab.edge_labels.size())), lab};
    }
    fail("unknown construction family: " + recipe.family);
}

}  // namespace sgl
