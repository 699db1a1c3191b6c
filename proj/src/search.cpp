#include "sgl/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <stdexcept>
#include <thread>

#include "sgl/independence.hpp"

namespace sgl {

namespace {

constexpr Label kUnknown = -1;

struct Solver {
    const Graph& g;
    const SearchConfig& cfg;
    Label k, top;
    Label top_region;  // labels above this enjoy the top-range branch skip
    int total;

    // owner[label - k]: -1 free, vertex id, or p + edge id. A label is owned
    // from the moment it is implied, not just when the scan consumes it.
    std::vector<int> owner;
    std::vector<Label> vlab;  // kUnknown until implied
    std::vector<Label> elab;

    std::vector<int> group_of;        // -1 when ungrouped
    std::vector<int> group_known;     // known-label members per group
    std::vector<int> evens_in_group;  // even labels placed per group

    std::uint64_t nodes = 0;
    std::uint64_t count = 0;
    bool budget_hit = false;
    bool stop = false;
    std::vector<Labeling> witnesses;
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;

    // Changes made by one branch, undone in reverse.
    struct Trail {
        std::vector<int> labels_owned;       // label indices set
        std::vector<Vertex> vertices_known;  // vlab set
        std::vector<int> edges_known;        // elab set
    };

    Solver(const Graph& graph, const SearchConfig& config)
        : g(graph), cfg(config), k(config.k) {
        total = g.p() + g.q();
        top = k + total - 1;
        top_region = top - k;  // the k largest labels are (top_region, top]
        owner.assign(static_cast<size_t>(total), -1);
        vlab.assign(static_cast<size_t>(g.p()), kUnknown);
        elab.assign(static_cast<size_t>(g.q()), kUnknown);
        group_of.assign(static_cast<size_t>(g.p()), -1);
        for (size_t gi = 0; gi < cfg.interchangeable_groups.size(); ++gi)
            for (Vertex v : cfg.interchangeable_groups[gi])
                group_of[static_cast<size_t>(v)] = static_cast<int>(gi);
        group_known.assign(cfg.interchangeable_groups.size(), 0);
        evens_in_group.assign(cfg.interchangeable_groups.size(), 0);
        if (cfg.time_budget_seconds > 0) {
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                           std::chrono::duration<double>(cfg.time_budget_seconds));
            has_deadline = true;
        }
    }

    bool over_budget() {
        if (nodes > cfg.node_budget) return true;
        if (has_deadline && (nodes & 0xfff) == 0 &&
            std::chrono::steady_clock::now() > deadline)
            return true;
        return false;
    }

    bool group_canonical(Vertex v) const {
        int gi = group_of[static_cast<size_t>(v)];
        if (gi < 0) return true;
        // Members must become labeled in index order.
        const auto& members = cfg.interchangeable_groups[static_cast<size_t>(gi)];
        return members[static_cast<size_t>(group_known[static_cast<size_t>(gi)])] == v;
    }

    bool parity_profiles_feasible() const {
        if (cfg.parity_profiles.empty()) return true;
        const auto& ga = cfg.interchangeable_groups[0];
        const auto& gb = cfg.interchangeable_groups[1];
        int ea = evens_in_group[0], eb = evens_in_group[1];
        int slack_a = static_cast<int>(ga.size()) - group_known[0];
        int slack_b = static_cast<int>(gb.size()) - group_known[1];
        for (auto [a, b] : cfg.parity_profiles)
            if (ea <= a && a <= ea + slack_a && eb <= b && b <= eb + slack_b) return true;
        return false;
    }

    bool vertex_parity_ok(Label value) const {
        return cfg.parity != ParityMask::AllOddVertices || value % 2 != 0;
    }
    bool edge_parity_ok(Label value) const {
        return cfg.parity != ParityMask::AllEvenEdges || value % 2 == 0;
    }

    // Gives vertex v the value and reserves every edge label this implies.
    bool know_vertex(Vertex v, Label value, Trail& trail) {
        if (!vertex_parity_ok(value)) return false;
        vlab[static_cast<size_t>(v)] = value;
        trail.vertices_known.push_back(v);
        int gi = group_of[static_cast<size_t>(v)];
        if (gi >= 0) {
            ++group_known[static_cast<size_t>(gi)];
            if (value % 2 == 0) ++evens_in_group[static_cast<size_t>(gi)];
        }
        for (auto [w, e] : g.neighbors(v)) {
            if (vlab[static_cast<size_t>(w)] == kUnknown) continue;
            if (elab[static_cast<size_t>(e)] != kUnknown) continue;
            Label z = vlab[static_cast<size_t>(w)] - value;
            if (z < 0) z = -z;
            if (z < k || z > top) return false;
            if (owner[static_cast<size_t>(z - k)] != -1) return false;
            if (!edge_parity_ok(z)) return false;
            owner[static_cast<size_t>(z - k)] = g.p() + e;
            trail.labels_owned.push_back(static_cast<int>(z - k));
            elab[static_cast<size_t>(e)] = z;
            trail.edges_known.push_back(e);
        }
        return parity_profiles_feasible();
    }

    void undo(const Trail& trail) {
        for (auto it = trail.edges_known.rbegin(); it != trail.edges_known.rend(); ++it)
            elab[static_cast<size_t>(*it)] = kUnknown;
        for (auto it = trail.vertices_known.rbegin(); it != trail.vertices_known.rend(); ++it) {
            Vertex v = *it;
            int gi = group_of[static_cast<size_t>(v)];
            if (gi >= 0) {
                --group_known[static_cast<size_t>(gi)];
                if (vlab[static_cast<size_t>(v)] % 2 == 0) --evens_in_group[static_cast<size_t>(gi)];
            }
            vlab[static_cast<size_t>(v)] = kUnknown;
        }
        for (auto it = trail.labels_owned.rbegin(); it != trail.labels_owned.rend(); ++it)
            owner[static_cast<size_t>(*it)] = -1;
    }

    bool canonical_under_component_symmetry(const Labeling& lab) const {
        // Components of equal order and size must appear with increasing
        // minimum vertex label.
        auto comps = g.components();
        std::vector<int> comp_edges(comps.size(), 0);
        for (const Edge& e : g.edges())
            ++comp_edges[static_cast<size_t>(g.component_of()[static_cast<size_t>(e.u)])];
        for (size_t c = 0; c + 1 < comps.size(); ++c) {
            if (comps[c].size() != comps[c + 1].size() || comp_edges[c] != comp_edges[c + 1])
                continue;
            Label min_here = kUnknown, min_next = kUnknown;
            for (Vertex v : comps[c])
                if (min_here == kUnknown || lab.vertex_labels[static_cast<size_t>(v)] < min_here)
                    min_here = lab.vertex_labels[static_cast<size_t>(v)];
            for (Vertex v : comps[c + 1])
                if (min_next == kUnknown || lab.vertex_labels[static_cast<size_t>(v)] < min_next)
                    min_next = lab.vertex_labels[static_cast<size_t>(v)];
            if (min_here > min_next) return false;
        }
        return true;
    }

    void record_solution() {
        Labeling lab;
        lab.k = k;
        lab.vertex_labels = vlab;
        lab.edge_labels = elab;
        if (!verify_labeling(g, lab).valid)
            throw std::logic_error("search produced an invalid labeling");
        if (cfg.component_symmetry && !canonical_under_component_symmetry(lab)) return;
        ++count;
        if (static_cast<int>(witnesses.size()) < cfg.witness_cap) witnesses.push_back(lab);
        if (cfg.mode == SearchMode::FindFirst) stop = true;
    }

    void descend(Label x) {
        if (stop || budget_hit) return;
        if (x < k) {
            record_solution();
            return;
        }
        if (owner[static_cast<size_t>(x - k)] != -1) {
            descend(x - 1);  // already implied, nothing to choose
            return;
        }
        if (over_budget()) {
            budget_hit = true;
            return;
        }
        bool in_top_region = x > top_region;

        // Place x on a vertex.
        for (Vertex v = 0; v < g.p(); ++v) {
            if (vlab[static_cast<size_t>(v)] != kUnknown) continue;
            if (!group_canonical(v)) continue;
            if (cfg.top_range_prune && in_top_region) {
                bool blocked = false;
                for (auto [w, e] : g.neighbors(v)) {
                    (void)e;
                    if (vlab[static_cast<size_t>(w)] != kUnknown) {
                        blocked = true;  // would force an edge label below k
                        break;
                    }
                }
                if (blocked) continue;
            }
            ++nodes;
            Trail trail;
            owner[static_cast<size_t>(x - k)] = v;
            trail.labels_owned.push_back(static_cast<int>(x - k));
            if (know_vertex(v, x, trail)) descend(x - 1);
            undo(trail);
            if (stop || budget_hit) return;
        }

        // Consume x as the label of an edge with one labeled endpoint; the
        // top k labels cannot be edge labels, so skip under the prune.
        if (cfg.top_range_prune && in_top_region) return;
        for (int e = 0; e < g.q(); ++e) {
            if (elab[static_cast<size_t>(e)] != kUnknown) continue;
            auto [a, b] = g.edge(e);
            for (int orientation = 0; orientation < 2; ++orientation) {
                Vertex w = orientation == 0 ? a : b;
                Vertex t = orientation == 0 ? b : a;
                if (vlab[static_cast<size_t>(w)] == kUnknown ||
                    vlab[static_cast<size_t>(t)] != kUnknown)
                    continue;
                ++nodes;
                Label forced = vlab[static_cast<size_t>(w)] - x;
                if (forced < k || forced >= x) continue;
                if (owner[static_cast<size_t>(forced - k)] != -1) continue;
                if (!edge_parity_ok(x)) continue;
                if (!group_canonical(t)) continue;
                Trail trail;
                owner[static_cast<size_t>(x - k)] = g.p() + e;
                trail.labels_owned.push_back(static_cast<int>(x - k));
                elab[static_cast<size_t>(e)] = x;
                trail.edges_known.push_back(e);
                owner[static_cast<size_t>(forced - k)] = t;
                trail.labels_owned.push_back(static_cast<int>(forced - k));
                if (know_vertex(t, forced, trail)) descend(x - 1);
                undo(trail);
                if (stop || budget_hit) return;
            }
        }
    }
};

SearchReport run_sequential(const Graph& g, const SearchConfig& cfg) {
    Solver solver(g, cfg);
    solver.descend(solver.top);
    SearchReport report;
    report.count = solver.count;
    report.nodes = solver.nodes;
    report.witnesses = std::move(solver.witnesses);
    report.exhausted = !solver.budget_hit &&
                       (cfg.mode == SearchMode::CountAll || solver.count == 0);
    return report;
}

// Snapshot of a solver at a frontier node, replayable on a worker.
struct FrontierTask {
    std::vector<int> owner;
    std::vector<Label> vlab;
    std::vector<Label> elab;
    std::vector<int> group_known;
    std::vector<int> evens_in_group;
    Label next_label = 0;
};

struct FrontierCollector : Solver {
    int split_depth;
    std::vector<FrontierTask>& out;

    FrontierCollector(const Graph& graph, const SearchConfig& config, int depth,
                      std::vector<FrontierTask>& sink)
        : Solver(graph, config), split_depth(depth), out(sink) {}

    void collect(Label x, int branches_done) {
        if (x < k) {
            record_solution();  // tiny instance fully solved during splitting
            return;
        }
        if (owner[static_cast<size_t>(x - k)] != -1) {
            collect(x - 1, branches_done);
            return;
        }
        if (branches_done >= split_depth) {
            out.push_back({owner, vlab, elab, group_known, evens_in_group, x});
            return;
        }
        // Mirror descend()'s branch enumeration.
        bool in_top_region = x > top_region;
        for (Vertex v = 0; v < g.p(); ++v) {
            if (vlab[static_cast<size_t>(v)] != kUnknown) continue;
            if (!group_canonical(v)) continue;
            if (cfg.top_range_prune && in_top_region) {
                bool blocked = false;
                for (auto [w, e] : g.neighbors(v)) {
                    (void)e;
                    if (vlab[static_cast<size_t>(w)] != kUnknown) {
                        blocked = true;
                        break;
                    }
                }
                if (blocked) continue;
            }
            ++nodes;
            Trail trail;
            owner[static_cast<size_t>(x - k)] = v;
            trail.labels_owned.push_back(static_cast<int>(x - k));
            if (know_vertex(v, x, trail)) collect(x - 1, branches_done + 1);
            undo(trail);
        }
        if (cfg.top_range_prune && in_top_region) return;
        for (int e = 0; e < g.q(); ++e) {
            if (elab[static_cast<size_t>(e)] != kUnknown) continue;
            auto [a, b] = g.edge(e);
            for (int orientation = 0; orientation < 2; ++orientation) {
                Vertex w = orientation == 0 ? a : b;
                Vertex t = orientation == 0 ? b : a;
                if (vlab[static_cast<size_t>(w)] == kUnknown ||
                    vlab[static_cast<size_t>(t)] != kUnknown)
                    continue;
                ++nodes;
                Label forced = vlab[static_cast<size_t>(w)] - x;
                if (forced < k || forced >= x) continue;
                if (owner[static_cast<size_t>(forced - k)] != -1) continue;
                if (!edge_parity_ok(x)) continue;
                if (!group_canonical(t)) continue;
                Trail trail;
                owner[static_cast<size_t>(x - k)] = g.p() + e;
                trail.labels_owned.push_back(static_cast<int>(x - k));
                elab[static_cast<size_t>(e)] = x;
                trail.edges_known.push_back(e);
                owner[static_cast<size_t>(forced - k)] = t;
                trail.labels_owned.push_back(static_cast<int>(forced - k));
                if (know_vertex(t, forced, trail)) collect(x - 1, branches_done + 1);
                undo(trail);
            }
        }
    }
};

SearchReport run_parallel(const Graph& g, const SearchConfig& cfg) {
    std::vector<FrontierTask> tasks;
    FrontierCollector collector(g, cfg, 2, tasks);
    collector.collect(collector.top, 0);

    std::vector<SearchReport> partials(tasks.size());
    std::atomic<size_t> next{0};
    std::atomic<bool> found_any{false};
    auto worker = [&]() {
        while (true) {
            size_t id = next.fetch_add(1);
            if (id >= tasks.size()) return;
            if (cfg.mode == SearchMode::FindFirst && found_any.load()) return;
            Solver solver(g, cfg);
            solver.owner = tasks[id].owner;
            solver.vlab = tasks[id].vlab;
            solver.elab = tasks[id].elab;
            solver.group_known = tasks[id].group_known;
            solver.evens_in_group = tasks[id].evens_in_group;
            solver.descend(tasks[id].next_label);
            SearchReport part;
            part.count = solver.count;
            part.nodes = solver.nodes;
            part.witnesses = std::move(solver.witnesses);
            part.exhausted = !solver.budget_hit;
            if (part.count > 0) found_any.store(true);
            partials[id] = std::move(part);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < cfg.threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    SearchReport merged;
    merged.count = collector.count;  // solutions shallower than the split
    merged.nodes = collector.nodes;
    merged.witnesses = std::move(collector.witnesses);
    merged.exhausted = true;
    for (SearchReport& part : partials) {
        merged.count += part.count;
        merged.nodes += part.nodes;
        merged.exhausted = merged.exhausted && part.exhausted;
        for (Labeling& w : part.witnesses)
            if (static_cast<int>(merged.witnesses.size()) < cfg.witness_cap)
                merged.witnesses.push_back(std::move(w));
    }
    if (cfg.mode == SearchMode::FindFirst && merged.count > 0)
        merged.exhausted = false;  // stopped early by design
    return merged;
}

}  // namespace

SearchReport solve(const Graph& g, const SearchConfig& cfg) {
    if (cfg.node_budget == 0) throw std::invalid_argument("node budget must be positive");
    if (!cfg.parity_profiles.empty() && cfg.interchangeable_groups.size() != 2)
        throw std::invalid_argument("parity profiles need exactly two vertex groups");
    if (!cfg.ignore_filters) {
        FeasibilityVerdict range = check_k_range(g, cfg.k);
        if (range.infeasible())
            throw std::invalid_argument("instance already ruled out (" + range.rule_id +
                                        "); set ignore_filters to search anyway");
        if (cfg.parity == ParityMask::AllOddVertices &&
            check_all_odd_vertices(g, cfg.k).infeasible())
            throw std::invalid_argument(
                "all-odd-vertex labelings are ruled out here; set ignore_filters to search anyway");
    }
    if (cfg.threads > 1) return run_parallel(g, cfg);
    return run_sequential(g, cfg);
}

std::vector<NonexistenceEntry> certify_nonexistence(const Graph& g, const std::vector<Label>& ks,
                                                    const SearchConfig& base) {
    std::vector<NonexistenceEntry> out;
    for (Label k : ks) {
        SearchConfig cfg = base;
        cfg.k = k;
        cfg.mode = SearchMode::CountAll;
        cfg.ignore_filters = true;
        out.push_back({k, solve(g, cfg)});
    }
    return out;
}

std::optional<std::vector<Label>> feasible_offsets(const Graph& g, const SearchConfig& base) {
    int alpha = independence_number(g).alpha;
    std::vector<Label> ks;
    for (Label k = 1; k <= alpha; ++k) ks.push_back(k);
    std::vector<Label> feasible;
    for (const NonexistenceEntry& entry : certify_nonexistence(g, ks, base)) {
        if (!entry.report.exhausted) return std::nullopt;
        if (entry.report.count > 0) feasible.push_back(entry.k);
    }
    return feasible;
}

SearchReport kmn_search(int m, int n, Label k, bool use_parity_profiles,
                        const SearchConfig& base) {
    Graph g = complete_bipartite(m, n);
    SearchConfig cfg = base;
    cfg.k = k;
    std::vector<Vertex> side_a, side_b;
    for (Vertex v = 0; v < m; ++v) side_a.push_back(v);
    for (Vertex v = m; v < m + n; ++v) side_b.push_back(v);
    cfg.interchangeable_groups = {side_a, side_b};
    cfg.parity_profiles.clear();
    if (use_parity_profiles && n >= m && m >= 2) {
        auto profile = kmn_parity_profile(m, n, k);
        if (std::holds_alternative<FeasibilityVerdict>(profile)) {
            // Profile empty: nothing to search for under this rule, but run
            // anyway so the report is a search result, not a filter verdict.
            cfg.parity_profiles = {};
        } else {
            cfg.parity_profiles = std::get<ParityProfile>(profile).admissible_ab;
        }
    }
    cfg.ignore_filters = true;
    return solve(g, cfg);
}

}  // namespace sgl
