#include "sgl/independence.hpp"

#include <algorithm>

namespace sgl {

namespace {

struct MisSolver {
    const Graph& g;
    std::vector<char> alive;    // vertex still in the induced subgraph
    std::vector<int> degree;    // degree within the alive subgraph
    std::vector<Vertex> chosen;
    std::vector<Vertex> best;

    explicit MisSolver(const Graph& graph) : g(graph) {
        alive.assign(static_cast<size_t>(g.p()), 1);
        degree.resize(static_cast<size_t>(g.p()));
        for (Vertex v = 0; v < g.p(); ++v) degree[static_cast<size_t>(v)] = g.degree(v);
    }

    void remove(Vertex v, std::vector<Vertex>& trail) {
        alive[static_cast<size_t>(v)] = 0;
        trail.push_back(v);
        for (auto [w, e] : g.neighbors(v)) {
            (void)e;
            if (alive[static_cast<size_t>(w)]) --degree[static_cast<size_t>(w)];
        }
    }

    void restore(std::vector<Vertex>& trail) {
        while (!trail.empty()) {
            Vertex v = trail.back();
            trail.pop_back();
            alive[static_cast<size_t>(v)] = 1;
            for (auto [w, e] : g.neighbors(v)) {
                (void)e;
                if (alive[static_cast<size_t>(w)]) ++degree[static_cast<size_t>(w)];
            }
        }
    }

    void take(Vertex v, std::vector<Vertex>& trail) {
        chosen.push_back(v);
        remove(v, trail);
        for (auto [w, e] : g.neighbors(v)) {
            (void)e;
            if (alive[static_cast<size_t>(w)]) remove(w, trail);
        }
    }

    void search() {
        std::vector<Vertex> trail;
        size_t chosen_mark = chosen.size();
        // Degree-0 vertices always join; a degree-1 vertex joins some maximum
        // independent set, so taking it greedily is safe.
        bool reduced = true;
        while (reduced) {
            reduced = false;
            for (Vertex v = 0; v < g.p(); ++v) {
                if (alive[static_cast<size_t>(v)] && degree[static_cast<size_t>(v)] <= 1) {
                    take(v, trail);
                    reduced = true;
                }
            }
        }
        int alive_count = static_cast<int>(std::count(alive.begin(), alive.end(), 1));
        if (static_cast<int>(chosen.size()) + alive_count > static_cast<int>(best.size())) {
            if (alive_count == 0) {
                best = chosen;
            } else {
                Vertex pivot = -1;
                for (Vertex v = 0; v < g.p(); ++v)
                    if (alive[static_cast<size_t>(v)] &&
                        (pivot < 0 ||
                         degree[static_cast<size_t>(v)] > degree[static_cast<size_t>(pivot)]))
                        pivot = v;
                {
                    std::vector<Vertex> branch_trail;
                    take(pivot, branch_trail);
                    search();
                    restore(branch_trail);
                    chosen.pop_back();
                }
                {
                    std::vector<Vertex> branch_trail;
                    remove(pivot, branch_trail);
                    search();
                    restore(branch_trail);
                }
            }
        }
        restore(trail);
        chosen.resize(chosen_mark);
    }
};

}  // namespace

IndependenceCertificate independence_number(const Graph& g) {
    MisSolver solver(g);
    solver.search();
    IndependenceCertificate cert;
    cert.witness = solver.best;
    std::sort(cert.witness.begin(), cert.witness.end());
    cert.alpha = static_cast<int>(cert.witness.size());
    return cert;
}

}  // namespace sgl
