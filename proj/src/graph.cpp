#include "sgl/graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>
#include <string>

namespace sgl {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

Graph::Graph(int vertex_count, std::vector<Edge> edges) : p_(vertex_count), edges_(std::move(edges)) {
    if (p_ <= 0) fail("graph needs at least one vertex");
    if (edges_.empty()) fail("graph needs at least one edge");
    adj_.assign(static_cast<size_t>(p_), {});
    std::set<std::pair<Vertex, Vertex>> seen;
    for (size_t e = 0; e < edges_.size(); ++e) {
        auto [u, v] = edges_[e];
        if (u < 0 || u >= p_ || v < 0 || v >= p_) fail("edge endpoint out of range");
        if (u == v) fail("loops are not allowed");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) fail("duplicate edge");
        adj_[static_cast<size_t>(u)].push_back({v, static_cast<int>(e)});
        adj_[static_cast<size_t>(v)].push_back({u, static_cast<int>(e)});
    }
    for (Vertex v = 0; v < p_; ++v)
        if (adj_[static_cast<size_t>(v)].empty()) fail("isolated vertex " + std::to_string(v));

    component_of_.assign(static_cast<size_t>(p_), -1);
    component_count_ = 0;
    std::vector<Vertex> stack;
    for (Vertex s = 0; s < p_; ++s) {
        if (component_of_[static_cast<size_t>(s)] >= 0) continue;
        component_of_[static_cast<size_t>(s)] = component_count_;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            for (auto [w, e] : adj_[static_cast<size_t>(v)]) {
                (void)e;
                if (component_of_[static_cast<size_t>(w)] < 0) {
                    component_of_[static_cast<size_t>(w)] = component_count_;
                    stack.push_back(w);
                }
            }
        }
        ++component_count_;
    }
}

std::vector<std::vector<Vertex>> Graph::components() const {
    std::vector<std::vector<Vertex>> out(static_cast<size_t>(component_count_));
    for (Vertex v = 0; v < p_; ++v) out[static_cast<size_t>(component_of_[static_cast<size_t>(v)])].push_back(v);
    return out;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    for (auto [w, e] : adj_[static_cast<size_t>(u)]) {
        (void)e;
        if (w == v) return true;
    }
    return false;
}

Graph nk2(int n) {
    if (n < 1) fail("nK2 needs n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({2 * i, 2 * i + 1});
    return Graph(2 * n, std::move(edges));
}

Graph path(int n) {
    if (n < 2) fail("path needs n >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return Graph(n, std::move(edges));
}

Graph cycle(int n) {
    if (n < 3) fail("cycle needs n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    return Graph(n, std::move(edges));
}

Graph star(int q) {
    if (q < 1) fail("star needs q >= 1");
    std::vector<Edge> edges;
    for (int i = 1; i <= q; ++i) edges.push_back({0, i});
    return Graph(q + 1, std::move(edges));
}

Graph complete_bipartite(int m, int n) {
    if (m < 1 || n < 1) fail("complete bipartite needs m, n >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) edges.push_back({i, m + j});
    return Graph(m + n, std::move(edges));
}

Graph near_complete(int r) {
    if (r < 2) fail("near_complete needs r >= 2");
    int p = r + 2;
    std::vector<Edge> edges;
    for (int i = 0; i < p; ++i)
        for (int j = i + 1; j < p; ++j)
            if (!(i == r && j == r + 1)) edges.push_back({i, j});
    return Graph(p, std::move(edges));
}

Graph cycles(int count, int len) {
    if (count < 1) fail("cycles needs count >= 1");
    if (len < 3) fail("cycles needs len >= 3");
    std::vector<Edge> edges;
    for (int c = 0; c < count; ++c) {
        int base = c * len;
        for (int i = 0; i < len; ++i) edges.push_back({base + i, base + (i + 1) % len});
    }
    return Graph(count * len, std::move(edges));
}

Graph cycle_plus_path(int n, int m) {
    if (n < 3) fail("cycle_plus_path needs n >= 3");
    if (m < 2) fail("cycle_plus_path needs m >= 2");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
    for (int i = 0; i + 1 < m; ++i) edges.push_back({n + i, n + i + 1});
    return Graph(n + m, std::move(edges));
}

Graph two_paths(int n, int r) {
    if (n < 2) fail("two_paths needs n >= 2");
    if (r < 1) fail("two_paths needs r >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n + r; ++i) edges.push_back({i, i + 1});
    for (int i = 0; i + 1 < n; ++i) edges.push_back({n + r + i, n + r + i + 1});
    return Graph(2 * n + r, std::move(edges));
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    if (parts.empty()) fail("disjoint_union needs at least one part");
    std::vector<Edge> edges;
    int offset = 0;
    for (const Graph& g : parts) {
        for (const Edge& e : g.edges()) edges.push_back({e.u + offset, e.v + offset});
        offset += g.p();
    }
    return Graph(offset, std::move(edges));
}

Graph make_family(const std::string& name, const std::vector<long long>& params) {
    auto need = [&](size_t count) {
        if (params.size() != count)
            fail("family " + name + " expects " + std::to_string(count) + " parameter(s)");
    };
    auto arg = [&](size_t i) { return static_cast<int>(params[i]); };
    if (name == "nK2") {
        need(1);
        return nk2(arg(0));
    }
    if (name == "path") {
        need(1);
        return path(arg(0));
    }
    if (name == "cycle") {
        need(1);
        return cycle(arg(0));
    }
    if (name == "star") {
        need(1);
        return star(arg(0));
    }
    if (name == "complete_bipartite") {
        need(2);
        return complete_bipartite(arg(0), arg(1));
    }
    if (name == "near_complete") {
        need(1);
        return near_complete(arg(0));
    }
    if (name == "cycles") {
        need(2);
        return cycles(arg(0), arg(1));
    }
    if (name == "cycle_plus_path") {
        need(2);
        return cycle_plus_path(arg(0), arg(1));
    }
    if (name == "two_paths") {
        need(2);
        return two_paths(arg(0), arg(1));
    }
    fail("unknown family: " + name);
}

namespace {

bool parse_int(const std::string& s, size_t& pos, int& out) {
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) return false;
    out = std::stoi(s.substr(start, pos - start));
    return true;
}

// One summand of a compact spec: "5K2", "C10", "P4", "2C3", "K3,4", "K5-e".
Graph parse_term(const std::string& term) {
    size_t pos = 0;
    int count = 1;
    bool have_count = parse_int(term, pos, count);
    if (pos >= term.size()) fail("bad graph spec: " + term);
    char kind = term[pos++];
    if (kind == 'K' && have_count) {
        // "<n>K2"
        int two = 0;
        if (!parse_int(term, pos, two) || two != 2 || pos != term.size())
            fail("bad graph spec: " + term);
        return nk2(count);
    }
    if (kind == 'C') {
        int len = 0;
        if (!parse_int(term, pos, len) || pos != term.size()) fail("bad graph spec: " + term);
        return have_count ? cycles(count, len) : cycle(len);
    }
    if (kind == 'P') {
        int n = 0;
        if (!parse_int(term, pos, n) || pos != term.size()) fail("bad graph spec: " + term);
        if (have_count) fail("bad graph spec: " + term);
        return path(n);
    }
    if (kind == 'K' && !have_count) {
        int m = 0;
        if (!parse_int(term, pos, m)) fail("bad graph spec: " + term);
        if (pos < term.size() && term[pos] == ',') {
            ++pos;
            int n = 0;
            if (!parse_int(term, pos, n) || pos != term.size()) fail("bad graph spec: " + term);
            return complete_bipartite(m, n);
        }
        if (pos + 2 == term.size() && term[pos] == '-' && term[pos + 1] == 'e') {
            // "K<n>-e": complete graph of order n minus one edge.
            return near_complete(m - 2);
        }
        fail("bad graph spec: " + term);
    }
    fail("bad graph spec: " + term);
}

}  // namespace

Graph parse_graph_spec(const std::string& spec) {
    std::vector<Graph> parts;
    size_t start = 0;
    while (start <= spec.size()) {
        size_t plus = spec.find('+', start);
        std::string term =
            plus == std::string::npos ? spec.substr(start) : spec.substr(start, plus - start);
        if (term.empty()) fail("bad graph spec: " + spec);
        parts.push_back(parse_term(term));
        if (plus == std::string::npos) break;
        start = plus + 1;
    }
    if (parts.size() == 1) return parts[0];
    return disjoint_union(parts);
}

}  // namespace sgl
