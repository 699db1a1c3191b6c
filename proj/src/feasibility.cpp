#include "sgl/feasibility.hpp"

#include <algorithm>
#include <stdexcept>

#include "sgl/independence.hpp"

namespace sgl {

FeasibilityVerdict feasibility_unknown(std::string parameters) {
    FeasibilityVerdict v;
    v.status = Feasibility::Unknown;
    v.parameters = std::move(parameters);
    return v;
}

FeasibilityVerdict feasibility_infeasible(std::string rule_id, std::string citation,
                                          std::string parameters) {
    FeasibilityVerdict v;
    v.status = Feasibility::Infeasible;
    v.rule_id = std::move(rule_id);
    v.citation = std::move(citation);
    v.parameters = std::move(parameters);
    return v;
}

FeasibilityVerdict check_k_range(const Graph& g, Label k) {
    std::string params = "p=" + std::to_string(g.p()) + " q=" + std::to_string(g.q()) +
                         " k=" + std::to_string(k);
    if (k < 1)
        return feasibility_infeasible("k-range", "the offset k must satisfy 1 <= k", params);
    IndependenceCertificate cert = independence_number(g);
    if (k > cert.alpha)
        return feasibility_infeasible(
            "k-range", "k exceeds the independence number alpha = " + std::to_string(cert.alpha),
            params);
    return feasibility_unknown(params);
}

FeasibilityVerdict check_nk2(int n, Label k) {
    if (n < 1 || k < 1) throw std::invalid_argument("check_nk2 needs n, k >= 1");
    std::string params = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    long long sum = 3LL * n * (2 * k + 3LL * n - 1) / 2;  // total of all labels
    if (sum % 2 != 0)
        return feasibility_infeasible("nk2-label-sum",
                                      "the label total 3n(2k+3n-1)/2 must be even", params);
    if (n < 2 * k - 1)
        return feasibility_infeasible("nk2-size", "nK2 needs n >= 2k-1", params);
    if (n % 4 == 2)
        return feasibility_infeasible("nk2-residue",
                                      "nK2 with n = 2 (mod 4) has no such labeling for any k",
                                      params);
    if (n % 4 == 1 && k % 2 == 0)
        return feasibility_infeasible("nk2-residue",
                                      "nK2 with n = 1 (mod 4) requires odd k", params);
    if (n % 4 == 3 && k % 2 == 1)
        return feasibility_infeasible("nk2-residue",
                                      "nK2 with n = 3 (mod 4) requires even k", params);
    if (k == n && n >= 2)
        return feasibility_infeasible("nk2-offset-n", "nK2 is n-super graceful only for n = 1",
                                      params);
    return feasibility_unknown(params);
}

FeasibilityVerdict check_even_edge_nk2(int n, Label k) {
    if (n < 1 || k < 1) throw std::invalid_argument("check_even_edge_nk2 needs n, k >= 1");
    std::string params = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    bool ok = (n % 4 == 3 && k % 2 == 0) || (n % 4 == 0) || (n % 4 == 1 && k % 2 == 1);
    if (!ok)
        return feasibility_infeasible(
            "nk2-even-edges",
            "all-even-edge nK2 needs n = 3 (mod 4) with even k, n = 0 (mod 4), "
            "or n = 1 (mod 4) with odd k",
            params);
    return feasibility_unknown(params);
}

FeasibilityVerdict check_all_odd_vertices(const Graph& g, Label k) {
    std::string params = "p=" + std::to_string(g.p()) + " q=" + std::to_string(g.q()) +
                         " k=" + std::to_string(k);
    if (g.p() != g.q() + 1 || k != 1)
        return feasibility_infeasible(
            "odd-vertices", "all-odd vertex labels force a (q+1,q)-graph with k = 1", params);
    return feasibility_unknown(params);
}

bool is_star(const Graph& g) {
    if (g.p() != g.q() + 1) return false;
    int centers = 0;
    for (Vertex v = 0; v < g.p(); ++v) {
        if (g.degree(v) == g.q()) ++centers;
        else if (g.degree(v) != 1) return false;
    }
    return g.q() == 1 ? centers == 2 : centers == 1;
}

FeasibilityVerdict check_all_odd_edges(const Graph& g, Label k) {
    std::string params = "p=" + std::to_string(g.p()) + " q=" + std::to_string(g.q()) +
                         " k=" + std::to_string(k);
    if (!is_star(g) || k != 1)
        return feasibility_infeasible(
            "odd-edges", "all-odd edge labels force a star K(1,q) with k = 1", params);
    return feasibility_unknown(params);
}

std::variant<ParityProfile, FeasibilityVerdict> kmn_parity_profile(int m, int n, Label k) {
    if (!(n >= m && m >= 2)) throw std::invalid_argument("kmn_parity_profile needs n >= m >= 2");
    if (k < 1) throw std::invalid_argument("kmn_parity_profile needs k >= 1");
    std::string params =
        "m=" + std::to_string(m) + " n=" + std::to_string(n) + " k=" + std::to_string(k);

    // a even labels among the m-side, b among the n-side; the identity
    // (m-2a-1)(n-2b-1) = c must hold with c = 1 (equal parities of m, n... both
    // even), 0 (odd k, p+q odd) or 2 (even k, p+q odd).
    std::vector<std::pair<int, int>> admissible;
    auto push_if_valid = [&](long long a2, long long b2) {
        // a2, b2 are doubled candidates; keep integral, in-range pairs.
        if (a2 % 2 != 0 || b2 % 2 != 0) return;
        long long a = a2 / 2, b = b2 / 2;
        if (a < 0 || a > m || b < 0 || b > n) return;
        auto ab = std::make_pair(static_cast<int>(a), static_cast<int>(b));
        if (std::find(admissible.begin(), admissible.end(), ab) == admissible.end())
            admissible.push_back(ab);
    };

    bool m_even = m % 2 == 0, n_even = n % 2 == 0;
    if (m_even && n_even) {
        push_if_valid(m, n);
        push_if_valid(m - 2, n - 2);
    } else if (!m_even && !n_even) {
        if (k % 2 == 1) push_if_valid(m - 1, n - 1);
        // even k needs (m-2a-1)(n-2b-1) = 2 with both factors even: impossible
    } else {
        if (k % 2 == 1) {
            // one factor must vanish; only the odd side admits that
            if (!m_even)
                for (int b = 0; b <= n; ++b) push_if_valid(m - 1, 2LL * b);
            else
                for (int a = 0; a <= m; ++a) push_if_valid(2LL * a, n - 1);
        } else {
            push_if_valid(m - 2, n - 3);
            push_if_valid(m - 3, n - 2);
            push_if_valid(m, n + 1);
            push_if_valid(m + 1, n);
        }
    }

    if (admissible.empty())
        return feasibility_infeasible(
            "kmn-parity", "no split of even labels across the partite sets fits K(" +
                              std::to_string(m) + "," + std::to_string(n) + ") at this k",
            params);
    if (m == 2 && k != 1 && k != 2 && k != n)
        return feasibility_infeasible(
            "k2n-offsets", "K(2,n) is k-super graceful only for k in {1, 2, n}", params);

    ParityProfile profile;
    profile.m = m;
    profile.n = n;
    profile.k = k;
    profile.admissible_ab = std::move(admissible);
    return profile;
}

FeasibilityVerdict c3_edge_sum_filter(const Graph& g,
                                      const std::vector<std::optional<Label>>& edge_labels) {
    if (static_cast<int>(edge_labels.size()) != g.q())
        throw std::invalid_argument("need one (optional) label per edge");
    std::string params = "p=" + std::to_string(g.p()) + " q=" + std::to_string(g.q());
    // For each edge, scan common neighbors of its endpoints.
    for (int e = 0; e < g.q(); ++e) {
        if (!edge_labels[static_cast<size_t>(e)]) continue;
        auto [u, v] = g.edge(e);
        for (auto [w, eu] : g.neighbors(u)) {
            if (w == v || !edge_labels[static_cast<size_t>(eu)]) continue;
            for (auto [x, ev] : g.neighbors(v)) {
                if (x != w || !edge_labels[static_cast<size_t>(ev)]) continue;
                if (eu < e || ev < e) continue;  // each triangle once
                Label a = *edge_labels[static_cast<size_t>(e)];
                Label b = *edge_labels[static_cast<size_t>(eu)];
                Label c = *edge_labels[static_cast<size_t>(ev)];
                Label lo = std::min({a, b, c}), hi = std::max({a, b, c});
                Label mid = a + b + c - lo - hi;
                if (lo + mid != hi)
                    return feasibility_infeasible(
                        "c3-edge-sum",
                        "in a triangle the two smaller edge labels must sum to the third",
                        params + " triangle labels " + std::to_string(a) + "," +
                            std::to_string(b) + "," + std::to_string(c));
            }
        }
    }
    return feasibility_unknown(params);
}

}  // namespace sgl
