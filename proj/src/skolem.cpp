#include "sgl/skolem.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sgl/census.hpp"

namespace sgl {

std::string skolem_violation(const SkolemSequence& s) {
    if (s.n < 1 || s.k < 1) return "need n >= 1 and k >= 1";
    if (static_cast<int>(s.pairs.size()) != s.n) return "need exactly n pairs";
    std::vector<char> used(static_cast<size_t>(2 * s.n) + 1, 0);
    for (int i = 1; i <= s.n; ++i) {
        auto [a, b] = s.pairs[static_cast<size_t>(i - 1)];
        if (a - b != s.k + i - 1)
            return "pair " + std::to_string(i) + " has difference " + std::to_string(a - b) +
                   ", expected " + std::to_string(s.k + i - 1);
        for (Label x : {a, b}) {
            if (x < 1 || x > 2 * s.n)
                return "value " + std::to_string(x) + " outside [1, " + std::to_string(2 * s.n) +
                       "]";
            if (used[static_cast<size_t>(x)]) return "value " + std::to_string(x) + " repeated";
            used[static_cast<size_t>(x)] = 1;
        }
    }
    return "";
}

bool skolem_valid(const SkolemSequence& s) { return skolem_violation(s).empty(); }

namespace {

struct SkolemSolver {
    int n;
    Label k;
    bool count_all;
    bool parity_prune;
    std::vector<char> occupied;   // positions 1..2n
    std::vector<int> pair_at;     // difference index i (1-based) placed, by position
    std::vector<char> diff_used;  // by difference index 1..n
    int free_odd = 0;
    int odd_diffs_left = 0;
    SkolemSearchReport report;

    SkolemSolver(int n_, Label k_, bool count_all_, bool parity_prune_)
        : n(n_), k(k_), count_all(count_all_), parity_prune(parity_prune_) {
        occupied.assign(static_cast<size_t>(2 * n) + 1, 0);
        pair_at.assign(static_cast<size_t>(2 * n) + 1, 0);
        diff_used.assign(static_cast<size_t>(n) + 1, 0);
        free_odd = n;  // odd positions in [1, 2n]
        for (int i = 1; i <= n; ++i)
            if ((k + i - 1) % 2 != 0) ++odd_diffs_left;
    }

    void record_solution() {
        ++report.count;
        if (!report.sequence) {
            SkolemSequence s;
            s.k = k;
            s.n = n;
            s.pairs.assign(static_cast<size_t>(n), {0, 0});
            for (int pos = 1; pos <= 2 * n; ++pos) {
                int i = pair_at[static_cast<size_t>(pos)];
                if (i > 0) s.pairs[static_cast<size_t>(i - 1)] = {pos + (k + i - 1), pos};
            }
            report.sequence = std::move(s);
        }
    }

    // Returns false to stop (find-first satisfied).
    bool descend() {
        // Each odd difference consumes one odd position, each even difference
        // two or none, so free_odd - odd_diffs_left must stay even.
        if (parity_prune && (free_odd - odd_diffs_left) % 2 != 0) return true;
        int pos = 1;
        while (pos <= 2 * n && occupied[static_cast<size_t>(pos)]) ++pos;
        if (pos > 2 * n) {
            record_solution();
            return count_all;
        }
        for (int i = n; i >= 1; --i) {  // largest difference first: most constrained
            if (diff_used[static_cast<size_t>(i)]) continue;
            Label d = k + i - 1;
            long long partner = pos + d;
            if (partner > 2 * n) continue;
            if (occupied[static_cast<size_t>(partner)]) continue;
            ++report.nodes;
            occupied[static_cast<size_t>(pos)] = occupied[static_cast<size_t>(partner)] = 1;
            pair_at[static_cast<size_t>(pos)] = i;
            diff_used[static_cast<size_t>(i)] = 1;
            free_odd -= (pos % 2) + (partner % 2);
            odd_diffs_left -= d % 2;
            bool keep_going = descend();
            occupied[static_cast<size_t>(pos)] = occupied[static_cast<size_t>(partner)] = 0;
            pair_at[static_cast<size_t>(pos)] = 0;
            diff_used[static_cast<size_t>(i)] = 0;
            free_odd += (pos % 2) + (partner % 2);
            odd_diffs_left += d % 2;
            if (!keep_going) return false;
        }
        return true;
    }
};

}  // namespace

SkolemSearchReport skolem_search(int n, Label k, bool count_all, bool parity_prune) {
    if (n < 1 || k < 1) throw std::invalid_argument("skolem_search needs n, k >= 1");
    SkolemSolver solver(n, k, count_all, parity_prune);
    solver.descend();
    solver.report.exhausted = count_all || solver.report.count == 0;
    return solver.report;
}

std::optional<SkolemSequence> skolem_classic(int n) {
    SkolemSearchReport report = skolem_search(n, 1);
    return report.sequence;
}

SkolemSequence k_skolem_length_2k_minus_1(Label k) {
    if (k < 1) throw std::invalid_argument("need k >= 1");
    SkolemSequence s;
    s.k = k;
    s.n = static_cast<int>(2 * k - 1);
    for (Label i = 1; i <= k; ++i) s.pairs.push_back({2 * k - 2 + 2 * i, k - 1 + i});
    for (Label i = k + 1; i <= 2 * k - 1; ++i) s.pairs.push_back({2 * i - 1, i - k});
    return s;
}

FeasibilityVerdict k_skolem_feasible(int n, Label k) {
    if (n < 1 || k < 1) throw std::invalid_argument("k_skolem_feasible needs n, k >= 1");
    std::string params = "n=" + std::to_string(n) + " k=" + std::to_string(k);
    if ((static_cast<long long>(n) * (5LL * n + 2 * k + 1)) % 4 != 0)
        return feasibility_infeasible(
            "skolem-sum", "the pair total n(5n+2k+1)/4 must be an integer, forcing "
                          "n = 0,3 (mod 4) for even k and n = 0,1 (mod 4) for odd k",
            params);
    return feasibility_unknown(params);
}

namespace {

// Ad hoc 2-Skolem pairs for n = 4r-1: the difference-2 pair followed by the
// pairs for odd i in [5, 2r-1] in increasing i. The r = 10 row here replaces
// a published entry that fails the difference check; it was rederived by the
// pairing search (see two_skolem_adhoc_pairs).
const std::map<int, std::vector<std::pair<Label, Label>>> kTwoSkolemTable = {
    {2, {{10, 8}}},
    {3, {{14, 12}, {16, 10}}},
    {4, {{20, 18}, {16, 10}, {22, 14}}},
    {5, {{28, 26}, {24, 18}, {22, 14}, {20, 10}}},
    {6, {{32, 30}, {34, 28}, {26, 18}, {24, 14}, {22, 10}}},
    {7, {{36, 34}, {38, 32}, {26, 18}, {40, 30}, {22, 10}, {28, 14}}},
    {8, {{42, 40}, {38, 32}, {18, 10}, {44, 34}, {26, 14}, {36, 22}, {46, 30}}},
    {9, {{52, 50}, {48, 42}, {46, 38}, {44, 34}, {22, 10}, {40, 26}, {30, 14}, {36, 18}}},
    {10, {{42, 40}, {54, 48}, {18, 10}, {56, 46}, {26, 14}, {58, 44}, {38, 22}, {52, 34}, {50, 30}}},
    {11,
     {{64, 62}, {54, 48}, {58, 50}, {52, 42}, {30, 18}, {60, 46}, {26, 10}, {56, 38}, {34, 14},
      {44, 22}}},
};

// The difference-2 pair plus the pairs for odd i in [5, 2r-1]: tabulated for
// r <= 11, found by exhaustive pairing search for 12 <= r <= 21 (cached).
std::vector<std::pair<Label, Label>> two_skolem_adhoc_pairs(int r) {
    if (auto it = kTwoSkolemTable.find(r); it != kTwoSkolemTable.end()) return it->second;
    static std::map<int, std::vector<std::pair<Label, Label>>> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(r); it != cache.end()) return it->second;
    std::optional<PairingSolution> pairing = first_pairing(r);
    if (!pairing) throw std::runtime_error("no pairing found for r=" + std::to_string(r));
    // Order by difference: 2 first, then 6, 8, ..., 2r.
    std::vector<std::pair<Label, Label>> out = *pairing;
    std::sort(out.begin(), out.end(),
              [](const auto& x, const auto& y) { return x.first - x.second < y.first - y.second; });
    cache[r] = out;
    return out;
}

SkolemSequence two_skolem_4r_minus_1(int r) {
    SkolemSequence s;
    s.k = 2;
    s.n = 4 * r - 1;
    if (r == 1) {
        s.pairs = {{4, 2}, {6, 3}, {5, 1}};
        return s;
    }
    s.pairs.assign(static_cast<size_t>(s.n), {0, 0});
    auto set_pair = [&](int i, Label a, Label b) { s.pairs[static_cast<size_t>(i - 1)] = {a, b}; };
    for (int i = 2; i <= 4 && i <= s.n; ++i) set_pair(i, 2 * i, i - 1);
    for (int i = 6; i <= 2 * r - 2; i += 2) set_pair(i, 2 * i, i - 1);
    for (int i = 2 * r; i <= 4 * r - 1; ++i) set_pair(i, 10 * r - 2 - i, 10 * r - 3 - 2 * i);
    std::vector<std::pair<Label, Label>> adhoc = two_skolem_adhoc_pairs(r);
    set_pair(1, adhoc[0].first, adhoc[0].second);
    size_t next = 1;
    for (int i = 5; i <= 2 * r - 1; i += 2) {
        set_pair(i, adhoc[next].first, adhoc[next].second);
        ++next;
    }
    return s;
}

SkolemSequence two_skolem_4r(int r) {
    SkolemSequence base = two_skolem_4r_minus_1(r);
    SkolemSequence s;
    s.k = 2;
    s.n = 4 * r;
    for (int i = 1; i <= 4 * r - 1; ++i) {
        auto [a, b] = base.pairs[static_cast<size_t>(i - 1)];
        if (i >= 2 * r) s.pairs.push_back({a + 2, b + 2});
        else s.pairs.push_back({a, b});
    }
    s.pairs.push_back({6 * r, 2 * r - 1});
    return s;
}

}  // namespace

std::optional<SkolemSequence> two_skolem(int n) {
    if (n < 1) throw std::invalid_argument("two_skolem needs n >= 1");
    if (n > 84) throw std::out_of_range("two_skolem supports n <= 84");
    if (n % 4 == 1 || n % 4 == 2) return std::nullopt;
    SkolemSequence s = n % 4 == 3 ? two_skolem_4r_minus_1((n + 1) / 4) : two_skolem_4r(n / 4);
    if (std::string why = skolem_violation(s); !why.empty())
        throw std::runtime_error("two_skolem produced an invalid sequence for n=" +
                                 std::to_string(n) + ": " + why);
    return s;
}

Labeling skolem_to_nk2_labeling(const SkolemSequence& s) {
    if (std::string why = skolem_violation(s); !why.empty())
        throw std::invalid_argument("invalid sequence: " + why);
    Labeling lab;
    lab.k = s.k;
    Label shift = s.k + s.n - 1;
    for (int i = 1; i <= s.n; ++i) {
        auto [a, b] = s.pairs[static_cast<size_t>(i - 1)];
        lab.vertex_labels.push_back(b + shift);
        lab.vertex_labels.push_back(a + shift);
        lab.edge_labels.push_back(s.k + i - 1);
    }
    return lab;
}

SkolemSequence nk2_labeling_to_skolem(const Graph& g, const Labeling& lab) {
    if (g.q() * 2 != g.p()) throw std::invalid_argument("graph is not nK2");
    for (int i = 0; i < g.q(); ++i) {
        const Edge& e = g.edge(i);
        if (std::minmax(e.u, e.v) != std::minmax(2 * i, 2 * i + 1))
            throw std::invalid_argument("graph is not in nK2 component order");
    }
    VerifyResult check = verify_labeling(g, lab);
    if (!check.valid) throw std::invalid_argument("labeling is not valid: " + check.violations[0]);
    int n = g.q();
    if (!edge_labels_are_interval(lab, lab.k, lab.k + n - 1))
        throw std::invalid_argument("edge labels are not the smallest n labels [k, k+n-1]");
    Label shift = lab.k + n - 1;
    SkolemSequence s;
    s.k = lab.k;
    s.n = n;
    s.pairs.assign(static_cast<size_t>(n), {0, 0});
    for (int e = 0; e < n; ++e) {
        int i = static_cast<int>(lab.edge_labels[static_cast<size_t>(e)] - lab.k);  // 0-based
        Label x = lab.vertex_labels[static_cast<size_t>(2 * e)] - shift;
        Label y = lab.vertex_labels[static_cast<size_t>(2 * e + 1)] - shift;
        s.pairs[static_cast<size_t>(i)] = {std::max(x, y), std::min(x, y)};
    }
    if (std::string why = skolem_violation(s); !why.empty())
        throw std::invalid_argument("labeling does not convert to a valid sequence: " + why);
    return s;
}

long long nk2_recursive_size(Label k, int r) {
    if (k < 1 || r < 1) throw std::invalid_argument("need k, r >= 1");
    long long power = 1;
    for (int i = 0; i < r; ++i) power *= 3;
    return (2 * k - 1) * (power - 1) / 2;
}

SkolemSequence k_skolem_recursive(Label k, int r) {
    // Appending the closed-form (k+n)-sequence T of length m = 2(k+n)-1 to a
    // k-sequence S of length n gives the k-sequence of length n+m whose first
    // n pairs are S shifted by 2m and whose last m pairs are T unchanged.
    SkolemSequence s = k_skolem_length_2k_minus_1(k);
    for (int step = 2; step <= r; ++step) {
        Label next_offset = k + s.n;
        SkolemSequence tail = k_skolem_length_2k_minus_1(next_offset);
        Label shift = 2 * tail.n;
        SkolemSequence merged;
        merged.k = k;
        merged.n = s.n + tail.n;
        for (auto [a, b] : s.pairs) merged.pairs.push_back({a + shift, b + shift});
        for (auto [a, b] : tail.pairs) merged.pairs.push_back({a, b});
        s = std::move(merged);
    }
    if (std::string why = skolem_violation(s); !why.empty())
        throw std::runtime_error("recursive sequence invalid: " + why);
    return s;
}

Labeling nk2_recursive_family(Label k, int r) {
    return skolem_to_nk2_labeling(k_skolem_recursive(k, r));
}

}  // namespace sgl
