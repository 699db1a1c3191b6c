#include "sgl/census.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <stdexcept>
#include <thread>

namespace sgl {

PairingProblem PairingProblem::for_r(int r) {
    if (r < 4) throw std::invalid_argument("pairing problem needs r >= 4");
    PairingProblem problem;
    problem.r = r;
    for (int l = 2; l <= r - 2; ++l) problem.ground_set.push_back(4LL * l + 2);
    for (int l = 2 * r - 1; l <= 3 * r - 1; ++l) problem.ground_set.push_back(2LL * l);
    std::sort(problem.ground_set.begin(), problem.ground_set.end());
    problem.target_differences.push_back(2);
    for (int l = 3; l <= r; ++l) problem.target_differences.push_back(2LL * l);
    return problem;
}

namespace {

struct CensusSolver {
    const std::vector<Label>& ground;
    std::map<Label, int> diff_remaining;  // multiset of unused differences
    std::vector<char> used;               // by ground index
    std::vector<std::pair<Label, Label>> stack;
    int witness_cap;
    bool find_first_only;
    CensusReport report;
    bool stopped = false;

    CensusSolver(const PairingProblem& problem, int cap, bool first_only)
        : ground(problem.ground_set), witness_cap(cap), find_first_only(first_only) {
        for (Label d : problem.target_differences) ++diff_remaining[d];
        used.assign(ground.size(), 0);
    }

    void record() {
        ++report.count;
        int cap = find_first_only ? std::max(1, witness_cap) : witness_cap;
        if (static_cast<int>(report.witnesses.size()) < cap) {
            PairingSolution sol = stack;
            std::sort(sol.begin(), sol.end(),
                      [](const auto& x, const auto& y) { return x.second < y.second; });
            report.witnesses.push_back(std::move(sol));
        }
        if (find_first_only) stopped = true;
    }

    void descend() {
        if (stopped) return;
        size_t lo = 0;
        while (lo < ground.size() && used[lo]) ++lo;
        if (lo == ground.size()) {
            record();
            return;
        }
        used[lo] = 1;
        for (size_t hi = lo + 1; hi < ground.size(); ++hi) {
            if (used[hi]) continue;
            Label d = ground[hi] - ground[lo];
            auto it = diff_remaining.find(d);
            if (it == diff_remaining.end() || it->second == 0) continue;
            ++report.nodes;
            --it->second;
            used[hi] = 1;
            stack.push_back({ground[hi], ground[lo]});
            descend();
            stack.pop_back();
            used[hi] = 0;
            ++it->second;
            if (stopped) break;
        }
        used[lo] = 0;
    }
};

}  // namespace

CensusReport pairing_census_instance(const PairingProblem& problem, int witness_cap, int threads,
                                     bool find_first_only) {
    if (problem.ground_set.size() % 2 != 0 ||
        problem.ground_set.size() != 2 * problem.target_differences.size())
        throw std::invalid_argument("pairing instance is malformed");

    if (threads <= 1 || find_first_only) {
        CensusSolver solver(problem, witness_cap, find_first_only);
        solver.descend();
        solver.report.exhausted = !find_first_only || solver.report.count == 0;
        return solver.report;
    }

    // Split on the partner choice for the smallest ground element; each task
    // keeps its own state, counts merge by summation in task order.
    std::vector<size_t> partners;
    for (size_t hi = 1; hi < problem.ground_set.size(); ++hi) partners.push_back(hi);
    std::vector<CensusReport> partials(partners.size());
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        while (true) {
            size_t task = next.fetch_add(1);
            if (task >= partners.size()) return;
            CensusSolver solver(problem, witness_cap, false);
            size_t lo = 0, hi = partners[task];
            Label d = solver.ground[hi] - solver.ground[lo];
            auto it = solver.diff_remaining.find(d);
            if (it == solver.diff_remaining.end() || it->second == 0) continue;
            ++solver.report.nodes;
            --it->second;
            solver.used[lo] = solver.used[hi] = 1;
            solver.stack.push_back({solver.ground[hi], solver.ground[lo]});
            solver.descend();
            partials[task] = std::move(solver.report);
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    CensusReport merged;
    merged.exhausted = true;
    for (CensusReport& part : partials) {
        merged.count += part.count;
        merged.nodes += part.nodes;
        for (PairingSolution& w : part.witnesses)
            if (static_cast<int>(merged.witnesses.size()) < witness_cap)
                merged.witnesses.push_back(std::move(w));
    }
    return merged;
}

CensusReport pairing_census(int r, int witness_cap, int threads) {
    return pairing_census_instance(PairingProblem::for_r(r), witness_cap, threads);
}

std::optional<PairingSolution> first_pairing(int r) {
    CensusReport report = pairing_census_instance(PairingProblem::for_r(r), 1, 1, true);
    if (report.witnesses.empty()) return std::nullopt;
    return report.witnesses.front();
}

}  // namespace sgl
