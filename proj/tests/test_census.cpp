#include <doctest.h>

#include <algorithm>
#include <functional>

#include "sgl/census.hpp"

using namespace sgl;

namespace {

// Oracle: enumerate every perfect matching of the ground set and keep those
// whose difference multiset equals the target. Independent of the census
// search order and pruning.
std::uint64_t matching_oracle(const PairingProblem& problem) {
    std::vector<Label> ground = problem.ground_set;
    std::vector<Label> target = problem.target_differences;
    std::sort(target.begin(), target.end());
    std::vector<char> used(ground.size(), 0);
    std::vector<Label> diffs;
    std::uint64_t hits = 0;
    std::function<void()> recurse = [&]() {
        size_t lo = 0;
        while (lo < ground.size() && used[lo]) ++lo;
        if (lo == ground.size()) {
            std::vector<Label> sorted = diffs;
            std::sort(sorted.begin(), sorted.end());
            if (sorted == target) ++hits;
            return;
        }
        used[lo] = 1;
        for (size_t hi = lo + 1; hi < ground.size(); ++hi) {
            if (used[hi]) continue;
            used[hi] = 1;
            diffs.push_back(ground[hi] - ground[lo]);
            recurse();
            diffs.pop_back();
            used[hi] = 0;
        }
        used[lo] = 0;
    };
    recurse();
    return hits;
}

}  // namespace

TEST_CASE("instance shape") {
    PairingProblem p = PairingProblem::for_r(4);
    CHECK(p.ground_set == std::vector<Label>{10, 14, 16, 18, 20, 22});
    CHECK(p.target_differences == std::vector<Label>{2, 6, 8});
    for (int r = 4; r <= 21; ++r) {
        PairingProblem q = PairingProblem::for_r(r);
        CHECK(q.ground_set.size() == static_cast<size_t>(2 * r - 2));
        CHECK(q.ground_set.size() == 2 * q.target_differences.size());
    }
}

TEST_CASE("census agrees with the matching oracle for r <= 8") {
    for (int r = 4; r <= 8; ++r)
        CHECK(pairing_census(r).count == matching_oracle(PairingProblem::for_r(r)));
}

TEST_CASE("census r=11 gives 189") { CHECK(pairing_census(11).count == 189); }

TEST_CASE("the published r=4 pairing appears") {
    CensusReport report = pairing_census(4, 16);
    PairingSolution expected = {{16, 10}, {20, 18}, {22, 14}};
    std::sort(expected.begin(), expected.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    CHECK(std::any_of(report.witnesses.begin(), report.witnesses.end(),
                      [&](const PairingSolution& w) { return w == expected; }));
}

TEST_CASE("the corrected r=10 row appears among the census solutions") {
    // The printed row contains (44,48); the corrected pairing replaces it
    // with (54,48).
    PairingSolution corrected = {{42, 40}, {54, 48}, {18, 10}, {56, 46}, {26, 14},
                                 {58, 44}, {38, 22}, {52, 34}, {50, 30}};
    std::sort(corrected.begin(), corrected.end(),
              [](const auto& a, const auto& b) { return a.second < b.second; });
    CensusReport report = pairing_census(10, 1 << 20);
    CHECK(std::any_of(report.witnesses.begin(), report.witnesses.end(),
                      [&](const PairingSolution& w) { return w == corrected; }));
}

TEST_CASE("multi-threaded census matches single-threaded") {
    for (int r : {8, 11, 12}) {
        CensusReport solo = pairing_census(r);
        CensusReport multi = pairing_census(r, 0, 4);
        CHECK(solo.count == multi.count);
        CHECK(solo.nodes == multi.nodes);
    }
}

TEST_CASE("every census witness satisfies the instance") {
    for (int r : {4, 5, 6, 7, 8, 11}) {
        PairingProblem problem = PairingProblem::for_r(r);
        CensusReport report = pairing_census(r, 1 << 20);
        CHECK(report.witnesses.size() == report.count);
        for (const PairingSolution& sol : report.witnesses) {
            std::vector<Label> seen, diffs;
            for (auto [hi, lo] : sol) {
                seen.push_back(hi);
                seen.push_back(lo);
                diffs.push_back(hi - lo);
            }
            std::sort(seen.begin(), seen.end());
            std::sort(diffs.begin(), diffs.end());
            CHECK(seen == problem.ground_set);
            CHECK(diffs == problem.target_differences);
        }
    }
}

TEST_CASE("first_pairing succeeds across the derived range") {
    for (int r = 12; r <= 21; ++r) {
        auto w = first_pairing(r);
        REQUIRE(w.has_value());
    }
}
