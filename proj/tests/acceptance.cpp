// Acceptance suite: one scripted target per criterion, one pass/fail line
// each. Exits nonzero if anything fails. Pass --long to include the
// census-r20 bound check.
#include <cstring>
#include <iostream>
#include <string>

#include "sgl/reproduce.hpp"

int main(int argc, char** argv) {
    bool include_long = false;
    int threads = 4;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long") == 0) include_long = true;
        if (std::strncmp(argv[i], "--threads=", 10) == 0) threads = std::atoi(argv[i] + 10);
    }

    struct Row {
        const char* criterion;
        const char* target;
    };
    const Row rows[] = {
        {"1 fixture catalog verifies", "fixtures"},
        {"2 closed-form sequences k=1..100", "skolem-closed-form"},
        {"3 sequence existence boundary n<=24", "skolem-boundary"},
        {"4 pairing census (189 at r=11; oracle r<=8)", "census"},
        {"5a nK2 feasible offset sets", "nk2-iff-small"},
        {"5b triangle-family nonexistence", "c3-nonexistence"},
        {"5c complete-bipartite nonexistence", "kmn-nonexistence"},
        {"6 family sweeps to 50", "family-sweeps"},
        {"7 conversion triangle round trip", "transform-roundtrip"},
        {"8 composition examples", "composition"},
        {"9 recursive family k<=4 r<=4", "recursion"},
        {"10 filter soundness and prune equivalence", "filter-soundness"},
    };

    int failures = 0;
    for (const Row& row : rows) {
        sgl::CriterionResult result = sgl::run_reproduce_target(row.target, threads);
        std::cout << (result.pass ? "PASS" : "FAIL") << "  criterion " << row.criterion;
        if (!result.detail.empty()) std::cout << "  [" << result.detail << "]";
        std::cout << std::endl;
        if (!result.pass) ++failures;
    }
    if (include_long) {
        sgl::CriterionResult result = sgl::run_reproduce_target("census-r20", threads);
        std::cout << (result.pass ? "PASS" : "FAIL") << "  criterion 4-long census r=20 bound";
        if (!result.detail.empty()) std::cout << "  [" << result.detail << "]";
        std::cout << std::endl;
        if (!result.pass) ++failures;
    }
    if (failures == 0) {
        std::cout << "acceptance: all criteria pass" << std::endl;
        return 0;
    }
    std::cout << "acceptance: " << failures << " criterion(s) failing" << std::endl;
    return 1;
}
