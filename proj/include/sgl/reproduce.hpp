#pragma once

#include <string>
#include <vector>

namespace sgl {

struct CriterionResult {
    std::string id;
    bool pass = false;
    bool inconclusive = false;  // a search hit its budget
    std::string detail;         // expected vs observed
};

/// Scripted reproduction targets, one per acceptance check. "census-r20" is
/// long-running and excluded from "all".
std::vector<std::string> reproduce_targets();

CriterionResult run_reproduce_target(const std::string& id, int threads = 1);

/// Every target except census-r20.
std::vector<CriterionResult> run_all_reproduce_targets(int threads = 1);

}  // namespace sgl
