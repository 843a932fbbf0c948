#pragma once

#include "fsm/workspace.hpp"

#include <string>
#include <vector>

namespace fsm {

struct Check {
    std::string name;
    bool pass = false;
    std::string detail; // first discrepancy, or a short note on success
};

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    double seconds = 0;
    double budget_seconds = 0;
    std::vector<Check> checks;
    std::vector<std::string> notes; // informational findings that do not affect pass/fail
};

struct VerifyOptions {
    int q_max = 8;
    int cap = 14;           // largest half-edge count enumerated by the map oracle
    int l_max = 6;          // largest symmetric-group degree for the Cayley comparison
    unsigned seed = 20240917;
};

constexpr int criterion_count = 11;

std::string criterion_title(int id);
double criterion_budget(int id);
// Runs one numbered acceptance criterion; the workspace is shared so that later criteria reuse caches.
CriterionResult run_criterion(int id, Workspace& ws, const VerifyOptions& opts);

// tables, bijections, closed-forms, oracle, hurwitz, properties, all
std::vector<int> suite_criteria(const std::string& suite);

} // namespace fsm
