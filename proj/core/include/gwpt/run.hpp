#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gwpt/scenario.hpp"

namespace gwpt {

struct RunOptions {
    std::optional<int> q_order;
    std::optional<int> u_order;
    std::optional<int> degree_bound;
    // Names of checks to run; empty runs all of them.
    std::vector<std::string> only;
};

struct CheckOutcome {
    std::string name;
    std::string kind;
    std::vector<CheckRecord> records;
    // fail if any record fails, else pass if any passes, else vacuous
    Verdict verdict = Verdict::vacuous;
};

struct RunReport {
    std::string scenario;
    // FNV-1a of the canonical scenario text
    std::string digest;
    Orders orders;
    std::vector<CheckOutcome> checks;
    // fail beats vacuous beats pass
    Verdict verdict = Verdict::vacuous;
};

Orders effective_orders(const Scenario& s, const RunOptions& o);

// Runs one check against a scenario whose orders are already final.
CheckOutcome run_check(const Scenario& s, const CheckSpec& c);

// Every declared check in declaration order. Throws ScenarioError on an unknown --check name.
RunReport run_all(const Scenario& s, const RunOptions& o = {});

// Deterministic JSON document.
std::string render_report(const RunReport& r);

// One line per check plus the overall verdict.
std::string summary(const RunReport& r);

// 0 when everything passed, 1 otherwise.
int exit_code(const RunReport& r);

} // namespace gwpt
