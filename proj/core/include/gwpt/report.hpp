#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gwpt/series.hpp"

namespace gwpt {

enum class Verdict { pass, fail, vacuous };

std::string to_string(Verdict v);

struct CoefficientRow {
    std::string exponent;
    std::string lhs;
    std::string rhs;
    bool equal = true;
};

// One identity checked coefficientwise. Inputs and notes keep insertion order.
struct CheckRecord {
    std::string name;
    std::vector<std::pair<std::string, std::string>> inputs;
    std::string lhs_label = "lhs";
    std::string rhs_label = "rhs";
    std::vector<CoefficientRow> rows;
    std::vector<std::string> notes;
    Verdict verdict = Verdict::vacuous;

    bool passed() const { return verdict == Verdict::pass; }
};

// Compares two series on every exponent below `bound` (capped by both truncation orders).
// Vacuous when the window is empty or both sides vanish on it.
void compare_series(CheckRecord& rec, const TruncatedSeries& lhs, const TruncatedSeries& rhs, HalfInteger bound);

// Folds a sub-check into an aggregate verdict: any fail wins, then any vacuous.
Verdict combine(Verdict a, Verdict b);

} // namespace gwpt
