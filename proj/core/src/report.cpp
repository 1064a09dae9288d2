#include "gwpt/report.hpp"

#include <set>

namespace gwpt {

std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass:
        return "pass";
    case Verdict::fail:
        return "fail";
    case Verdict::vacuous:
        return "vacuous";
    }
    return "?";
}

Verdict combine(Verdict a, Verdict b)
{
    if (a == Verdict::fail || b == Verdict::fail) {
        return Verdict::fail;
    }
    if (a == Verdict::vacuous || b == Verdict::vacuous) {
        return Verdict::vacuous;
    }
    return Verdict::pass;
}

void compare_series(CheckRecord& rec, const TruncatedSeries& lhs, const TruncatedSeries& rhs, HalfInteger bound)
{
    HalfInteger window = bound;
    if (lhs.order() < window || rhs.order() < window) {
        window = std::min(lhs.order(), rhs.order());
        rec.notes.push_back("inputs only determine coefficients below " + std::string(to_string(lhs.variable())) +
                            "^" + window.str() + "; compared there");
    }
    std::set<std::int64_t> exps;
    for (const auto& [k, c] : lhs.terms()) {
        if (HalfInteger::from_twice(k) < window) {
            exps.insert(k);
        }
    }
    for (const auto& [k, c] : rhs.terms()) {
        if (HalfInteger::from_twice(k) < window) {
            exps.insert(k);
        }
    }
    rec.rows.clear();
    bool all_equal = true;
    for (auto k : exps) {
        const HalfInteger e = HalfInteger::from_twice(k);
        CoefficientRow row;
        row.exponent = e.str();
        const auto a = lhs.coefficient(e);
        const auto b = rhs.coefficient(e);
        row.lhs = a.str();
        row.rhs = b.str();
        row.equal = (a == b);
        all_equal = all_equal && row.equal;
        rec.rows.push_back(std::move(row));
    }
    if (lhs.variable() != rhs.variable()) {
        rec.notes.push_back("sides are series in different variables");
        rec.verdict = Verdict::fail;
    } else if (!all_equal) {
        rec.verdict = Verdict::fail;
    } else if (exps.empty()) {
        rec.notes.push_back("no coefficient below " + std::string(to_string(lhs.variable())) + "^" + window.str() +
                            " on either side; nothing was compared");
        rec.verdict = Verdict::vacuous;
    } else {
        rec.verdict = Verdict::pass;
    }
}

} // namespace gwpt
