#include "gwpt/run.hpp"

#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "gwpt/error.hpp"
#include "gwpt/local_models.hpp"

namespace gwpt {

using ojson = nlohmann::ordered_json;

namespace {

std::vector<EffectiveClass> or_all(const std::vector<EffectiveClass>& given, const CurveClassLattice& l, int bound)
{
    return given.empty() ? l.classes_up_to(bound) : given;
}

void take(CheckOutcome& out, const TransitionReport& r)
{
    for (const auto& rec : r.records) {
        out.records.push_back(rec);
    }
}

void take(CheckOutcome& out, CheckRecord r) { out.records.push_back(std::move(r)); }

std::string bar_input_str(const BarInput& in)
{
    std::string s;
    for (std::size_t j = 0; j < in.alpha.size(); ++j) {
        s += (j ? " " : "") + std::string("tau_") + std::to_string(in.alpha[j] - 1) + "(" + in.gammas[j].label + ")";
    }
    return s;
}

std::vector<std::string> printed(const std::vector<BarTerm>& ts, const BarInput& in, const ChernSubstitution& c)
{
    std::vector<std::string> out;
    for (const auto& t : ts) {
        out.push_back(str(t, in, c));
    }
    return out;
}

// Surviving splittings must carry the zero class on every component but M_0.
CheckRecord trivial_splittings(const DegenerationScenario& d, const EffectiveClass& total, Side side,
                               const InsertionList& ins)
{
    CheckRecord rec;
    rec.name = "trivial-splittings-" + to_string(side);
    rec.inputs = {{"degeneration", d.name}, {"class", total.str()}, {"insertions", insertion_key(ins)}};
    rec.lhs_label = "filter decision";
    rec.rhs_label = "trivial on the side components";
    const auto r = enumerate_splittings(d, total, side, ins);
    bool ok = true;
    for (const auto& e : r.log) {
        bool trivial = true;
        for (std::size_t j = 1; j < e.splitting.classes.size(); ++j) {
            trivial = trivial && e.splitting.classes[j].is_zero();
        }
        CoefficientRow row;
        row.exponent = e.splitting.str();
        row.lhs = e.kept ? "kept" : "rejected";
        row.rhs = trivial ? "kept" : "rejected";
        row.equal = row.lhs == row.rhs;
        ok = ok && row.equal;
        if (!e.reason.empty()) {
            rec.notes.push_back(e.splitting.str() + ": " + e.reason);
        }
        rec.rows.push_back(std::move(row));
    }
    rec.verdict = !ok ? Verdict::fail : (r.log.empty() ? Verdict::vacuous : Verdict::pass);
    return rec;
}

std::vector<EffectiveClass> splitting_classes(const DegenerationScenario& d, const CheckSpec& c, int bound)
{
    if (!c.classes.empty()) {
        return c.classes;
    }
    if (!d.fiber) {
        return d.total.classes_up_to(bound);
    }
    std::vector<EffectiveClass> out;
    std::set<EffectiveClass> seen;
    for (const auto& b : d.fiber->lattice.classes_up_to(bound)) {
        auto img = d.fiber->inclusion.apply_effective(b);
        if (img && seen.insert(*img).second) {
            out.push_back(*img);
        }
    }
    return out;
}

Verdict fold(const std::vector<CheckRecord>& recs)
{
    bool any_pass = false;
    for (const auto& r : recs) {
        if (r.verdict == Verdict::fail) {
            return Verdict::fail;
        }
        any_pass = any_pass || r.verdict == Verdict::pass;
    }
    return any_pass ? Verdict::pass : Verdict::vacuous;
}

} // namespace

Orders effective_orders(const Scenario& s, const RunOptions& o)
{
    Orders out = s.orders;
    if (o.q_order) {
        out.q_order = *o.q_order;
    }
    if (o.u_order) {
        out.u_order = *o.u_order;
    }
    if (o.degree_bound) {
        out.degree_bound = *o.degree_bound;
    }
    return out;
}

CheckOutcome run_check(const Scenario& s, const CheckSpec& c)
{
    CheckOutcome out;
    out.name = c.name;
    out.kind = c.kind;
    const auto& ins = s.insertion_set(c.insertions);
    const int bound = s.orders.degree_bound;

    if (c.kind == "local-correspondence") {
        auto r = verify_local_correspondence(c.degree, s.orders.u_order);
        r.record.notes.push_back(std::string("PT side q <-> 1/q symmetric: ") + (r.symmetric ? "yes" : "no"));
        take(out, r.record);
    } else if (c.kind == "x-reduction") {
        for (const auto& b : or_all(c.classes, s.transition->x_lattice, bound)) {
            take(out, simplify_conifold_X(*s.transition, b, ins));
        }
    } else if (c.kind == "y-reduction") {
        for (const auto& b : or_all(c.classes, s.transition->y_lattice, bound)) {
            take(out, simplify_conifold_Y(*s.transition, b, ins));
        }
    } else if (c.kind == "ratio") {
        for (auto side : {Side::gw, Side::pt}) {
            if (!c.side || *c.side == side) {
                take(out, check_ratio(*s.transition, side, ins));
            }
        }
    } else if (c.kind == "key-equality") {
        const auto& t = *s.transition;
        for (const auto& b : or_all(c.classes, t.y_lattice, bound)) {
            // classes off the phi^! image carry no key equality
            if (c.classes.empty() && !t.phi.apply_effective(b)) {
                continue;
            }
            take(out, check_key_equality(t, b, ins));
        }
    } else if (c.kind == "main-theorem") {
        for (const auto& b : or_all(c.classes, s.transition->x_lattice, bound)) {
            take(out, run_main_theorem(*s.transition, b, ins));
        }
    } else if (c.kind == "trivial-splittings") {
        const auto& d = s.degeneration_named(c.degeneration);
        for (const auto& b : splitting_classes(d, c, bound)) {
            for (auto side : {Side::gw, Side::pt}) {
                if (!c.side || *c.side == side) {
                    take(out, trivial_splittings(d, b, side, ins));
                }
            }
        }
    } else if (c.kind == "assemble") {
        const auto& d = s.degeneration_named(c.degeneration);
        const auto r = assemble_absolute(d, *c.side, c.classes.front(), ins);
        CheckRecord rec;
        rec.name = "assemble-" + to_string(*c.side);
        rec.inputs = {{"degeneration", d.name},
                      {"class", c.classes.front().str()},
                      {"insertions", insertion_key(ins)},
                      {"terms", std::to_string(r.terms)}};
        rec.lhs_label = "degeneration sum";
        rec.rhs_label = "expected";
        const HalfInteger order = *c.side == Side::gw ? HalfInteger(s.orders.u_order) : HalfInteger(s.orders.q_order);
        compare_series(rec, r.series, *c.expect, order);
        take(out, std::move(rec));
    } else if (c.kind == "ktilde-valid") {
        CheckRecord rec;
        rec.name = "ktilde-valid";
        rec.inputs = {{"entries", std::to_string(s.ktilde->table.entries.size())}};
        for (const auto& v : validate_Ktilde(s.ktilde->table)) {
            rec.notes.push_back(v.alpha.str() + "," + v.hat.str() + ": " + v.what);
        }
        rec.verdict = !rec.notes.empty() ? Verdict::fail
                                         : (s.ktilde->table.entries.empty() ? Verdict::vacuous : Verdict::pass);
        take(out, std::move(rec));
    } else if (c.kind == "bar-identity") {
        const std::vector<BarClass> classes = {{"H", 2}, {"pt", 6}, {"1", 0}, {"L", 4}, {"H2", 2}, {"L2", 4}};
        for (int l = 1; l <= c.degree; ++l) {
            BarInput in;
            for (int j = 0; j < l; ++j) {
                in.alpha.push_back(1);
                in.gammas.push_back(classes[static_cast<std::size_t>(j) % classes.size()]);
            }
            CheckRecord rec;
            rec.name = "bar-identity";
            rec.inputs = {{"insertions", bar_input_str(in)}};
            rec.lhs_label = "bar transform";
            rec.rhs_label = "input";
            const auto lhs = printed(bar_transform(in, s.ktilde->table, s.ktilde->chern), in, s.ktilde->chern);
            const auto rhs = printed(bar_identity(in), in, s.ktilde->chern);
            for (std::size_t i = 0; i < std::max(lhs.size(), rhs.size()); ++i) {
                CoefficientRow row;
                row.exponent = std::to_string(i);
                row.lhs = i < lhs.size() ? lhs[i] : "";
                row.rhs = i < rhs.size() ? rhs[i] : "";
                row.equal = row.lhs == row.rhs;
                rec.rows.push_back(std::move(row));
            }
            rec.verdict = lhs == rhs ? Verdict::pass : Verdict::fail;
            take(out, std::move(rec));
        }
    } else if (c.kind == "bar-diagonal") {
        for (int n = 1; n <= c.degree; ++n) {
            for (const auto& alpha : enumerate_partitions(n)) {
                BarInput in;
                in.alpha = alpha.parts();
                in.gammas.assign(alpha.parts().size(), BarClass{"1", 0});
                const auto diag = bar_identity(in).front().factors;
                auto coeff = TruncatedSeries(Variable::u);
                for (const auto& t : bar_transform(in, s.ktilde->table, s.ktilde->chern)) {
                    if (t.factors == diag) {
                        coeff = t.coefficient;
                    }
                }
                const int e = alpha.length() - alpha.size();
                const auto expected = TruncatedSeries::monomial(Variable::u, e, pow(GaussianRational::i(), e));
                CheckRecord rec;
                rec.name = "bar-diagonal";
                rec.inputs = {{"alpha", alpha.str()}};
                rec.lhs_label = "diagonal coefficient";
                rec.rhs_label = "(iu)^(l(alpha) - |alpha|)";
                // only the leading term is universal
                const auto lead = coeff.is_zero() ? coeff : coeff.truncated(e + 1);
                compare_series(rec, lead, expected.truncated(e + 1), HalfInteger(e + 1));
                take(out, std::move(rec));
            }
        }
    } else {
        throw ScenarioError("unknown check kind '" + c.kind + "'");
    }
    out.verdict = fold(out.records);
    return out;
}

RunReport run_all(const Scenario& scenario, const RunOptions& o)
{
    std::set<std::string> declared;
    for (const auto& c : scenario.checks) {
        declared.insert(c.name);
    }
    for (const auto& n : o.only) {
        if (!declared.count(n)) {
            throw ScenarioError("scenario '" + scenario.name + "' declares no check '" + n + "'");
        }
    }
    RunReport r;
    r.scenario = scenario.name;
    r.digest = hex64(fnv1a64(dump_scenario(scenario)));
    r.orders = effective_orders(scenario, o);
    const auto s = scenario.with_orders(r.orders);
    const std::set<std::string> only(o.only.begin(), o.only.end());
    bool first = true;
    for (const auto& c : s.checks) {
        if (!only.empty() && !only.count(c.name)) {
            continue;
        }
        r.checks.push_back(run_check(s, c));
        r.verdict = first ? r.checks.back().verdict : combine(r.verdict, r.checks.back().verdict);
        first = false;
    }
    return r;
}

std::string render_report(const RunReport& r)
{
    ojson root;
    root["scenario"] = r.scenario;
    root["digest"] = r.digest;
    root["orders"] = {{"q_order", r.orders.q_order},
                      {"u_order", r.orders.u_order},
                      {"degree_bound", r.orders.degree_bound}};
    root["verdict"] = to_string(r.verdict);
    ojson checks = ojson::array();
    for (const auto& c : r.checks) {
        ojson cj;
        cj["name"] = c.name;
        cj["kind"] = c.kind;
        cj["verdict"] = to_string(c.verdict);
        ojson recs = ojson::array();
        for (const auto& rec : c.records) {
            ojson j;
            j["name"] = rec.name;
            ojson inputs = ojson::object();
            for (const auto& [k, v] : rec.inputs) {
                inputs[k] = v;
            }
            j["inputs"] = inputs;
            j["verdict"] = to_string(rec.verdict);
            j["columns"] = {"exponent", rec.lhs_label, rec.rhs_label, "equal"};
            ojson rows = ojson::array();
            for (const auto& row : rec.rows) {
                rows.push_back({row.exponent, row.lhs, row.rhs, row.equal});
            }
            j["rows"] = rows;
            j["notes"] = rec.notes;
            recs.push_back(j);
        }
        cj["records"] = recs;
        checks.push_back(cj);
    }
    root["checks"] = checks;
    return root.dump(1) + "\n";
}

std::string summary(const RunReport& r)
{
    std::ostringstream os;
    os << "scenario " << r.scenario << " (" << r.digest << ")\n";
    for (const auto& c : r.checks) {
        std::size_t failed = 0;
        for (const auto& rec : c.records) {
            failed += rec.verdict == Verdict::fail;
        }
        os << "  " << to_string(c.verdict) << "  " << c.name << "  (" << c.records.size() << " records";
        if (failed) {
            os << ", " << failed << " failed";
        }
        os << ")\n";
    }
    os << "overall: " << to_string(r.verdict) << "\n";
    return os.str();
}

int exit_code(const RunReport& r) { return r.verdict == Verdict::pass ? 0 : 1; }

} // namespace gwpt
