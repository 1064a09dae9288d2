#include "gwpt/degeneration.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "gwpt/error.hpp"
#include "gwpt/linear_algebra.hpp"
#include "gwpt/local_models.hpp"

namespace gwpt {

std::string to_string(Side s)
{
    return s == Side::gw ? "GW" : "PT";
}

Variable variable_of(Side s)
{
    return s == Side::gw ? Variable::u : Variable::q;
}

void Insertion::validate() const
{
    if (descendant < 0) {
        throw ScenarioError("insertion " + str() + ": negative descendant order");
    }
    if (class_degree < 0 || class_degree > 6) {
        throw ScenarioError("insertion " + str() + ": class degree " + std::to_string(class_degree) +
                            " outside [0, 6]");
    }
    if (class_degree % 2 != 0) {
        throw ScenarioError("insertion " + str() + ": odd cohomology is not supported (sign conventions differ)");
    }
    if (class_degree == 0 && descendant != 0) {
        throw ScenarioError("insertion " + str() + ": a degree-0 class only enters as tau_0");
    }
    if (class_label.empty()) {
        throw ScenarioError("insertion with an empty class label");
    }
}

std::string Insertion::str() const
{
    return "tau_" + std::to_string(descendant) + "(" + class_label + ")";
}

std::string insertion_key(const InsertionList& ins)
{
    std::vector<std::string> parts;
    for (const auto& i : ins) {
        parts.push_back(i.str());
    }
    std::sort(parts.begin(), parts.end());
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) {
            out += ' ';
        }
        out += p;
    }
    return out;
}

std::string TableKey::str() const
{
    std::string out = component + " " + cls.str() + " [" + insertions + "] |";
    for (const auto& eta : boundary) {
        out += " " + eta.str();
    }
    return out;
}

std::string Splitting::str() const
{
    std::string out;
    for (std::size_t j = 0; j < classes.size(); ++j) {
        out += (j ? " + " : "") + classes[j].str();
    }
    out += " |eta| =";
    for (auto b : boundary_sizes) {
        out += " " + std::to_string(b);
    }
    return out;
}

std::size_t DegenerationScenario::component_index(const std::string& n) const
{
    for (std::size_t j = 0; j < components.size(); ++j) {
        if (components[j].name == n) {
            return j;
        }
    }
    throw ScenarioError("scenario '" + name + "': unknown component '" + n + "'");
}

std::vector<std::size_t> DegenerationScenario::incident_divisors(std::size_t j) const
{
    std::vector<std::size_t> out;
    if (j == 0) {
        for (std::size_t i = 0; i < divisors.size(); ++i) {
            out.push_back(i);
        }
    } else {
        out.push_back(j - 1);
    }
    return out;
}

namespace {

std::int64_t total_degree(const DegenerationScenario& s, const IntVector& v)
{
    std::int64_t d = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        d += s.total.degree_weights()[i] * v[i];
    }
    return d;
}

IntVector component_weights(const DegenerationScenario& s, const ComponentGeometry& c)
{
    IntVector w;
    for (std::size_t g = 0; g < c.lattice.rank(); ++g) {
        w.push_back(total_degree(s, c.inclusion.column(g)));
    }
    return w;
}

// Pairing of a class on component j with divisor i, from the side it lives on.
std::int64_t divisor_pairing(const DegenerationScenario& s, std::size_t j, std::size_t i, const EffectiveClass& c)
{
    const auto& d = s.divisors[i];
    return pair(j == 0 ? d.pairing_main : d.pairing_side, c);
}

bool is_unit_series(const TruncatedSeries& t)
{
    return t.size() == 1 && t.terms().begin()->first == 0 && t.terms().begin()->second == GaussianRational(1);
}

void check_table(const DegenerationScenario& s, const RelativeInvariantTable& t, Side side)
{
    const std::string where = "scenario '" + s.name + "', " + to_string(side) + " table";
    if (t.side != side) {
        throw ScenarioError(where + ": side tag mismatch");
    }
    std::set<std::string> names;
    for (const auto& c : s.components) {
        names.insert(c.name);
    }
    for (const auto& [key, series] : t.entries) {
        // tables may be shared with another degeneration
        if (!names.count(key.component)) {
            continue;
        }
        const auto j = s.component_index(key.component);
        const auto& comp = s.components[j];
        if (key.cls.rank() != comp.lattice.rank()) {
            throw ScenarioError(where + ", entry " + key.str() + ": class rank differs from the component lattice");
        }
        const auto inc = s.incident_divisors(j);
        if (key.boundary.size() != inc.size()) {
            throw ScenarioError(where + ", entry " + key.str() + ": expected " + std::to_string(inc.size()) +
                                " boundary partitions");
        }
        for (std::size_t b = 0; b < inc.size(); ++b) {
            const auto& eta = key.boundary[b];
            const auto expected = divisor_pairing(s, j, inc[b], key.cls);
            if (eta.size() != expected) {
                throw ScenarioError(where + ", entry " + key.str() + ": boundary size " + std::to_string(eta.size()) +
                                    " differs from the class-divisor pairing " + std::to_string(expected));
            }
            for (const auto& p : eta.pairs()) {
                if (p.index >= s.divisors[inc[b]].basis.size()) {
                    throw ScenarioError(where + ", entry " + key.str() + ": basis index out of range");
                }
            }
        }
        if (series.variable() != variable_of(side)) {
            throw ScenarioError(where + ", entry " + key.str() + ": series in the wrong variable");
        }
    }
    for (std::size_t j = 0; j < s.components.size(); ++j) {
        const auto& comp = s.components[j];
        if (comp.local_curve_generator) {
            continue;
        }
        TableKey unit{comp.name, EffectiveClass::zero(comp.lattice.rank()), "",
                      std::vector<WeightedPartition>(s.incident_divisors(j).size())};
        auto it = t.entries.find(unit);
        if (it == t.entries.end()) {
            throw ScenarioError(where + ": component '" + comp.name +
                                "' lacks the class-0 entry, which must be 1 as a convention");
        }
        if (!is_unit_series(it->second)) {
            throw ScenarioError(where + ": component '" + comp.name +
                                "' has a class-0 entry different from 1, which must be 1 as a convention");
        }
    }
}

} // namespace

void DegenerationScenario::validate() const
{
    const std::string where = "scenario '" + name + "'";
    if (components.empty()) {
        throw ScenarioError(where + ": no components");
    }
    if (divisors.size() + 1 != components.size()) {
        throw ScenarioError(where + ": need exactly one divisor per component besides the first");
    }
    std::set<std::string> names;
    for (const auto& c : components) {
        if (!names.insert(c.name).second) {
            throw ScenarioError(where + ": duplicate component '" + c.name + "'");
        }
        if (c.inclusion.source_rank() != c.lattice.rank() || c.inclusion.target_rank() != total.rank()) {
            throw ScenarioError(where + ": inclusion of '" + c.name + "' has the wrong shape");
        }
        if (c.inclusion.kind() == MapKind::gysin) {
            throw ScenarioError(where + ": inclusion of '" + c.name + "' must not be a gysin map");
        }
        for (auto w : component_weights(*this, c)) {
            if (w < 1) {
                throw LatticeError(where + ": a generator of '" + c.name +
                                   "' has non-positive total degree, so splittings are not finite");
            }
        }
        if (c.c1 && c.c1->size() != c.lattice.rank()) {
            throw ScenarioError(where + ": c1 of '" + c.name + "' has the wrong length");
        }
        if (c.dimension_filter && !c.c1) {
            throw ScenarioError(where + ": the dimension filter on '" + c.name + "' needs c1");
        }
        if (c.local_curve_generator && *c.local_curve_generator >= c.lattice.rank()) {
            throw ScenarioError(where + ": local curve generator of '" + c.name + "' out of range");
        }
    }
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        const auto& d = divisors[i];
        if (d.component != i + 1) {
            throw ScenarioError(where + ": divisor '" + d.name + "' is out of order");
        }
        try {
            d.basis.validate();
        } catch (const ScenarioError& e) {
            throw ScenarioError(where + ", divisor '" + d.name + "': " + e.what());
        }
        if (d.pairing_main.size() != components[0].lattice.rank() ||
            d.pairing_side.size() != components[i + 1].lattice.rank()) {
            throw ScenarioError(where + ": pairings of divisor '" + d.name + "' have the wrong length");
        }
    }
    if (fiber) {
        if (fiber->inclusion.source_rank() != fiber->lattice.rank() ||
            fiber->inclusion.target_rank() != total.rank()) {
            throw ScenarioError(where + ": fiber inclusion has the wrong shape");
        }
        linalg::Matrix<Rational> m;
        for (const auto& row : fiber->inclusion.matrix()) {
            std::vector<Rational> r;
            for (auto x : row) {
                r.emplace_back(static_cast<long>(x));
            }
            m.push_back(std::move(r));
        }
        if (linalg::rank(m, fiber->lattice.rank()) != fiber->lattice.rank()) {
            throw LatticeError(where + ": fiber inclusion is not injective");
        }
        if (fiber->c1 && fiber->c1->size() != fiber->lattice.rank()) {
            throw ScenarioError(where + ": fiber c1 has the wrong length");
        }
    }
    for (const auto& ins : insertions) {
        ins.validate();
    }
    if (tables.gw) {
        check_table(*this, *tables.gw, Side::gw);
    }
    if (tables.pt) {
        check_table(*this, *tables.pt, Side::pt);
    }
}

std::vector<std::vector<std::size_t>> distribute_insertions(const InsertionList& ins,
                                                            const std::vector<std::string>& component_names,
                                                            const std::vector<bool>& receives_class)
{
    const std::size_t k = component_names.size();
    std::vector<std::vector<std::size_t>> out;
    if (k == 0) {
        if (ins.empty()) {
            out.emplace_back();
        }
        return out;
    }
    std::vector<std::size_t> cur(ins.size(), 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == ins.size()) {
            out.push_back(cur);
            return;
        }
        for (std::size_t j = 0; j < k; ++j) {
            const bool gets_class = receives_class.empty() || receives_class[j];
            if (ins[i].vanishes_on.count(component_names[j]) && gets_class) {
                continue;
            }
            cur[i] = j;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

bool dimension_matches(Side side, const ComponentGeometry& comp, const EffectiveClass& cls, const InsertionList& ins,
                       const std::vector<std::pair<const WeightedPartition*, const CohBasis*>>& boundary)
{
    if (!comp.c1) {
        throw ScenarioError("dimension count on '" + comp.name + "' needs c1");
    }
    const std::int64_t c = pair(*comp.c1, cls);
    std::int64_t lhs = c;
    std::int64_t rhs = 0;
    if (side == Side::gw) {
        lhs += static_cast<std::int64_t>(ins.size());
        for (const auto& i : ins) {
            rhs += i.descendant + i.complex_degree();
        }
        for (const auto& [eta, b] : boundary) {
            lhs += eta->length() - eta->size();
            for (const auto& p : eta->pairs()) {
                rhs += b->complex_degree(p.index);
            }
        }
    } else {
        for (const auto& i : ins) {
            rhs += i.descendant - 1 + i.complex_degree();
        }
        for (const auto& [eta, b] : boundary) {
            rhs += eta->nakajima_degree(*b);
        }
    }
    return lhs == rhs;
}

TruncatedSeries lookup_relative(const DegenerationScenario& s, Side side, const TableKey& key)
{
    const auto var = variable_of(side);
    const bool empty_boundary =
        std::all_of(key.boundary.begin(), key.boundary.end(), [](const auto& e) { return e.empty(); });
    if (key.cls.is_zero()) {
        if (!key.insertions.empty()) {
            return TruncatedSeries(var);
        }
        if (empty_boundary) {
            return TruncatedSeries::constant(var, GaussianRational(1));
        }
    }
    const auto& comp = s.components[s.component_index(key.component)];
    if (comp.local_curve_generator && key.insertions.empty() && empty_boundary) {
        const auto g = *comp.local_curve_generator;
        bool multiple = true;
        for (std::size_t i = 0; i < key.cls.rank(); ++i) {
            if (i != g && key.cls[i] != 0) {
                multiple = false;
            }
        }
        if (multiple) {
            const int m = static_cast<int>(key.cls[g]);
            // extra u-precision so products with poles of other factors stay known to the u-order
            const int u_work = s.orders.u_order + 4 * s.orders.degree_bound + 4;
            return side == Side::gw ? gw_disconnected_local(m, u_work) : pt_local_curve(m, s.orders.q_order);
        }
    }
    const auto* table = s.tables.get(side);
    if (table) {
        auto it = table->entries.find(key);
        if (it != table->entries.end()) {
            return it->second;
        }
    }
    throw MissingTableEntry("scenario '" + s.name + "', " + to_string(side) + " table has no entry " + key.str());
}

namespace {

struct Term {
    std::vector<std::size_t> placement;
    std::vector<const WeightedPartition*> etas;
};

// Calls f on every (placement, boundary tuple) of a splitting that survives the
// class-0 and dimension rules.
void for_each_term(const DegenerationScenario& s, Side side, const Splitting& sp, const InsertionList& ins,
                   const std::vector<std::vector<WeightedPartition>>& eta_choices,
                   const std::function<void(const Term&)>& f)
{
    const std::size_t n = s.components.size();
    std::vector<std::string> names;
    std::vector<bool> receives;
    for (std::size_t j = 0; j < n; ++j) {
        names.push_back(s.components[j].name);
        receives.push_back(!sp.classes[j].is_zero());
    }
    const auto placements = distribute_insertions(ins, names, receives);
    Term term;
    term.etas.resize(s.divisors.size());
    for (const auto& pl : placements) {
        std::vector<InsertionList> per(n);
        for (std::size_t i = 0; i < ins.size(); ++i) {
            per[pl[i]].push_back(ins[i]);
        }
        bool zero = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (sp.classes[j].is_zero() && !per[j].empty()) {
                zero = true;
            }
        }
        if (zero) {
            continue;
        }
        term.placement = pl;
        std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == s.divisors.size()) {
                for (std::size_t j = 0; j < n; ++j) {
                    const auto& comp = s.components[j];
                    if (!comp.dimension_filter) {
                        continue;
                    }
                    std::vector<WeightedPartition> duals;
                    std::vector<std::pair<const WeightedPartition*, const CohBasis*>> bd;
                    for (auto d : s.incident_divisors(j)) {
                        bd.emplace_back(term.etas[d], &s.divisors[d].basis);
                    }
                    if (!dimension_matches(side, comp, sp.classes[j], per[j], bd)) {
                        return;
                    }
                }
                f(term);
                return;
            }
            for (const auto& eta : eta_choices[i]) {
                term.etas[i] = &eta;
                rec(i + 1);
            }
        };
        rec(0);
    }
}

std::vector<std::vector<WeightedPartition>> boundary_choices(const DegenerationScenario& s, const Splitting& sp)
{
    std::vector<std::vector<WeightedPartition>> out;
    for (std::size_t i = 0; i < s.divisors.size(); ++i) {
        out.push_back(enumerate_weighted_partitions(sp.boundary_sizes[i], s.divisors[i].basis.size()));
    }
    return out;
}

void check_adjunction(const DegenerationScenario& s, const EffectiveClass& total_class, const Splitting& sp)
{
    if (!s.fiber || !s.fiber->c1) {
        return;
    }
    for (const auto& c : s.components) {
        if (!c.c1) {
            return;
        }
    }
    auto beta = injective_preimage(total_class, s.fiber->inclusion);
    if (!beta) {
        return;
    }
    std::int64_t rhs = pair(*s.components[0].c1, sp.classes[0]);
    for (std::size_t i = 0; i < s.divisors.size(); ++i) {
        const auto& cls = sp.classes[i + 1];
        rhs += pair(*s.components[i + 1].c1, cls) - 2 * pair(s.divisors[i].pairing_side, cls);
    }
    const auto lhs = pair(*s.fiber->c1, *beta);
    if (lhs != rhs) {
        throw ScenarioError("scenario '" + s.name + "': c1 functionals break adjunction on splitting " + sp.str() +
                            " (" + std::to_string(lhs) + " vs " + std::to_string(rhs) + ")");
    }
}

} // namespace

SplittingResult enumerate_splittings(const DegenerationScenario& s, const EffectiveClass& total_class, Side side,
                                     const InsertionList& ins)
{
    if (total_class.rank() != s.total.rank()) {
        throw LatticeError("class " + total_class.str() + " is not in the total-space lattice of '" + s.name + "'");
    }
    const std::size_t n = s.components.size();
    std::vector<std::vector<EffectiveClass>> candidates;
    const auto bound = total_degree(s, total_class.coords());
    for (const auto& c : s.components) {
        candidates.push_back(classes_with_weighted_degree(component_weights(s, c), bound));
    }

    SplittingResult result;
    std::vector<EffectiveClass> cur(n);
    std::function<void(std::size_t, const EffectiveClass&)> rec = [&](std::size_t j, const EffectiveClass& rest) {
        if (j == n) {
            if (!rest.is_zero()) {
                return;
            }
            Splitting sp{cur, {}};
            FilterLogEntry entry;
            bool matched = true;
            for (std::size_t i = 0; i < s.divisors.size(); ++i) {
                const auto a = divisor_pairing(s, 0, i, cur[0]);
                const auto b = divisor_pairing(s, i + 1, i, cur[i + 1]);
                sp.boundary_sizes.push_back(static_cast<int>(a));
                if (a != b || a < 0) {
                    matched = false;
                    entry.reason = "matching fails on " + s.divisors[i].name + ": " + std::to_string(a) +
                                   " vs " + std::to_string(b);
                    break;
                }
            }
            entry.splitting = sp;
            if (matched) {
                check_adjunction(s, total_class, sp);
                std::size_t surviving = 0;
                for_each_term(s, side, sp, ins, boundary_choices(s, sp), [&](const Term&) { ++surviving; });
                entry.kept = surviving > 0;
                entry.reason = entry.kept ? std::to_string(surviving) + " terms"
                                          : "every term vanishes by the dimension count or a zero insertion";
            }
            if (entry.kept) {
                result.kept.push_back(sp);
            }
            result.log.push_back(std::move(entry));
            return;
        }
        for (const auto& c : candidates[j]) {
            auto img = s.components[j].inclusion.apply_effective(c);
            if (!img) {
                continue;
            }
            auto left = rest.minus(*img);
            if (!left) {
                continue;
            }
            cur[j] = c;
            rec(j + 1, *left);
        }
    };
    rec(0, total_class);
    return result;
}

SplittingResult enumerate_splittings(const DegenerationScenario& s, const EffectiveClass& total_class)
{
    return enumerate_splittings(s, total_class, Side::gw, s.insertions);
}

AssemblyResult assemble_absolute(const DegenerationScenario& s, Side side, const EffectiveClass& total_class,
                                 const InsertionList& ins)
{
    const auto var = variable_of(side);
    const HalfInteger order = side == Side::gw ? s.orders.u_order : s.orders.q_order;
    AssemblyResult out{TruncatedSeries(var, order), enumerate_splittings(s, total_class, side, ins), 0};
    const std::size_t n = s.components.size();

    for (const auto& sp : out.splittings.kept) {
        const auto choices = boundary_choices(s, sp);
        for_each_term(s, side, sp, ins, choices, [&](const Term& t) {
            std::vector<InsertionList> per(n);
            for (std::size_t i = 0; i < ins.size(); ++i) {
                per[t.placement[i]].push_back(ins[i]);
            }
            TableKey main{s.components[0].name, sp.classes[0], insertion_key(per[0]), {}};
            for (const auto* eta : t.etas) {
                main.boundary.push_back(*eta);
            }
            TruncatedSeries term = lookup_relative(s, side, main);
            for (std::size_t i = 0; i < s.divisors.size(); ++i) {
                const auto& eta = *t.etas[i];
                const auto& basis = s.divisors[i].basis;
                const Rational z(static_cast<long>(z_factor(eta)));
                TruncatedSeries weight(var);
                if (side == Side::gw) {
                    weight = TruncatedSeries::monomial(var, 2 * eta.length(), GaussianRational(z));
                } else {
                    const int sign = (eta.size() - eta.length()) % 2 == 0 ? 1 : -1;
                    weight = TruncatedSeries::monomial(var, -eta.size(), GaussianRational(z * sign));
                }
                TableKey sk{s.components[i + 1].name, sp.classes[i + 1], insertion_key(per[i + 1]),
                            {dual_partition(eta, basis)}};
                term = term * weight * lookup_relative(s, side, sk);
            }
            out.series = out.series + term;
            ++out.terms;
        });
    }
    out.series = out.series.truncated(std::min(out.series.order(), order));
    return out;
}

TruncatedSeries assemble_absolute_gw(const DegenerationScenario& s, const EffectiveClass& total_class)
{
    return assemble_absolute(s, Side::gw, total_class, s.insertions).series;
}

TruncatedSeries assemble_absolute_pt(const DegenerationScenario& s, const EffectiveClass& total_class)
{
    return assemble_absolute(s, Side::pt, total_class, s.insertions).series;
}

} // namespace gwpt
