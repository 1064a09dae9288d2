#include "gwpt/transition.hpp"

#include <algorithm>
#include <functional>

#include "gwpt/error.hpp"

namespace gwpt {

namespace {

constexpr int kSlack = 4;

IntMatrix product(const LatticeMap& outer, const LatticeMap& inner)
{
    return outer.compose(inner);
}

EffectiveClass scaled_generator(std::size_t rank, std::size_t g, std::int64_t m)
{
    IntVector v(rank, 0);
    v[g] = m;
    return EffectiveClass(std::move(v));
}

std::vector<WeightedPartition> empty_boundary(const ConifoldTransition& t)
{
    return std::vector<WeightedPartition>(t.k());
}

// Every insertion other than tau_0(1) must restrict to zero on the Q_j and Etilde_j.
void require_restriction_zero(const ConifoldTransition& t, const InsertionList& ins)
{
    for (const auto& i : ins) {
        i.validate();
        if (i.is_unit()) {
            continue;
        }
        for (const auto* s : {&t.x_side, &t.y_side}) {
            for (std::size_t j = 1; j < s->components.size(); ++j) {
                if (!i.vanishes_on.count(s->components[j].name)) {
                    throw ScenarioError("insertion " + i.str() + " does not restrict to zero on '" +
                                        s->components[j].name +
                                        "'; only the branch with vanishing restrictions to the exceptional loci is "
                                        "implemented");
                }
            }
        }
    }
}

std::string class_list(const std::vector<EffectiveClass>& cs)
{
    std::string out;
    for (const auto& c : cs) {
        out += (out.empty() ? "" : " ") + c.str();
    }
    return out.empty() ? "none" : out;
}

// Classwise comparison of two graded series; pass if some class compares and none fails.
CheckRecord compare_graded(std::string name, const GradedSeries& lhs, const GradedSeries& rhs,
                           const std::vector<EffectiveClass>& classes, HalfInteger order)
{
    CheckRecord rec;
    rec.name = std::move(name);
    bool any_pass = false;
    bool any_fail = false;
    for (const auto& c : classes) {
        CheckRecord sub;
        compare_series(sub, lhs.at(c), rhs.at(c), order);
        for (auto& row : sub.rows) {
            row.exponent = c.str() + " " + row.exponent;
            rec.rows.push_back(std::move(row));
        }
        for (auto& n : sub.notes) {
            rec.notes.push_back(c.str() + ": " + n);
        }
        any_pass = any_pass || sub.verdict == Verdict::pass;
        any_fail = any_fail || sub.verdict == Verdict::fail;
    }
    rec.verdict = any_fail ? Verdict::fail : (any_pass ? Verdict::pass : Verdict::vacuous);
    return rec;
}

HalfInteger side_order(const ConifoldTransition& t, Side side)
{
    return side == Side::gw ? HalfInteger(t.orders().u_order) : HalfInteger(t.orders().q_order);
}

EffectiveClass x_total(const ConifoldTransition& t, const EffectiveClass& beta)
{
    auto c = t.x_side.fiber->inclusion.apply_effective(beta);
    if (!c) {
        throw LatticeError("X-class " + beta.str() + " has no effective image in the total space");
    }
    return *c;
}

EffectiveClass y_total(const ConifoldTransition& t, const EffectiveClass& beta_y)
{
    auto c = t.y_side.fiber->inclusion.apply_effective(beta_y);
    if (!c) {
        throw LatticeError("Y-class " + beta_y.str() + " has no effective image in the total space");
    }
    return *c;
}

// Local-curve series of Etilde_j in class m [Ctilde_j].
TruncatedSeries local_factor(const ConifoldTransition& t, Side side, std::size_t j, std::int64_t m)
{
    const auto& comp = t.y_side.components[j + 1];
    TableKey key{comp.name, scaled_generator(comp.lattice.rank(), *comp.local_curve_generator, m), "",
                 {WeightedPartition()}};
    return lookup_relative(t.y_side, side, key);
}

// All (m_1..m_k) with sum m_j C_j <= beta_y; f receives m and the effective rest.
void for_each_exceptional_split(const ConifoldTransition& t, const EffectiveClass& beta_y,
                                const std::function<void(const std::vector<std::int64_t>&, const EffectiveClass&)>& f)
{
    std::vector<std::int64_t> m(t.k(), 0);
    std::function<void(std::size_t, const EffectiveClass&)> rec = [&](std::size_t j, const EffectiveClass& rest) {
        if (j == t.k()) {
            f(m, rest);
            return;
        }
        EffectiveClass cur = rest;
        for (std::int64_t n = 0;; ++n) {
            m[j] = n;
            rec(j + 1, cur);
            auto next = cur.minus(t.exceptional[j]);
            if (!next) {
                break;
            }
            cur = *next;
        }
        m[j] = 0;
    };
    rec(0, beta_y);
}

} // namespace

void TransitionReport::add(CheckRecord r)
{
    verdict = records.empty() ? r.verdict : combine(verdict, r.verdict);
    records.push_back(std::move(r));
}

void TransitionReport::add(const TransitionReport& r)
{
    for (const auto& rec : r.records) {
        add(rec);
    }
}

void ConifoldTransition::validate() const
{
    const std::string where = "transition '" + name + "'";
    x_side.validate();
    y_side.validate();
    if (psi.kind() != MapKind::pushforward || psi.source_rank() != y_lattice.rank() ||
        psi.target_rank() != x_lattice.rank()) {
        throw ScenarioError(where + ": psi must be a pushforward from the Y-lattice onto the X-lattice");
    }
    if (phi.kind() != MapKind::gysin || phi.source_rank() != y_lattice.rank() ||
        phi.target_rank() != ytilde_lattice.rank()) {
        throw ScenarioError(where + ": phi must be a gysin map from the Y-lattice to the Ytilde-lattice");
    }
    if (phi.image_functionals().size() != k()) {
        throw ScenarioError(where + ": phi needs one E-pairing functional per exceptional curve");
    }
    if (k() == 0) {
        throw ScenarioError(where + ": no exceptional curves");
    }
    if (x_side.divisors.size() != k() || y_side.divisors.size() != k()) {
        throw ScenarioError(where + ": both degenerations need one component per exceptional curve");
    }
    for (const auto* s : {&x_side, &y_side}) {
        if (!(s->components[0].lattice == ytilde_lattice)) {
            throw ScenarioError(where + ": the first component of '" + s->name + "' must carry the Ytilde-lattice");
        }
        if (!s->fiber) {
            throw ScenarioError(where + ": degeneration '" + s->name + "' declares no fiber");
        }
    }
    if (x_side.components[0].name != y_side.components[0].name) {
        throw ScenarioError(where + ": both degenerations must name the Ytilde component alike");
    }
    if (!(x_side.fiber->lattice == x_lattice) || !(y_side.fiber->lattice == y_lattice)) {
        throw ScenarioError(where + ": fibers must be X and Y");
    }
    if (c1_y.size() != y_lattice.rank() || c1_x.size() != x_lattice.rank() ||
        c1_ytilde.size() != ytilde_lattice.rank()) {
        throw ScenarioError(where + ": c1 functionals have the wrong length");
    }
    if (product(x_side.components[0].inclusion, phi) != product(x_side.fiber->inclusion, psi)) {
        throw ScenarioError(where + ": lattice square on the X side does not commute");
    }
    if (product(y_side.components[0].inclusion, phi) != y_side.fiber->inclusion.matrix()) {
        throw ScenarioError(where + ": lattice square on the Y side does not commute");
    }
    for (std::size_t j = 0; j < k(); ++j) {
        const auto& c = exceptional[j];
        if (c.rank() != y_lattice.rank()) {
            throw ScenarioError(where + ": exceptional class " + c.str() + " has the wrong rank");
        }
        const auto image = psi.apply(c);
        if (std::any_of(image.begin(), image.end(), [](auto x) { return x != 0; })) {
            throw ScenarioError(where + ": psi does not kill exceptional class " + c.str());
        }
        const auto& e = y_side.components[j + 1];
        if (!e.local_curve_generator) {
            throw ScenarioError(where + ": component '" + e.name + "' must declare its local curve generator");
        }
        const auto g = *e.local_curve_generator;
        if (y_side.fiber->inclusion.apply(c) != e.inclusion.column(g)) {
            throw ScenarioError(where + ": exceptional class " + c.str() + " and the curve of '" + e.name +
                                "' differ in the total space");
        }
    }
}

ConifoldTransition ConifoldTransition::with_orders(const Orders& o) const
{
    auto t = *this;
    t.x_side.orders = o;
    t.y_side.orders = o;
    return t;
}

ConifoldTransition ConifoldTransition::with_tables(const TableSet& tables) const
{
    auto t = *this;
    t.x_side.tables = tables;
    t.y_side.tables = tables;
    return t;
}

std::vector<EffectiveClass> psi_fiber(const ConifoldTransition& t, const EffectiveClass& beta)
{
    const auto target = x_total(t, beta);
    const auto& w = t.x_side.total.degree_weights();
    const auto& incl = t.x_side.components[0].inclusion;
    IntVector weights;
    for (std::size_t g = 0; g < incl.source_rank(); ++g) {
        weights.push_back(pair(w, incl.column(g)));
    }
    std::vector<EffectiveClass> out;
    for (const auto& c : classes_with_weighted_degree(weights, t.x_side.total.degree(target))) {
        if (incl.apply(c) != target.coords()) {
            continue;
        }
        if (auto by = gysin_preimage(c, t.phi)) {
            if (t.psi.apply(*by) != beta.coords()) {
                throw ScenarioError("transition '" + t.name + "': fiber class " + by->str() +
                                    " does not push forward to " + beta.str());
            }
            out.push_back(*by);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

TruncatedSeries ytilde_series(const ConifoldTransition& t, Side side, const EffectiveClass& beta_y,
                              const InsertionList& ins)
{
    auto c = t.phi.apply_effective(beta_y);
    if (!c) {
        return TruncatedSeries(variable_of(side));
    }
    TableKey key{t.x_side.components[0].name, *c, insertion_key(ins), empty_boundary(t)};
    return lookup_relative(t.x_side, side, key);
}

TransitionReport simplify_conifold_X(const ConifoldTransition& t, const EffectiveClass& beta, const InsertionList& ins)
{
    TransitionReport rep;
    const auto fiber = psi_fiber(t, beta);
    const auto total = x_total(t, beta);
    for (auto side : {Side::gw, Side::pt}) {
        const auto lhs = assemble_absolute(t.x_side, side, total, ins);

        CheckRecord filt;
        filt.name = "x-reduction-filter-" + to_string(side);
        filt.inputs = {{"class", beta.str()}, {"insertions", insertion_key(ins)}};
        bool nontrivial = false;
        for (const auto& e : lhs.splittings.log) {
            filt.notes.push_back(std::string(e.kept ? "kept " : "rejected ") + e.splitting.str() + ": " + e.reason);
            if (!e.kept) {
                continue;
            }
            for (std::size_t j = 1; j < e.splitting.classes.size(); ++j) {
                if (!e.splitting.classes[j].is_zero() || e.splitting.boundary_sizes[j - 1] != 0) {
                    nontrivial = true;
                }
            }
        }
        filt.verdict = nontrivial ? Verdict::fail : (lhs.splittings.log.empty() ? Verdict::vacuous : Verdict::pass);
        if (nontrivial) {
            filt.notes.push_back("a splitting with a nonzero class on a quadric survived");
        }
        rep.add(std::move(filt));

        CheckRecord rec;
        rec.name = "x-reduction-" + to_string(side);
        rec.inputs = {{"class", beta.str()}, {"insertions", insertion_key(ins)}, {"fiber", class_list(fiber)}};
        rec.lhs_label = "degeneration sum for Z(X)";
        rec.rhs_label = "sum over psi-fiber of Z(Ytilde/E)";
        TruncatedSeries rhs(variable_of(side), side_order(t, side));
        for (const auto& by : fiber) {
            rhs = rhs + ytilde_series(t, side, by, ins);
        }
        compare_series(rec, lhs.series, rhs, side_order(t, side));
        rep.add(std::move(rec));
    }
    return rep;
}

TransitionReport simplify_conifold_Y(const ConifoldTransition& t, const EffectiveClass& beta_y,
                                     const InsertionList& ins)
{
    TransitionReport rep;
    const auto total = y_total(t, beta_y);
    for (auto side : {Side::gw, Side::pt}) {
        const auto lhs = assemble_absolute(t.y_side, side, total, ins);
        CheckRecord rec;
        rec.name = "y-reduction-" + to_string(side);
        rec.inputs = {{"class", beta_y.str()}, {"insertions", insertion_key(ins)}};
        rec.lhs_label = "degeneration sum for Z(Y)";
        rec.rhs_label = "sum of Z(Ytilde/E) times local curve factors";
        TruncatedSeries rhs(variable_of(side), side_order(t, side));
        std::size_t terms = 0;
        for_each_exceptional_split(t, beta_y, [&](const std::vector<std::int64_t>& m, const EffectiveClass& rest) {
            if (!t.phi.apply_effective(rest)) {
                return;
            }
            TruncatedSeries term = ytilde_series(t, side, rest, ins);
            for (std::size_t j = 0; j < t.k(); ++j) {
                term = term * local_factor(t, side, j, m[j]);
            }
            rhs = rhs + term;
            ++terms;
        });
        rec.notes.push_back(std::to_string(terms) + " terms on the right");
        compare_series(rec, lhs.series, rhs, side_order(t, side));
        rep.add(std::move(rec));
    }
    return rep;
}

GradedSeries compute_exceptional_series(const ConifoldTransition& t, Side side, std::int64_t degree_bound)
{
    GradedSeries out(t.y_lattice, degree_bound, variable_of(side));
    std::vector<std::int64_t> m(t.k(), 0);
    std::function<void(std::size_t, const EffectiveClass&, const TruncatedSeries&)> rec =
        [&](std::size_t j, const EffectiveClass& cls, const TruncatedSeries& s) {
            if (j == t.k()) {
                out.add_to(cls, s);
                return;
            }
            EffectiveClass cur = cls;
            for (std::int64_t n = 0; t.y_lattice.degree(cur) <= degree_bound; ++n) {
                rec(j + 1, cur, s * local_factor(t, side, j, n));
                cur = cur + t.exceptional[j];
            }
        };
    rec(0, EffectiveClass::zero(t.y_lattice.rank()), TruncatedSeries::constant(variable_of(side), GaussianRational(1)));
    return out;
}

GradedSeries compute_ratio(const GradedSeries& numerator, const ConifoldTransition& t, Side side)
{
    const auto exc = compute_exceptional_series(t, side, numerator.degree_bound());
    return gmul(numerator, ginvert(exc));
}

GradedSeries assemble_y_series(const ConifoldTransition& t, Side side, const InsertionList& ins,
                               std::int64_t degree_bound)
{
    GradedSeries out(t.y_lattice, degree_bound, variable_of(side));
    for (const auto& c : t.y_lattice.classes_up_to(degree_bound)) {
        out.set(c, assemble_absolute(t.y_side, side, y_total(t, c), ins).series);
    }
    return out;
}

TransitionReport check_ratio(const ConifoldTransition& t, Side side, const InsertionList& ins)
{
    require_restriction_zero(t, ins);
    TransitionReport rep;
    const auto bound = t.orders().degree_bound;
    const auto order = side_order(t, side);
    const auto classes = t.y_lattice.classes_up_to(bound);
    // poles of the exceptional series eat u-precision, so divide at a higher working order
    const auto work = t.with_orders({t.orders().q_order, t.orders().u_order + 4 * static_cast<int>(bound) + 4,
                                     static_cast<int>(bound)});
    const auto num = assemble_y_series(work, side, ins, bound);
    const auto exc = compute_exceptional_series(work, side, bound);
    const auto ratio = gmul(num, ginvert(exc));

    GradedSeries expected(t.y_lattice, bound, variable_of(side));
    for (const auto& c : classes) {
        expected.set(c, ytilde_series(t, side, c, ins));
    }
    auto r = compare_graded("ratio-" + to_string(side), ratio, expected, classes, order);
    r.inputs = {{"degree_bound", std::to_string(bound)}, {"insertions", insertion_key(ins)}};
    r.lhs_label = "Z(Y) / exceptional series";
    r.rhs_label = "Z(Ytilde/E) at phi^! classes";
    rep.add(std::move(r));

    auto round = compare_graded("ratio-roundtrip-" + to_string(side), gmul(ratio, exc), num, classes,
                                side_order(work, side));
    round.inputs = {{"degree_bound", std::to_string(bound)}};
    round.lhs_label = "ratio times exceptional series";
    round.rhs_label = "Z(Y)";
    rep.add(std::move(round));

    // Largest X-degree whose whole psi-fiber sits below the Y-degree bound.
    std::int64_t xbound = -1;
    for (std::int64_t d = 0; d <= bound; ++d) {
        bool ok = true;
        for (const auto& b : t.x_lattice.classes_up_to(d)) {
            for (const auto& by : psi_fiber(t, b)) {
                ok = ok && t.y_lattice.degree(by) <= bound;
            }
        }
        if (!ok) {
            break;
        }
        xbound = d;
    }
    CheckRecord push;
    push.name = "ratio-pushforward-" + to_string(side);
    if (xbound < 0) {
        push.notes.push_back("no X-degree has its fiber inside the Y-degree bound");
        push.verdict = Verdict::vacuous;
        rep.add(std::move(push));
        return rep;
    }
    const auto pushed = pushforward_classes(ratio, t.psi, t.x_lattice, {xbound, true});
    GradedSeries direct(t.x_lattice, xbound, variable_of(side));
    const auto xclasses = t.x_lattice.classes_up_to(xbound);
    for (const auto& b : xclasses) {
        direct.set(b, assemble_absolute(t.x_side, side, x_total(t, b), ins).series);
    }
    push = compare_graded("ratio-pushforward-" + to_string(side), pushed, direct, xclasses, order);
    push.inputs = {{"x_degree_bound", std::to_string(xbound)}};
    push.lhs_label = "psi_* of the ratio";
    push.rhs_label = "degeneration sum for Z(X)";
    push.notes.push_back("classes off the phi^!-effective locus are taken as zero; fibers are complete up to X-degree " +
                         std::to_string(xbound));
    rep.add(std::move(push));
    return rep;
}

namespace {

// Too few known coefficients for any fit: nothing was tested.
bool too_short(const TruncatedSeries& pt) { return known_coefficients(pt) <= kSlack; }

} // namespace

std::optional<TruncatedSeries> pt_to_u(const TruncatedSeries& pt, std::int64_t c, int u_order, int slack,
                                       std::optional<RationalFunction>* fit)
{
    auto f = reconstruct_rational(pt, slack);
    if (fit) {
        *fit = f;
    }
    if (!f) {
        return std::nullopt;
    }
    const auto s = substitute_q(*f, HalfInteger(u_order));
    if (s.is_zero()) {
        return s;
    }
    const auto v = s.valuation()->as_integer();
    const auto e = exp_linear(GaussianRational(0, Rational(-1)), Rational(static_cast<long>(c), 2),
                              HalfInteger(u_order - std::min<std::int64_t>(v, 0)));
    return (s * e).truncated(HalfInteger(u_order));
}

CheckRecord check_key_equality(const ConifoldTransition& t, const EffectiveClass& beta_y, const InsertionList& ins,
                               const std::vector<WeightedPartition>& boundary)
{
    CheckRecord rec;
    rec.name = "key-equality";
    rec.inputs = {{"class", beta_y.str()}, {"insertions", insertion_key(ins)}};
    rec.lhs_label = "(-q)^{-c/2} Z_PT(Ytilde/E) at q=-e^{iu}";
    rec.rhs_label = "(-iu)^{c+l(eta)-|eta|} Z'_GW(Ytilde/E)";
    const int u_order = t.orders().u_order;
    auto tilde = t.phi.apply_effective(beta_y);
    if (!tilde) {
        rec.notes.push_back("phi^! of " + beta_y.str() + " is not effective");
        rec.verdict = Verdict::vacuous;
        return rec;
    }
    auto bd = boundary.empty() ? empty_boundary(t) : boundary;
    if (bd.size() != t.k()) {
        throw ScenarioError("key equality needs one boundary partition per exceptional divisor");
    }
    std::int64_t shift = pair(t.c1_ytilde, *tilde);
    for (const auto& eta : bd) {
        shift += eta.length() - eta.size();
        rec.inputs.emplace_back("boundary", eta.str());
    }
    rec.inputs.emplace_back("c1", std::to_string(pair(t.c1_ytilde, *tilde)));
    const TableKey key{t.x_side.components[0].name, *tilde, insertion_key(ins), bd};
    const auto pt = lookup_relative(t.x_side, Side::pt, key);
    const auto gw = lookup_relative(t.x_side, Side::gw, key);

    std::optional<RationalFunction> fit;
    auto pt_u = pt_to_u(pt, pair(t.c1_ytilde, *tilde), u_order, kSlack, &fit);
    if (!pt_u) {
        rec.notes.push_back("PT series known below q^" + pt.order().str() + " is not Pade-reconstructable with slack " +
                            std::to_string(kSlack));
        rec.verdict = too_short(pt) ? Verdict::vacuous : Verdict::fail;
        return rec;
    }
    rec.notes.push_back("PT side reconstructed as " + fit->str());
    GaussianRational pw(1);
    const GaussianRational minus_i(0, Rational(-1));
    for (std::int64_t n = 0; n < (shift < 0 ? -shift : shift); ++n) {
        pw = pw * minus_i;
    }
    if (shift < 0) {
        pw = GaussianRational(1) / pw;
    }
    const auto gw_side = gw * TruncatedSeries::monomial(Variable::u, HalfInteger(shift), pw);
    compare_series(rec, *pt_u, gw_side, HalfInteger(u_order));
    return rec;
}

StringReduction apply_string_equation(Side side, const InsertionList& ins)
{
    StringReduction r;
    r.insertions = ins;
    auto it = std::find_if(r.insertions.begin(), r.insertions.end(), [](const Insertion& i) { return i.is_unit(); });
    if (it == r.insertions.end()) {
        r.note = "no tau_0(1) insertion";
        return r;
    }
    if (side == Side::pt) {
        r.zero = true;
        r.note = "PT invariants with a tau_0(1) insertion vanish";
        return r;
    }
    r.insertions.erase(it);
    r.reduced = true;
    r.note = "string equation removes one tau_0(1); the GW invariant reduces to one with fewer insertions";
    return r;
}

TransitionReport run_main_theorem(const ConifoldTransition& t, const EffectiveClass& beta, const InsertionList& ins)
{
    TransitionReport rep;
    std::vector<std::string> string_notes;
    InsertionList used = ins;
    for (;;) {
        auto gw = apply_string_equation(Side::gw, used);
        if (!gw.reduced) {
            break;
        }
        string_notes.push_back(apply_string_equation(Side::pt, used).note);
        string_notes.push_back(gw.note);
        used = gw.insertions;
    }
    require_restriction_zero(t, used);
    const int u_order = t.orders().u_order;
    const auto fiber = psi_fiber(t, beta);

    for (const auto& by : fiber) {
        rep.add(check_key_equality(t, by, used));
    }

    CheckRecord pre;
    pre.name = "prefactor-constancy";
    pre.inputs = {{"class", beta.str()}};
    pre.lhs_label = "c1 of Ytilde on phi^! beta_Y";
    pre.rhs_label = "c1 of X on beta";
    const auto cx = pair(t.c1_x, beta);
    bool all = true;
    for (const auto& by : fiber) {
        const auto cy = pair(t.c1_ytilde, t.phi.apply(by));
        all = all && cy == cx;
        pre.rows.push_back({by.str(), std::to_string(cy), std::to_string(cx), cy == cx});
    }
    pre.verdict = fiber.empty() ? Verdict::vacuous : (all ? Verdict::pass : Verdict::fail);
    rep.add(std::move(pre));

    rep.add(simplify_conifold_X(t, beta, used));

    CheckRecord x;
    x.name = "x-correspondence";
    x.inputs = {{"class", beta.str()}, {"insertions", insertion_key(used)}, {"u_order", std::to_string(u_order)},
                {"q_order", std::to_string(t.orders().q_order)}};
    x.lhs_label = "(-q)^{-c/2} Z_PT(X) at q=-e^{iu}";
    x.rhs_label = "(-iu)^c Z'_GW(X)";
    for (auto& n : string_notes) {
        x.notes.push_back(n);
    }
    const auto total = x_total(t, beta);
    const auto zpt = assemble_absolute(t.x_side, Side::pt, total, used).series;
    const auto zgw = assemble_absolute(t.x_side, Side::gw, total, used).series;
    std::optional<RationalFunction> fit;
    auto pt_u = pt_to_u(zpt, cx, u_order, kSlack, &fit);
    if (!pt_u) {
        x.notes.push_back("X-side PT series known below q^" + zpt.order().str() +
                          " is not Pade-reconstructable with slack " + std::to_string(kSlack));
        x.verdict = too_short(zpt) ? Verdict::vacuous : Verdict::fail;
        rep.add(std::move(x));
        return rep;
    }
    x.notes.push_back("X-side PT series is Pade-reconstructable from coefficients below q^" + zpt.order().str() +
                      " with slack " + std::to_string(kSlack) + ": " + fit->str() +
                      " (a finite-order check, not a proof of rationality)");
    if (cx < 0) {
        throw ScenarioError("negative c1 on an X-class is not supported");
    }
    GaussianRational pw(1);
    for (std::int64_t n = 0; n < cx; ++n) {
        pw = pw * GaussianRational(0, Rational(-1));
    }
    compare_series(x, *pt_u, zgw * TruncatedSeries::monomial(Variable::u, HalfInteger(cx), pw), HalfInteger(u_order));
    rep.add(std::move(x));
    return rep;
}

} // namespace gwpt
