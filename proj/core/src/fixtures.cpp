#include "gwpt/fixtures.hpp"

#include <memory>
#include <random>

#include "gwpt/local_models.hpp"
#include "gwpt/rational_function.hpp"

namespace gwpt {

namespace {

std::vector<Rational> row(std::initializer_list<long> xs)
{
    std::vector<Rational> out;
    for (auto x : xs) {
        out.emplace_back(x);
    }
    return out;
}

// Even cohomology of P^1 x P^1.
CohBasis quadric_surface_basis()
{
    return {{"1", "a", "b", "pt"},
            {0, 2, 2, 4},
            {row({0, 0, 0, 1}), row({0, 0, 1, 0}), row({0, 1, 0, 0}), row({1, 0, 0, 0})},
            {3, 2, 1, 0}};
}

CohBasis plane_basis()
{
    return {{"1", "H", "pt"}, {0, 2, 4}, {row({0, 0, 1}), row({0, 1, 0}), row({1, 0, 0})}, {2, 1, 0}};
}

ComponentGeometry component(std::string name, CurveClassLattice lattice, std::optional<IntVector> c1,
                            LatticeMap inclusion, bool filter = false,
                            std::optional<std::size_t> local = std::nullopt)
{
    ComponentGeometry c;
    c.name = std::move(name);
    c.lattice = std::move(lattice);
    c.c1 = std::move(c1);
    c.inclusion = std::move(inclusion);
    c.dimension_filter = filter;
    c.local_curve_generator = local;
    return c;
}

TruncatedSeries power(const TruncatedSeries& s, int n)
{
    auto out = TruncatedSeries::constant(s.variable(), GaussianRational(1));
    for (int i = 0; i < n; ++i) {
        out = out * s;
    }
    return out;
}

TruncatedSeries one_plus_q()
{
    return TruncatedSeries::from_terms(Variable::q, {{0, GaussianRational(1)}, {1, GaussianRational(1)}});
}

// a (1 - q) / (1 + q)
RationalFunction divisor_factor(int a)
{
    auto num = TruncatedSeries::from_terms(Variable::q, {{0, GaussianRational(a)}, {1, GaussianRational(-a)}});
    return RationalFunction(num, one_plus_q());
}

struct ToyGeometry {
    ConifoldTransition t;
    std::shared_ptr<RelativeInvariantTable> gw;
    std::shared_ptr<RelativeInvariantTable> pt;
};

ToyGeometry toy_geometry(const Orders& o)
{
    ToyGeometry g;
    auto& t = g.t;
    t.name = "resolved-conifold-toy";
    t.y_lattice = CurveClassLattice({1, 1});
    t.x_lattice = CurveClassLattice({1});
    t.ytilde_lattice = CurveClassLattice({1, 1, 1});
    t.psi = LatticeMap(MapKind::pushforward, 2, 1, {{1, 0}});
    t.phi = LatticeMap(MapKind::gysin, 2, 3, {{1, 0}, {0, 1}, {1, -1}}, {{1, -1, -1}});
    t.c1_y = {2, 0};
    t.c1_x = {2};
    t.c1_ytilde = {1, 1, 1};
    t.exceptional = {EffectiveClass({0, 1})};

    g.gw = std::make_shared<RelativeInvariantTable>();
    g.gw->side = Side::gw;
    g.pt = std::make_shared<RelativeInvariantTable>();
    g.pt->side = Side::pt;
    TableSet tables{g.gw, g.pt};

    auto& x = t.x_side;
    x.name = "X-degeneration";
    x.total = CurveClassLattice({1, 1});
    x.components.push_back(component("Ytilde", t.ytilde_lattice, IntVector{1, 1, 1}, LatticeMap(MapKind::inclusion, 3, 2, {{1, 0, 0}, {0, 1, 1}})));
    x.components.push_back(component("Q1", CurveClassLattice({1}), IntVector{3}, LatticeMap(MapKind::inclusion, 1, 2, {{0}, {1}}), true));
    x.divisors.push_back({"E1", 1, quadric_surface_basis(), {1, -1, -1}, {1}});
    x.fiber = FiberData{t.x_lattice, IntVector{2}, LatticeMap(MapKind::inclusion, 1, 2, {{1}, {1}})};
    x.tables = tables;
    x.orders = o;

    auto& y = t.y_side;
    y.name = "Y-degeneration";
    y.total = CurveClassLattice({1, 1, 1});
    y.components.push_back(component("Ytilde", t.ytilde_lattice, IntVector{1, 1, 1},
                            LatticeMap(MapKind::inclusion, 3, 3, {{1, 0, 0}, {0, 1, 0}, {0, 1, 1}})));
    y.components.push_back(component("Etilde1", CurveClassLattice({1, 1}), IntVector{0, 3},
                            LatticeMap(MapKind::inclusion, 2, 3, {{0, 0}, {1, 0}, {0, 1}}), true, 0));
    y.divisors.push_back({"E1", 1, quadric_surface_basis(), {1, -1, -1}, {0, 1}});
    y.fiber = FiberData{t.y_lattice, IntVector{2, 0}, LatticeMap(MapKind::inclusion, 2, 3, {{1, 0}, {0, 1}, {1, 0}})};
    y.tables = tables;
    y.orders = o;

    const TableKey ytilde0{"Ytilde", EffectiveClass::zero(3), "", {WeightedPartition()}};
    const TableKey q0{"Q1", EffectiveClass::zero(1), "", {WeightedPartition()}};
    for (const auto& k : {ytilde0, q0}) {
        g.gw->entries.insert_or_assign(k, TruncatedSeries::constant(Variable::u, GaussianRational(1)));
        g.pt->entries.insert_or_assign(k, TruncatedSeries::constant(Variable::q, GaussianRational(1)));
    }
    return g;
}

} // namespace

Insertion toy_divisor_insertion()
{
    return {1, "H", 2, {"Q1", "Etilde1"}};
}

ConifoldTransition make_conifold_toy(const Orders& o)
{
    auto g = toy_geometry(o);
    const int bound = o.degree_bound;
    const int u_work = o.u_order + 6 * bound + 8;
    const HalfInteger u_keep(o.u_order + 2 * bound + 4);
    const HalfInteger q_keep(o.q_order);
    const auto gone = gw_connected_multiple_cover(1, u_work);
    const auto q = TruncatedSeries::monomial(Variable::q, 1, GaussianRational(1));
    const std::string ins_key = insertion_key({toy_divisor_insertion()});

    for (int a = 0; a <= bound; ++a) {
        const GaussianRational sign(a % 2 == 0 ? 1 : -1);
        for (int j = 0; j <= a; ++j) {
            const EffectiveClass tilde({a, j, a - j});
            if (tilde.is_zero()) {
                continue;
            }
            // PT numerator over (1+q)^(2a+2)
            auto num = (power(q, 2 * a) * power(one_plus_q(), 2).scaled(GaussianRational(j + 1)) +
                        power(q, 2 * a + 1).scaled(GaussianRational(j)))
                           .scaled(sign);
            const auto den = power(one_plus_q(), 2 * a + 2);
            const RationalFunction pt(num, den);
            auto gw = (power(gone, a).scaled(GaussianRational(j + 1)) + power(gone, a + 1).scaled(GaussianRational(j)))
                          .shifted(HalfInteger(-2 * a))
                          .scaled(sign);
            const TableKey plain{"Ytilde", tilde, "", {WeightedPartition()}};
            g.pt->entries.insert_or_assign(plain, pt.expand(q_keep));
            g.gw->entries.insert_or_assign(plain, gw.truncated(u_keep));

            const auto f = divisor_factor(a);
            const RationalFunction pt_ins(num * f.numerator(), den * f.denominator());
            const TableKey with{"Ytilde", tilde, ins_key, {WeightedPartition()}};
            g.pt->entries.insert_or_assign(with, pt_ins.expand(q_keep));
            g.gw->entries.insert_or_assign(with, (gw * substitute_q(f, HalfInteger(u_work))).truncated(u_keep));
        }
    }
    return g.t;
}

namespace {

class Noise {
public:
    explicit Noise(std::uint32_t seed) : gen_(seed) {}

    int below(int n) { return static_cast<int>(gen_() % static_cast<std::uint32_t>(n)); }

    // A few nonzero coefficients in [-3, 3] at exponents in [lo, hi).
    TruncatedSeries series(Variable v, int lo, int hi, HalfInteger order)
    {
        std::vector<std::pair<HalfInteger, GaussianRational>> terms;
        const int n = 1 + below(3);
        for (int i = 0; i < n; ++i) {
            int c = below(6) - 3;
            if (c >= 0) {
                ++c;
            }
            terms.emplace_back(HalfInteger(lo + below(hi - lo)), GaussianRational(c));
        }
        // repeated exponents: keep the last draw
        std::map<std::int64_t, GaussianRational> uniq;
        for (const auto& [e, c] : terms) {
            uniq.insert_or_assign(e.twice(), c);
        }
        terms.clear();
        for (const auto& [e, c] : uniq) {
            terms.emplace_back(HalfInteger::from_twice(e), c);
        }
        return TruncatedSeries::from_terms(v, terms, order);
    }

private:
    std::mt19937 gen_;
};

} // namespace

ConifoldTransition make_conifold_toy_random(const Orders& o, std::uint32_t seed)
{
    auto g = toy_geometry(o);
    Noise noise(seed);
    const int bound = o.degree_bound;
    const std::string ins_key = insertion_key({toy_divisor_insertion()});
    for (int a = 0; a <= bound; ++a) {
        for (int j = 0; j <= a; ++j) {
            const EffectiveClass tilde({a, j, a - j});
            if (tilde.is_zero()) {
                continue;
            }
            for (const auto& key : {std::string(), ins_key}) {
                const TableKey k{"Ytilde", tilde, key, {WeightedPartition()}};
                g.pt->entries.insert_or_assign(k, noise.series(Variable::q, 0, o.q_order, o.q_order));
                g.gw->entries.insert_or_assign(
                    k, noise.series(Variable::u, -2 * a - 2, o.u_order, o.u_order + 2 * bound + 4));
            }
        }
    }
    return g.t;
}

DegenerationScenario make_synthetic_degeneration(const Orders& o, std::uint32_t seed)
{
    DegenerationScenario s;
    s.name = "synthetic";
    s.total = CurveClassLattice({1, 1});
    s.components.push_back(component("M0", CurveClassLattice({1, 1}), std::nullopt, LatticeMap(MapKind::inclusion, 2, 2, {{1, 0}, {0, 1}})));
    s.components.push_back(component("M1", CurveClassLattice({1}), std::nullopt, LatticeMap(MapKind::inclusion, 1, 2, {{0}, {1}})));
    s.divisors.push_back({"D1", 1, plane_basis(), {0, 1}, {1}});
    const Insertion h{0, "H", 2, {}};
    const Insertion p{1, "pt", 6, {}};
    s.insertions = {h, p};
    s.orders = o;

    auto gw = std::make_shared<RelativeInvariantTable>();
    gw->side = Side::gw;
    auto pt = std::make_shared<RelativeInvariantTable>();
    pt->side = Side::pt;
    Noise noise(seed);
    const std::vector<std::string> keys = {"", insertion_key({h}), insertion_key({p}), insertion_key({h, p})};

    for (std::size_t j = 0; j < 2; ++j) {
        const auto& comp = s.components[j];
        for (const auto& c : comp.lattice.classes_up_to(o.degree_bound)) {
            const int b = static_cast<int>(j == 0 ? c[1] : c[0]);
            for (const auto& key : keys) {
                if (c.is_zero()) {
                    if (key.empty()) {
                        const TableKey unit{comp.name, c, "", {WeightedPartition()}};
                        gw->entries.insert_or_assign(unit, TruncatedSeries::constant(Variable::u, GaussianRational(1)));
                        pt->entries.insert_or_assign(unit, TruncatedSeries::constant(Variable::q, GaussianRational(1)));
                    }
                    continue;
                }
                for (const auto& eta : enumerate_weighted_partitions(b, 3)) {
                    const TableKey k{comp.name, c, key, {eta}};
                    gw->entries.insert_or_assign(k, noise.series(Variable::u, -2, o.u_order, o.u_order));
                    pt->entries.insert_or_assign(k, noise.series(Variable::q, 0, o.q_order, o.q_order));
                }
            }
        }
    }
    s.tables = {gw, pt};
    return s;
}

KtildeTable make_synthetic_ktilde(int max_size, std::uint32_t seed, int u_order)
{
    KtildeTable k;
    Noise noise(seed);
    const GaussianRational i(0, Rational(1));
    for (int n = 1; n <= max_size; ++n) {
        for (const auto& alpha : enumerate_partitions(n)) {
            for (int m = 1; m <= n; ++m) {
                for (const auto& hat : enumerate_partitions(m)) {
                    const int d = ktilde_degree(alpha, hat);
                    if (d < 0) {
                        continue;
                    }
                    ChernPolynomial poly;
                    if (alpha == hat && alpha.length() == 1) {
                        // (iu)^(1-a)
                        const int e = 1 - n;
                        GaussianRational c(1);
                        for (int t = 0; t < -e; ++t) {
                            c = c / i;
                        }
                        poly.insert_or_assign(ChernMonomial{}, TruncatedSeries::monomial(Variable::u, e, c));
                    } else {
                        if (noise.below(3) == 0) {
                            continue;
                        }
                        const auto monos = chern_monomials_of_degree(d);
                        const int count = 1 + noise.below(2);
                        for (int t = 0; t < count; ++t) {
                            const auto& mono = monos[static_cast<std::size_t>(noise.below(static_cast<int>(monos.size())))];
                            poly.insert_or_assign(mono, noise.series(Variable::u, -n, u_order, u_order));
                        }
                    }
                    k.entries.insert_or_assign({alpha, hat}, std::move(poly));
                }
            }
        }
    }
    return k;
}

} // namespace gwpt
