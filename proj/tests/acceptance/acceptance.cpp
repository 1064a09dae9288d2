// Acceptance suite: one PASS/FAIL line per criterion, exit status 0 iff all pass.
// Reference values come from test-side oracles (brute force here, or sympy output
// pasted below) and never from the engine routine under test.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gwpt/degeneration.hpp"
#include "gwpt/error.hpp"
#include "gwpt/fixtures.hpp"
#include "gwpt/graded_series.hpp"
#include "gwpt/ktilde.hpp"
#include "gwpt/local_models.hpp"
#include "gwpt/partitions.hpp"
#include "gwpt/rational_function.hpp"
#include "gwpt/transition.hpp"

using namespace gwpt;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> why;

    void expect(bool cond, const std::string& what)
    {
        if (!cond) {
            ok = false;
            if (why.size() < 8) {
                why.push_back(what);
            }
        }
    }
};

GaussianRational gr(const std::string& s) { return GaussianRational(parse_rational(s)); }

// i^n for any integer n
GaussianRational i_power(int n)
{
    static const GaussianRational table[4] = {GaussianRational(1), GaussianRational(0, 1), GaussianRational(-1),
                                              GaussianRational(0, -1)};
    return table[((n % 4) + 4) % 4];
}

// --- 1 ----------------------------------------------------------------------

// v^d coefficient of exp(sum_e v^e / (e (2 sin(eu/2))^2)), from sympy, exponents below u^12.
const std::map<int, std::vector<std::pair<int, std::string>>> kGwLocal = {
    {1, {{-2, "1"}, {0, "1/12"}, {2, "1/240"}, {4, "1/6048"}, {6, "1/172800"}, {8, "1/5322240"},
         {10, "691/118879488000"}}},
    {2, {{-4, "1/2"}, {-2, "5/24"}, {0, "71/1440"}, {2, "107/12096"}, {4, "1961/1451520"}, {6, "851/4561920"},
         {8, "4203611/174356582400"}, {10, "169957/57062154240"}}},
    {3, {{-6, "1/6"}, {-4, "1/6"}, {-2, "409/4320"}, {0, "1843/45360"}, {2, "107059/7257600"},
         {4, "230141/47900160"}, {6, "542883619/373621248000"}, {8, "27261877/65383718400"},
         {10, "670238665973/5820339732480000"}}}};

// prod_{n>=1} (1 - (-q)^n v)^n expanded with plain integers: coefficient of q^k v^d.
std::map<std::pair<int, int>, long long> pt_product(int q_order, int max_d)
{
    std::map<std::pair<int, int>, long long> acc{{{0, 0}, 1}};
    for (int n = 1; n < q_order; ++n) {
        for (int rep = 0; rep < n; ++rep) {
            // multiply by (1 - (-1)^n q^n v)
            const long long c = n % 2 == 0 ? -1 : 1;
            std::map<std::pair<int, int>, long long> next = acc;
            for (const auto& [key, val] : acc) {
                const int k = key.first + n;
                const int d = key.second + 1;
                if (k < q_order && d <= max_d) {
                    next[{k, d}] += c * val;
                }
            }
            acc = std::move(next);
        }
    }
    return acc;
}

Outcome criterion1()
{
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    const int q_order = 40;
    const auto prod = pt_product(q_order, 3);
    for (int d = 1; d <= 3; ++d) {
        const auto r = verify_local_correspondence(d, 12);
        o.expect(r.record.verdict == Verdict::pass, "d=" + std::to_string(d) + " correspondence did not pass");

        const auto gw = gw_disconnected_local(d, 12);
        auto want = TruncatedSeries(Variable::u, HalfInteger(12));
        for (const auto& [e, c] : kGwLocal.at(d)) {
            want = want + TruncatedSeries::monomial(Variable::u, e, gr(c));
        }
        o.expect(gw == want, "GW d=" + std::to_string(d) + " differs from the sympy series: " + gw.str());

        const auto pt = pt_local_curve(d, q_order);
        for (int k = 0; k < q_order; ++k) {
            auto it = prod.find({k, d});
            const long long c = it == prod.end() ? 0 : it->second;
            o.expect(pt.coefficient(k) == GaussianRational(c),
                     "PT d=" + std::to_string(d) + " q^" + std::to_string(k) + " differs from the product");
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.expect(secs < 10.0, "took " + std::to_string(secs) + "s");
    return o;
}

// --- 2 ----------------------------------------------------------------------

Outcome criterion2()
{
    Outcome o;
    const auto pt = pt_local_curve(1, 16);
    // q/(1+q)^2 = sum (-1)^(n+1) n q^n
    for (int n = 0; n < 16; ++n) {
        o.expect(pt.coefficient(n) == GaussianRational(n % 2 ? n : -n), "coefficient of q^" + std::to_string(n));
    }
    const auto f = rational_reconstruct(pt, 1, 2);
    o.expect(f.has_value(), "no (1,2) Pade fit");
    if (f) {
        // N/D == q/(1+q)^2  <=>  N (1+q)^2 == q D
        const auto opq = TruncatedSeries::from_terms(Variable::q, {{0, GaussianRational(1)}, {1, GaussianRational(1)}});
        const auto q = TruncatedSeries::monomial(Variable::q, 1, GaussianRational(1));
        o.expect(f->numerator() * opq * opq == q * f->denominator(), "fit is " + f->str());
        o.expect(check_q_inverse_symmetry(*f), "fit is not q <-> 1/q symmetric");
    }
    return o;
}

// --- 3 ----------------------------------------------------------------------

// Weighted partitions of d over k labels, as sorted (part, index) lists, by brute force.
void all_weighted(int d, int k, int max_part, std::vector<std::pair<int, int>>& cur,
                  std::vector<std::vector<std::pair<int, int>>>& out)
{
    if (d == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(d, max_part); p >= 1; --p) {
        for (int i = 0; i < k; ++i) {
            if (!cur.empty() && cur.back().first == p && cur.back().second > i) {
                continue;
            }
            cur.emplace_back(p, i);
            all_weighted(d - p, k, p, cur, out);
            cur.pop_back();
        }
    }
}

std::vector<std::vector<std::pair<int, int>>> weighted(int d, int k)
{
    std::vector<std::vector<std::pair<int, int>>> out;
    std::vector<std::pair<int, int>> cur;
    all_weighted(d, k, d, cur, out);
    return out;
}

WeightedPartition to_wp(const std::vector<std::pair<int, int>>& v)
{
    std::vector<WeightedPart> ps;
    for (auto [p, i] : v) {
        ps.push_back({p, static_cast<std::size_t>(i)});
    }
    return WeightedPartition(ps);
}

long long count_automorphisms(const std::vector<std::pair<int, int>>& v)
{
    std::vector<int> perm(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        perm[i] = static_cast<int>(i);
    }
    long long n = 0;
    do {
        bool fixes = true;
        for (std::size_t i = 0; i < v.size(); ++i) {
            fixes = fixes && v[static_cast<std::size_t>(perm[i])] == v[i];
        }
        n += fixes;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n;
}

Outcome criterion3()
{
    Outcome o;
    std::vector<CohBasis> bases = {
        {{"1", "pt"}, {0, 4}, {{0, 1}, {1, 0}}, {1, 0}},
        {{"a", "b"}, {2, 2}, {{1, 0}, {0, 1}}, {0, 1}},
    };
    for (const auto& b : bases) {
        b.validate();
        for (int d = 1; d <= 4; ++d) {
            const auto all = weighted(d, 2);
            for (const auto& eta : all) {
                // dual by hand
                std::vector<std::pair<int, int>> dual;
                for (auto [p, i] : eta) {
                    dual.emplace_back(p, static_cast<int>(b.duality[static_cast<std::size_t>(i)]));
                }
                std::sort(dual.begin(), dual.end(), [](auto x, auto y) {
                    return x.first != y.first ? x.first > y.first : x.second < y.second;
                });
                long long z = count_automorphisms(eta);
                for (auto [p, i] : eta) {
                    z *= p;
                }
                const int len = static_cast<int>(eta.size());
                for (const auto& nu : all) {
                    const Rational want = nu == dual ? Rational((d - len) % 2 == 0 ? 1 : -1) / Rational(static_cast<long>(z)) : Rational(0);
                    const auto got = nakajima_pairing(to_wp(eta), to_wp(nu), b);
                    o.expect(got == want, "<" + to_wp(eta).str(b) + ", " + to_wp(nu).str(b) + "> = " + to_string(got));
                }
            }
        }
    }
    for (int d = 1; d <= 6; ++d) {
        for (const auto& eta : weighted(d, 2)) {
            o.expect(aut_order(to_wp(eta)) == count_automorphisms(eta), "aut of " + to_wp(eta).str());
        }
    }
    return o;
}

// --- 4 ----------------------------------------------------------------------

// The synthetic degeneration summed directly: beta = (x, y) on M_0 + m on M_1 with
// y = m, all four placements of the two insertions, every weighted partition of m.
TruncatedSeries brute_force_pt(const DegenerationScenario& s, const EffectiveClass& total)
{
    const auto& table = s.tables.pt->entries;
    const auto& ins = s.insertions;
    const auto look = [&](const std::string& comp, const EffectiveClass& c, const InsertionList& l,
                          const WeightedPartition& eta) {
        if (c.is_zero()) {
            return l.empty() ? TruncatedSeries::constant(Variable::q, GaussianRational(1))
                             : TruncatedSeries(Variable::q);
        }
        return table.at(TableKey{comp, c, insertion_key(l), {eta}});
    };
    auto sum = TruncatedSeries(Variable::q, HalfInteger(s.orders.q_order));
    for (std::int64_t m = 0; 2 * m <= total[1]; ++m) {
        if (total[1] != 2 * m) {
            continue;
        }
        const EffectiveClass b0({total[0], m});
        const EffectiveClass b1({m});
        for (int mask = 0; mask < 4; ++mask) {
            InsertionList on0;
            InsertionList on1;
            for (std::size_t i = 0; i < ins.size(); ++i) {
                ((mask >> i) & 1 ? on1 : on0).push_back(ins[i]);
            }
            for (const auto& eta : weighted(static_cast<int>(m), 3)) {
                long long z = count_automorphisms(eta);
                int len = 0;
                for (auto [p, i] : eta) {
                    z *= p;
                    ++len;
                }
                std::vector<std::pair<int, int>> dual;
                for (auto [p, i] : eta) {
                    dual.emplace_back(p, 2 - i);
                }
                const int sign = (m - len) % 2 == 0 ? 1 : -1;
                const auto w = TruncatedSeries::monomial(Variable::q, -m, GaussianRational(sign * z));
                sum = sum + look("M0", b0, on0, to_wp(eta)) * w * look("M1", b1, on1, to_wp(dual));
            }
        }
    }
    return sum;
}

Outcome criterion4()
{
    Outcome o;
    const Orders orders{8, 8, 3};
    for (std::uint32_t seed : {1u, 2u, 3u}) {
        const auto s = make_synthetic_degeneration(orders, seed);
        s.validate();
        for (const auto& c : s.total.classes_up_to(orders.degree_bound)) {
            const auto got = assemble_absolute_pt(s, c);
            auto want = brute_force_pt(s, c);
            want = want.truncated(std::min(want.order(), HalfInteger(orders.q_order)));
            o.expect(got == want, "seed " + std::to_string(seed) + " class " + c.str() + ": " + got.str() +
                                      " vs brute force " + want.str());
        }

        const auto t = make_conifold_toy_random(orders, seed);
        t.validate();
        const auto num = assemble_y_series(t, Side::pt, {}, orders.degree_bound);
        const auto exc = compute_exceptional_series(t, Side::pt, orders.degree_bound);
        const auto ratio = compute_ratio(num, t, Side::pt);
        const auto back = gmul(ratio, exc);
        o.expect(back == num, "seed " + std::to_string(seed) + ": ratio * exceptional != numerator\n" + back.str() +
                                  "\nvs\n" + num.str());
    }
    return o;
}

// --- 5 ----------------------------------------------------------------------

Outcome criterion5(const ConifoldTransition& toy)
{
    Outcome o;
    const auto& x = toy.x_side;
    for (int a = 0; a <= 4; ++a) {
        const EffectiveClass total({a, a});
        // splittings by hand: Ytilde class (a, s, f) and m lines on the quadric with s + f + m = a
        std::set<std::pair<EffectiveClass, EffectiveClass>> all;
        std::set<std::pair<EffectiveClass, EffectiveClass>> trivial;
        for (int s = 0; s <= a; ++s) {
            for (int f = 0; s + f <= a; ++f) {
                const int m = a - s - f;
                all.insert({EffectiveClass({a, s, f}), EffectiveClass({m})});
                if (m == 0) {
                    trivial.insert({EffectiveClass({a, s, f}), EffectiveClass({0})});
                }
            }
        }
        for (auto side : {Side::gw, Side::pt}) {
            for (const InsertionList& ins : {InsertionList{}, InsertionList{toy_divisor_insertion()}}) {
                const auto r = enumerate_splittings(x, total, side, ins);
                std::set<std::pair<EffectiveClass, EffectiveClass>> logged;
                std::set<std::pair<EffectiveClass, EffectiveClass>> kept;
                for (const auto& e : r.log) {
                    const auto key = std::make_pair(e.splitting.classes[0], e.splitting.classes[1]);
                    logged.insert(key);
                    if (e.kept) {
                        kept.insert(key);
                        // l(eta) = 0 = beta_1 . E = |eta|
                        o.expect(e.splitting.boundary_sizes[0] == 0, "kept splitting with boundary");
                    }
                }
                const auto tag = "a=" + std::to_string(a) + " " + to_string(side) + " " + insertion_key(ins);
                o.expect(logged == all, tag + ": log differs from the hand enumeration");
                // at a = 0 an insertion on the class-0 piece kills the only term
                o.expect(std::includes(trivial.begin(), trivial.end(), kept.begin(), kept.end()) &&
                             (kept == trivial || (a == 0 && !ins.empty() && kept.empty())),
                         tag + ": kept set is wrong");
            }
        }
    }
    return o;
}

// --- 6 ----------------------------------------------------------------------

Outcome criterion6(const ConifoldTransition& toy)
{
    Outcome o;
    const InsertionList none;
    const InsertionList div{toy_divisor_insertion()};
    for (int a = 0; a <= 4; ++a) {
        for (const auto* ins : {&none, &div}) {
            if (a == 0 && !ins->empty()) {
                continue;
            }
            const auto rep = run_main_theorem(toy, EffectiveClass({a}), *ins);
            const auto tag = "a=" + std::to_string(a) + " " + insertion_key(*ins);
            o.expect(rep.verdict == Verdict::pass, tag + ": main theorem " + to_string(rep.verdict));
            bool pade = false;
            for (const auto& r : rep.records) {
                if (r.name != "x-correspondence") {
                    continue;
                }
                for (const auto& n : r.notes) {
                    pade = pade || n.find("is Pade-reconstructable") != std::string::npos;
                }
            }
            o.expect(pade, tag + ": X-side PT series not flagged as Pade-reconstructable");
        }
    }

    // one perturbed coefficient on a Ytilde entry must flip the verdict
    struct Poke {
        Side side;
        int a;
        int j;
        bool with_insertion;
        int exponent;
    };
    std::vector<Poke> pokes;
    for (int a = 1; a <= 4; ++a) {
        for (int j : {0, a}) {
            for (bool w : {false, true}) {
                pokes.push_back({Side::pt, a, j, w, a + 1});
                pokes.push_back({Side::pt, a, j, w, 40});
                pokes.push_back({Side::gw, a, j, w, -2 * a + 2});
            }
        }
    }
    for (const auto& p : pokes) {
        const EffectiveClass tilde({p.a, p.j, p.a - p.j});
        const auto key_ins = p.with_insertion ? div : none;
        const TableKey key{"Ytilde", tilde, insertion_key(key_ins), {WeightedPartition()}};
        auto gw = std::make_shared<RelativeInvariantTable>(*toy.x_side.tables.gw);
        auto pt = std::make_shared<RelativeInvariantTable>(*toy.x_side.tables.pt);
        auto& entries = (p.side == Side::gw ? gw : pt)->entries;
        const auto& old = entries.at(key);
        const auto e = HalfInteger(p.exponent);
        entries.insert_or_assign(key, old.with_coefficient(e, old.coefficient(e) + GaussianRational(1)));
        const auto bad = toy.with_tables({gw, pt});
        const auto rep = run_main_theorem(bad, EffectiveClass({p.a}), key_ins);
        o.expect(rep.verdict == Verdict::fail, to_string(p.side) + " poke at " + tilde.str() + " " +
                                                   insertion_key(key_ins) + " exponent " + std::to_string(p.exponent) +
                                                   " left the verdict at " + to_string(rep.verdict));
    }
    return o;
}

// --- 7 ----------------------------------------------------------------------

std::vector<std::vector<int>> partitions_by_hand(int n, int max_part)
{
    if (n == 0) {
        return {{}};
    }
    std::vector<std::vector<int>> out;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        for (auto rest : partitions_by_hand(n - p, p)) {
            rest.insert(rest.begin(), p);
            out.push_back(rest);
        }
    }
    return out;
}

Outcome criterion7()
{
    Outcome o;
    std::mt19937 rng(2024);
    const std::vector<BarClass> pool = {{"1", 0}, {"H", 2}, {"L", 4}, {"pt", 6}, {"H'", 2}};
    for (std::uint32_t seed : {1u, 5u, 9u}) {
        const auto k = make_synthetic_ktilde(5, seed);
        o.expect(validate_Ktilde(k).empty(), "synthetic table is not valid");
        for (bool log : {false, true}) {
            for (int l = 1; l <= 4; ++l) {
                for (int trial = 0; trial < 5; ++trial) {
                    BarInput in;
                    for (int j = 0; j < l; ++j) {
                        in.alpha.push_back(1);
                        in.gammas.push_back(pool[rng() % pool.size()]);
                    }
                    const auto out = bar_transform(in, k, {log});
                    // the identity written out: one term, one tau_0(gamma_j) per j, coefficient 1
                    bool same = out.size() == 1 && out[0].coefficient == TruncatedSeries::constant(Variable::u, 1) &&
                                out[0].factors.size() == static_cast<std::size_t>(l);
                    if (same) {
                        std::multiset<std::size_t> seen;
                        for (const auto& f : out[0].factors) {
                            same = same && f.hat == IntPartition({1}) && f.cls.chern.is_one() &&
                                   f.cls.gammas.size() == 1;
                            if (!f.cls.gammas.empty()) {
                                seen.insert(f.cls.gammas[0]);
                            }
                        }
                        for (int j = 0; j < l; ++j) {
                            same = same && seen.count(static_cast<std::size_t>(j)) == 1;
                        }
                    }
                    o.expect(same, "alpha = (1^" + std::to_string(l) + ") is not fixed");
                }
            }
        }
        for (int n = 1; n <= 5; ++n) {
            const auto parts = partitions_by_hand(n, n);
            for (int trial = 0; trial < 4; ++trial) {
                const auto& alpha = parts[rng() % parts.size()];
                BarInput in;
                in.alpha = alpha;
                for (std::size_t j = 0; j < alpha.size(); ++j) {
                    in.gammas.push_back({"g" + std::to_string(j), 0});
                }
                const int e = static_cast<int>(alpha.size()) - n;
                bool found = false;
                for (const auto& t : bar_transform(in, k, {false})) {
                    bool diagonal = t.factors.size() == alpha.size();
                    for (const auto& f : t.factors) {
                        diagonal = diagonal && f.hat.length() == 1 && f.cls.chern.is_one() &&
                                   f.cls.gammas.size() == 1 && f.hat.parts()[0] == alpha[f.cls.gammas[0]];
                    }
                    if (!diagonal) {
                        continue;
                    }
                    found = true;
                    const auto v = t.coefficient.valuation();
                    o.expect(v && *v == HalfInteger(e) && t.coefficient.coefficient(e) == i_power(e),
                             "diagonal coefficient " + t.coefficient.str() + ", want (iu)^" + std::to_string(e));
                }
                o.expect(found, "no diagonal term");
            }
        }
    }
    return o;
}

// --- 8 ----------------------------------------------------------------------

Outcome criterion8(const ConifoldTransition& toy)
{
    Outcome o;
    const Insertion unit{0, "1", 0, {}};
    const Insertion h{0, "H", 2, {}};
    const Insertion p{1, "pt", 6, {}};
    for (const InsertionList& ins : {InsertionList{unit}, InsertionList{unit, h}, InsertionList{p, unit, unit}}) {
        const auto pt = apply_string_equation(Side::pt, ins);
        o.expect(pt.zero, "PT with tau_0(1) is not zero");
        const auto gw = apply_string_equation(Side::gw, ins);
        o.expect(gw.reduced && gw.insertions.size() + 1 == ins.size(), "GW list not shortened by one");
        const auto removed = std::count(gw.insertions.begin(), gw.insertions.end(), unit);
        o.expect(removed + 1 == std::count(ins.begin(), ins.end(), unit), "GW removed something else");
    }
    const auto none = apply_string_equation(Side::gw, {h, p});
    o.expect(!none.reduced && none.insertions.size() == 2, "reduced a list without tau_0(1)");
    // end to end through the transition
    const auto rep = run_main_theorem(toy, EffectiveClass({1}), {unit, toy_divisor_insertion()});
    o.expect(rep.verdict != Verdict::fail, "main theorem with tau_0(1) failed");
    return o;
}

} // namespace

int main()
{
    const auto toy = make_conifold_toy({64, 10, 4});
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"local GW/PT correspondence d=1..3 at u-order 12", criterion1},
        {"rationality of the d=1 PT series and q <-> 1/q symmetry", criterion2},
        {"Nakajima orthogonality and automorphism counts", criterion3},
        {"degeneration round trip and brute-force PT assembly", criterion4},
        {"only trivial quadric splittings survive the filter", [&] { return criterion5(toy); }},
        {"end-to-end conifold toy and perturbation sensitivity", [&] { return criterion6(toy); }},
        {"stationary bar transform and diagonal leading term", criterion7},
        {"string equations", [&] { return criterion8(toy); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.ok = false;
            o.why.push_back(std::string("exception: ") + e.what());
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].first << "\n";
        for (const auto& w : o.why) {
            std::cout << "        " << w << "\n";
        }
        failed += !o.ok;
    }
    return failed == 0 ? 0 : 1;
}
