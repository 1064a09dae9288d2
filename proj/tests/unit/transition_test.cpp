#include "doctest.h"

#include "gwpt/error.hpp"
#include "gwpt/fixtures.hpp"
#include "gwpt/local_models.hpp"
#include "gwpt/transition.hpp"
#include "helpers.hpp"

using namespace th;
using gwpt::EffectiveClass;
using gwpt::Side;
using gwpt::Verdict;

namespace {

const gwpt::ConifoldTransition& toy()
{
    static const auto t = gwpt::make_conifold_toy({32, 6, 4});
    return t;
}

std::string dump(const gwpt::TransitionReport& r)
{
    std::string out;
    for (const auto& rec : r.records) {
        out += rec.name + " " + gwpt::to_string(rec.verdict) + "\n";
        for (const auto& n : rec.notes) {
            out += "  " + n + "\n";
        }
        for (const auto& row : rec.rows) {
            if (!row.equal) {
                out += "  " + row.exponent + ": " + row.lhs + " vs " + row.rhs + "\n";
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("toy validates")
{
    CHECK_NOTHROW(toy().validate());
}

TEST_CASE("psi fiber of the toy")
{
    // a h' + j C with j <= a
    for (int a = 0; a <= 3; ++a) {
        auto f = gwpt::psi_fiber(toy(), EffectiveClass({a}));
        REQUIRE(f.size() == static_cast<std::size_t>(a + 1));
        for (int j = 0; j <= a; ++j) {
            CHECK(f[j] == EffectiveClass({a, j}));
        }
    }
}

TEST_CASE("quadric filter keeps only trivial splittings")
{
    for (int a = 0; a <= 4; ++a) {
        const EffectiveClass total({a, a});
        for (auto side : {Side::gw, Side::pt}) {
            auto r = gwpt::enumerate_splittings(toy().x_side, total, side, {});
            // brute force: (a, r, s) + m l with r + s + m = a; keep exactly m = 0
            CHECK(r.log.size() == static_cast<std::size_t>((a + 1) * (a + 2) / 2));
            CHECK(r.kept.size() == static_cast<std::size_t>(a + 1));
            for (const auto& e : r.log) {
                CHECK(e.kept == e.splitting.classes[1].is_zero());
            }
        }
    }
}

TEST_CASE("x-side reduction")
{
    for (int a = 0; a <= 3; ++a) {
        auto rep = gwpt::simplify_conifold_X(toy(), EffectiveClass({a}), {});
        INFO(dump(rep));
        CHECK(rep.verdict == Verdict::pass);
    }
    auto rep = gwpt::simplify_conifold_X(toy(), EffectiveClass({2}), {gwpt::toy_divisor_insertion()});
    INFO(dump(rep));
    CHECK(rep.verdict == Verdict::pass);
}

TEST_CASE("y-side reduction")
{
    for (const auto& c : toy().y_lattice.classes_up_to(3)) {
        auto rep = gwpt::simplify_conifold_Y(toy(), c, {});
        INFO(c.str() << "\n" << dump(rep));
        CHECK(rep.verdict != Verdict::fail);
    }
    // exceptional class alone: the local curve series
    auto pt = gwpt::assemble_absolute(toy().y_side, Side::pt, EffectiveClass({0, 1, 0}), {}).series;
    CHECK(pt == gwpt::pt_local_curve(1, 32));
}

TEST_CASE("exceptional series and ratio")
{
    auto one = gwpt::compute_exceptional_series(toy(), Side::pt, 0);
    CHECK(one.entries().size() == 1);
    auto exc = gwpt::compute_exceptional_series(toy(), Side::pt, 2);
    CHECK(exc.at(EffectiveClass({0, 1})) == gwpt::pt_local_curve(1, 32));
    CHECK(exc.at(EffectiveClass({0, 2})) == gwpt::pt_local_curve(2, 32));
    CHECK(exc.at(EffectiveClass({1, 0})).is_zero());
    auto unit = gwpt::compute_ratio(exc, toy(), Side::pt);
    for (const auto& [c, s] : unit.entries()) {
        if (c.is_zero()) {
            CHECK(s.terms() == qs({{0, gr(1)}}).terms());
        } else {
            CHECK(s.is_zero());
        }
    }

    for (auto side : {Side::gw, Side::pt}) {
        auto rep = gwpt::check_ratio(toy(), side, {});
        INFO(dump(rep));
        CHECK(rep.verdict == Verdict::pass);
    }
}

TEST_CASE("key equality")
{
    for (const auto& c : toy().y_lattice.classes_up_to(4)) {
        if (c[1] > c[0]) {
            CHECK(gwpt::check_key_equality(toy(), c, {}).verdict == Verdict::vacuous);
            continue;
        }
        auto rec = gwpt::check_key_equality(toy(), c, {});
        CHECK(rec.verdict == Verdict::pass);
        if (c[0] > 0) {
            CHECK(gwpt::check_key_equality(toy(), c, {gwpt::toy_divisor_insertion()}).verdict == Verdict::pass);
        }
    }
}

TEST_CASE("string equation")
{
    const gwpt::Insertion unit{0, "1", 0, {}};
    const gwpt::Insertion g{0, "H", 2, {}};
    auto pt = gwpt::apply_string_equation(Side::pt, {unit});
    CHECK(pt.zero);
    auto gw = gwpt::apply_string_equation(Side::gw, {unit, g});
    CHECK(gw.reduced);
    CHECK(gw.insertions == gwpt::InsertionList{g});
    auto none = gwpt::apply_string_equation(Side::gw, {g});
    CHECK(!none.reduced);
    CHECK(none.insertions == gwpt::InsertionList{g});
}

TEST_CASE("main theorem on the toy")
{
    for (int a = 0; a <= 2; ++a) {
        auto rep = gwpt::run_main_theorem(toy(), EffectiveClass({a}), {});
        INFO(dump(rep));
        CHECK(rep.verdict == Verdict::pass);
    }
    auto rep = gwpt::run_main_theorem(toy(), EffectiveClass({2}), {gwpt::toy_divisor_insertion()});
    INFO(dump(rep));
    CHECK(rep.verdict == Verdict::pass);
}

TEST_CASE("restriction-zero branch only")
{
    const gwpt::Insertion h{1, "H", 2, {}};
    CHECK_THROWS_AS(gwpt::run_main_theorem(toy(), EffectiveClass({1}), {h}), gwpt::ScenarioError);
}
