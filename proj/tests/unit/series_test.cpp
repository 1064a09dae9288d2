#include "doctest.h"

#include <random>

#include "gwpt/error.hpp"
#include "gwpt/rational_function.hpp"
#include "helpers.hpp"

using namespace th;
using gwpt::Error;

TEST_CASE("gaussian arithmetic")
{
    const GaussianRational i = GaussianRational::i();
    CHECK(i * i == gr(-1));
    CHECK((gr(1, 2) + gi(-3)).str() == "1/2-3i");
    CHECK(gwpt::pow(i, 3) == gi(-1));
    CHECK(gwpt::pow(gr(2), -2) == gr(1, 4));
    CHECK((gr(1) + i).inverse() == gr(1, 2) + gi(-1, 2));
    CHECK_THROWS_AS(GaussianRational().inverse(), gwpt::InversionError);
}

TEST_CASE("add")
{
    CHECK(qs({{0, 1}, {1, 1}}) + qs({{1, -1}}) == qs({{0, 1}}));
    CHECK(qs({{-1, 1}}) + qs({{-1, 1}}) == qs({{-1, 2}}));
    auto s = qs({{0, 1}}, 5) + qs({{1, 1}}, 3);
    CHECK(s.order() == HalfInteger(3));
    CHECK_THROWS_AS(qs({{0, 1}}) + us({{0, 1}}), gwpt::VariableMismatch);
}

TEST_CASE("mul")
{
    CHECK(qs({{0, 1}, {1, 1}}) * qs({{0, 1}, {1, -1}}) == qs({{0, 1}, {2, -1}}));
    CHECK(qs({{-1, 1}}) * qs({{1, 1}}) == qs({{0, 1}}));
    auto a = qs({{0, 1}, {1, 1}}, 3);
    CHECK(a * a == qs({{0, 1}, {1, 2}, {2, 1}}, 3));
    // order contraction with a positive valuation
    auto b = qs({{2, 1}}, 4) * qs({{0, 1}}, 3);
    CHECK(b.order() == HalfInteger(4));
}

TEST_CASE("invert")
{
    CHECK(invert(qs({{0, 1}, {1, 1}}), 4) == qs({{0, 1}, {1, -1}, {2, 1}, {3, -1}}, 4));
    CHECK(invert(qs({{0, 2}})) == qs({{0, gr(1, 2)}}));
    // q(1+q) known below q^5: inverse known below q^3
    auto a = qs({{1, 1}, {2, 1}}, 5);
    CHECK(invert(a) == qs({{-1, 1}, {0, -1}, {1, 1}, {2, -1}}, 3));
    CHECK_THROWS_AS(invert(qs({})), gwpt::InversionError);
}

TEST_CASE("mul by inverse is one on random series")
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 20; ++trial) {
        const int v = coeff(rng) % 3;
        std::vector<std::pair<HalfInteger, GaussianRational>> t;
        t.emplace_back(HalfInteger(v), GaussianRational(gwpt::Rational(coeff(rng) == 0 ? 1 : 3), coeff(rng)));
        for (int k = 1; k < 6; ++k) {
            t.emplace_back(HalfInteger::from_twice(2 * v + k), GaussianRational(coeff(rng), coeff(rng)));
        }
        auto a = TruncatedSeries::from_terms(Variable::q, t, HalfInteger(v + 8));
        auto p = a * invert(a);
        CHECK(p.order() == HalfInteger(8));
        CHECK(p.truncated(HalfInteger(8)) == qs({{0, 1}}, 8));
    }
}

TEST_CASE("exp_linear")
{
    const auto i = GaussianRational::i();
    CHECK(exp_linear(i, 1, 4) == us({{0, 1}, {1, gi(1)}, {2, gr(-1, 2)}, {3, gi(-1, 6)}}, 4));
    CHECK(exp_linear(i, gwpt::Rational(-1, 2), 5) ==
          us({{0, 1}, {1, gi(-1, 2)}, {2, gr(-1, 8)}, {3, gi(1, 48)}, {4, gr(1, 384)}}, 5));
    CHECK(exp_linear(GaussianRational(), 1, 6) == us({{0, 1}}, 6));
    for (int a = -3; a <= 3; ++a) {
        for (int b = -3; b <= 3; ++b) {
            CHECK(exp_linear(i, a + b, 9) == (exp_linear(i, a, 9) * exp_linear(i, b, 9)).truncated(9));
        }
    }
}

TEST_CASE("substitute_q")
{
    CHECK(substitute_q(qs({{1, 1}}), 4) == us({{0, -1}, {1, gi(-1)}, {2, gr(1, 2)}, {3, gi(1, 6)}}, 4));
    CHECK(substitute_q(qs({{0, 1}}), 4) == us({{0, 1}}, 4));
    CHECK_THROWS_AS(substitute_q(qs({{1, 1}}, 4), 4), gwpt::TruncationError);
    CHECK_THROWS_AS(substitute_q(TruncatedSeries::monomial(Variable::q, HalfInteger::from_twice(1), 1), 4),
                    gwpt::TruncationError);
    // ring map on polynomials
    auto a = qs({{-1, 2}, {0, 1}, {2, gi(3)}});
    auto b = qs({{1, -1}, {3, gr(1, 2)}});
    CHECK(substitute_q(a * b, 7) == (substitute_q(a, 7) * substitute_q(b, 7)).truncated(7));

    gwpt::RationalFunction f(qs({{1, 1}}), qs({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(substitute_q(f, 10) == us({{-2, 1},
                                     {0, gr(1, 12)},
                                     {2, gr(1, 240)},
                                     {4, gr(1, 6048)},
                                     {6, gr(1, 172800)},
                                     {8, gr(1, 5322240)}},
                                    10));
}

TEST_CASE("rational reconstruction")
{
    auto a = qs({{1, 1}, {2, -2}, {3, 3}, {4, -4}, {5, 5}}, 6);
    auto f = gwpt::rational_reconstruct(a, 1, 2);
    REQUIRE(f);
    CHECK(f->numerator() == qs({{1, 1}}));
    CHECK(f->denominator() == qs({{0, 1}, {1, 2}, {2, 1}}));
    CHECK(gwpt::check_q_inverse_symmetry(*f));

    auto one = gwpt::rational_reconstruct(qs({{0, 1}}, 1), 0, 0);
    REQUIRE(one);
    CHECK(one->numerator() == qs({{0, 1}}));

    // e^q below q^6 is not (1,1)-rational
    auto e = qs({{0, 1}, {1, 1}, {2, gr(1, 2)}, {3, gr(1, 6)}, {4, gr(1, 24)}, {5, gr(1, 120)}}, 6);
    CHECK_FALSE(gwpt::rational_reconstruct(e, 1, 1));

    CHECK_FALSE(gwpt::check_q_inverse_symmetry(gwpt::RationalFunction(qs({{1, 1}}), qs({{0, 1}}))));
    CHECK(gwpt::check_q_inverse_symmetry(gwpt::RationalFunction(qs({{0, 1}}), qs({{0, 1}}))));
    CHECK_THROWS_AS(gwpt::rational_reconstruct(qs({{0, 1}}, 2), 1, 1), gwpt::TruncationError);
}

TEST_CASE("reconstruct and re-expand")
{
    // (1 - 3q^2)/(1 + q - q^3) with a pole-free shift q^{-1}
    gwpt::RationalFunction g(qs({{-1, 1}, {1, -3}}), qs({{0, 1}, {1, 1}, {3, -1}}));
    auto s = g.expand(20);
    auto f = gwpt::reconstruct_rational(s);
    REQUIRE(f);
    CHECK(f->expand(20) == s);
    CHECK(f->numerator() == g.numerator());
    CHECK(f->denominator() == g.denominator());
}

TEST_CASE("printing")
{
    CHECK(qs({{0, 1}, {1, -1}, {2, 1}}, 3).str() == "1 - q + q^2 + O(q^3)");
    CHECK(us({{-2, 1}, {0, gr(1, 12)}}).str() == "u^-2 + 1/12");
    CHECK(qs({}).str() == "0");
}
