#include "doctest.h"

#include "gwpt/error.hpp"
#include "gwpt/fixtures.hpp"
#include "gwpt/ktilde.hpp"
#include "helpers.hpp"

using namespace th;
using gwpt::ChernMonomial;
using gwpt::IntPartition;

namespace {

IntPartition ip(std::vector<int> p) { return IntPartition(std::move(p)); }

// (iu)^n by repeated multiplication
GaussianRational iu_power_coeff(int n)
{
    GaussianRational c(1);
    const GaussianRational i = gi(1);
    for (int t = 0; t < (n < 0 ? -n : n); ++t) {
        c = n < 0 ? c / i : c * i;
    }
    return c;
}

} // namespace

TEST_CASE("chern monomials")
{
    CHECK(gwpt::chern_monomials_of_degree(0).size() == 1);
    CHECK(gwpt::chern_monomials_of_degree(3).size() == 3);
    // number of partitions of 6 into parts <= 3
    CHECK(gwpt::chern_monomials_of_degree(6).size() == 7);
    CHECK((ChernMonomial{2, 1, 0}.str()) == "c1^2 c2");
    CHECK(gwpt::ktilde_degree(ip({2, 1}), ip({1})) == 0);
}

TEST_CASE("validate ktilde")
{
    gwpt::KtildeTable k;
    CHECK(gwpt::validate_Ktilde(k).empty());

    k.entries[{ip({1}), ip({2})}].insert_or_assign(ChernMonomial{}, us({{0, gr(1)}}));
    auto v = gwpt::validate_Ktilde(k);
    REQUIRE(v.size() == 1);
    CHECK(v[0].what.find("|alpha| < |alpha_hat|") != std::string::npos);

    gwpt::KtildeTable mixed;
    // degree of (3),(1) is 2: c1^2 and c2 are fine, c1 is not
    auto& e = mixed.entries[{ip({3}), ip({1})}];
    e.insert_or_assign(ChernMonomial{2, 0, 0}, us({{-1, gr(1)}}));
    e.insert_or_assign(ChernMonomial{0, 1, 0}, us({{-1, gr(2)}}));
    CHECK(gwpt::validate_Ktilde(mixed).empty());
    e.insert_or_assign(ChernMonomial{1, 0, 0}, us({{0, gr(1)}}));
    CHECK(gwpt::validate_Ktilde(mixed).size() == 1);

    CHECK(gwpt::validate_Ktilde(gwpt::make_synthetic_ktilde(5, 7)).empty());
}

TEST_CASE("stationary insertions are unchanged")
{
    const auto k = gwpt::make_synthetic_ktilde(5, 11);
    const std::vector<gwpt::BarClass> classes = {{"H", 2}, {"pt", 6}, {"1", 0}, {"L", 4}};
    for (int l = 1; l <= 4; ++l) {
        gwpt::BarInput in;
        for (int j = 0; j < l; ++j) {
            in.alpha.push_back(1);
            in.gammas.push_back(classes[j]);
        }
        for (bool log : {false, true}) {
            CHECK(gwpt::bar_transform(in, k, {log}) == gwpt::bar_identity(in));
        }
    }
}

TEST_CASE("diagonal leading coefficient")
{
    const auto k = gwpt::make_synthetic_ktilde(5, 3);
    for (int n = 1; n <= 5; ++n) {
        for (const auto& alpha : gwpt::enumerate_partitions(n)) {
            gwpt::BarInput in;
            in.alpha = alpha.parts();
            in.gammas.assign(alpha.parts().size(), {"g", 0});
            const auto out = gwpt::bar_transform(in, k, {});
            const auto diag = gwpt::bar_identity(in).front().factors;
            bool found = false;
            for (const auto& t : out) {
                if (t.factors == diag) {
                    found = true;
                    const int e = alpha.length() - alpha.size();
                    CHECK(t.coefficient == us({{e, iu_power_coeff(e)}}));
                }
            }
            CHECK(found);
        }
    }
}

TEST_CASE("hand expanded bar transform")
{
    gwpt::KtildeTable k;
    const auto a = us({{0, gr(3)}, {2, gr(1, 2)}}, 4);
    const auto b = us({{-1, gr(-2)}}, 4);
    k.entries[{ip({1}), ip({1})}].insert_or_assign(ChernMonomial{}, us({{0, gr(1)}}));
    k.entries[{ip({2}), ip({2})}].insert_or_assign(ChernMonomial{}, us({{-1, gi(-1)}}));
    k.entries[{ip({2}), ip({1})}].insert_or_assign(ChernMonomial{1, 0, 0}, a);
    k.entries[{ip({2, 1}), ip({1})}].insert_or_assign(ChernMonomial{}, b);
    gwpt::BarInput in{{2, 1}, {{"H", 2}, {"H'", 2}}};
    const auto out = gwpt::bar_transform(in, k, {true});
    REQUIRE(out.size() == 3);
    std::vector<std::string> printed;
    for (const auto& t : out) {
        printed.push_back(gwpt::str(t, in, {true}));
    }
    std::sort(printed.begin(), printed.end());
    CHECK(printed[0] == "(-2u^-1 + O(u^4)) tau_0(H H')");
    CHECK(printed[1] == "(-iu^-1) tau_0(H') tau_1(H)");
    CHECK(printed[2] == "(3 + 1/2u^2 + O(u^4)) tau_0(H') tau_0(c1(T(-log D)) H)");

    // pt * H has complex degree 4 and drops out
    gwpt::BarInput high{{2, 1}, {{"pt", 6}, {"H", 2}}};
    CHECK(gwpt::bar_transform(high, k, {}).size() == 1);

    gwpt::BarInput odd{{1}, {{"x", 3}}};
    CHECK_THROWS_AS(gwpt::bar_transform(odd, k, {}), gwpt::ScenarioError);
}
