#include "doctest.h"

#include "gwpt/local_models.hpp"
#include "helpers.hpp"

using namespace th;

TEST_CASE("pt local curve")
{
    CHECK(gwpt::pt_local_curve(1, 5) == qs({{1, 1}, {2, -2}, {3, 3}, {4, -4}}, 5));
    CHECK(gwpt::pt_local_curve(2, 8) == qs({{3, -2}, {4, 4}, {5, -10}, {6, 16}, {7, -28}}, 8));
    CHECK(gwpt::pt_local_curve(3, 8) == qs({{5, 1}, {6, -6}, {7, 14}}, 8));
    auto f = gwpt::rational_reconstruct(gwpt::pt_local_curve(1, 5), 1, 2);
    REQUIRE(f);
    CHECK(f->numerator() == qs({{1, 1}}));
    CHECK(f->denominator() == qs({{0, 1}, {1, 2}, {2, 1}}));
}

TEST_CASE("gw multiple cover")
{
    CHECK(gwpt::gw_connected_multiple_cover(1, 4) == us({{-2, 1}, {0, gr(1, 12)}, {2, gr(1, 240)}}, 4));
    CHECK(gwpt::gw_connected_multiple_cover(2, 4) == us({{-2, gr(1, 8)}, {0, gr(1, 24)}, {2, gr(1, 120)}}, 4));
    for (int d = 1; d <= 4; ++d) {
        for (const auto& [k, c] : gwpt::gw_connected_multiple_cover(d, 12).terms()) {
            CHECK(k % 4 == 0);
        }
    }
    CHECK(gwpt::gw_disconnected_local(1, 8) == gwpt::gw_connected_multiple_cover(1, 8));
    CHECK(gwpt::gw_disconnected_local(2, 4) ==
          us({{-4, gr(1, 2)}, {-2, gr(5, 24)}, {0, gr(71, 1440)}, {2, gr(107, 12096)}}, 4));
    CHECK(gwpt::gw_disconnected_local(3, 2) ==
          us({{-6, gr(1, 6)}, {-4, gr(1, 6)}, {-2, gr(409, 4320)}, {0, gr(1843, 45360)}}, 2));
}

TEST_CASE("local correspondence")
{
    for (int d = 1; d <= 3; ++d) {
        auto r = gwpt::verify_local_correspondence(d, 12);
        CHECK(r.record.verdict == gwpt::Verdict::pass);
        CHECK(r.symmetric);
    }
    auto r1 = gwpt::verify_local_correspondence(1, 10);
    REQUIRE(r1.record.rows.size() >= 3);
    CHECK(r1.record.rows[0].exponent == "-2");
    CHECK(r1.record.rows[1].rhs == "1/12");
    CHECK(r1.record.rows[2].rhs == "1/240");

    auto pt = gwpt::pt_local_curve(2, 40);
    CHECK(gwpt::verify_local_correspondence(2, pt, 10).record.verdict == gwpt::Verdict::pass);
    auto tampered = pt.with_coefficient(5, pt.coefficient(5) + GaussianRational(1));
    CHECK(gwpt::verify_local_correspondence(2, tampered, 10).record.verdict == gwpt::Verdict::fail);

    CHECK(gwpt::verify_local_correspondence(1, -2).record.verdict == gwpt::Verdict::vacuous);
}
