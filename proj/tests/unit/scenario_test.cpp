#include "doctest.h"

#include <nlohmann/json.hpp>

#include "gwpt/error.hpp"
#include "gwpt/run.hpp"
#include "gwpt/scenario.hpp"
#include "helpers.hpp"

using namespace th;
using nlohmann::json;

namespace {

const std::string& toy_text()
{
    static const std::string text = gwpt::dump_scenario(gwpt::conifold_toy_scenario({16, 6, 2}));
    return text;
}

std::vector<gwpt::Diagnostic> diagnose(const json& j) { return gwpt::validate_scenario(gwpt::parse_scenario(j.dump())); }

bool mentions(const std::vector<gwpt::Diagnostic>& ds, const std::string& what)
{
    for (const auto& d : ds) {
        if (d.message.find(what) != std::string::npos) {
            return true;
        }
    }
    return false;
}

} // namespace

TEST_CASE("canonical form is a fixed point")
{
    const auto s = gwpt::parse_scenario(toy_text());
    CHECK(gwpt::validate_scenario(s).empty());
    CHECK(gwpt::dump_scenario(s) == toy_text());
    // reformatting does not change the digest of the canonical echo
    const auto again = gwpt::parse_scenario(json::parse(toy_text()).dump(8));
    CHECK(gwpt::dump_scenario(again) == toy_text());
}

TEST_CASE("series literals")
{
    json j = json::parse(toy_text());
    j["checks"] = json::array({{{"name", "a"},
                                {"kind", "assemble"},
                                {"degeneration", "x_side"},
                                {"side", "pt"},
                                {"classes", {{0, 0}}},
                                {"expect", {{"terms", {{1, 2, "3/4", "-1"}, {-2, 1, "0", "5"}}}, {"order", "7/2"}}}}});
    const auto s = gwpt::parse_scenario(j.dump());
    const auto& e = *s.checks.at(0).expect;
    CHECK(e.order() == HalfInteger::from_twice(7));
    CHECK(e.coefficient(HalfInteger::from_twice(1)) == GaussianRational(Rational(3, 4), Rational(-1)));
    CHECK(e.coefficient(-2) == gi(5));
    CHECK(e.size() == 2);

    j["checks"][0]["expect"]["terms"] = {{1, 3, "1", "0"}};
    CHECK_THROWS_WITH_AS(gwpt::parse_scenario(j.dump()), doctest::Contains("exponent denominator"),
                         gwpt::ScenarioError);
}

TEST_CASE("errors carry their location")
{
    json j = json::parse(toy_text());
    j["transition"]["x_side"]["components"][1]["colour"] = "red";
    CHECK_THROWS_WITH_AS(gwpt::parse_scenario(j.dump()),
                         doctest::Contains("/transition/x_side/components/1: unknown key 'colour'"),
                         gwpt::ScenarioError);
    CHECK_THROWS_AS(gwpt::parse_scenario("{\"name\": "), gwpt::ScenarioError);
    CHECK_THROWS_AS(gwpt::load_scenario("/nonexistent/scenario.json"), gwpt::IoError);
}

TEST_CASE("missing unit entry")
{
    json j = json::parse(toy_text());
    auto& pt = j["tables"]["pt"];
    for (auto it = pt.begin(); it != pt.end(); ++it) {
        if ((*it)["component"] == "Ytilde" && (*it)["class"] == json({0, 0, 0}) && !it->contains("insertions")) {
            pt.erase(it);
            break;
        }
    }
    const auto ds = diagnose(j);
    REQUIRE(!ds.empty());
    CHECK(mentions(ds, "as a convention"));
    CHECK(ds.front().location == "/transition");
}

TEST_CASE("odd divisor basis class")
{
    json j = json::parse(toy_text());
    j["transition"]["x_side"]["divisors"][0]["basis"]["degrees"][1] = 3;
    CHECK(mentions(diagnose(j), "odd"));
}

TEST_CASE("check declarations")
{
    json j = json::parse(toy_text());
    j["checks"].push_back({{"name", "local-correspondence/1"}, {"kind", "local-correspondence"}, {"degree", 1}});
    CHECK(mentions(diagnose(j), "duplicate check name"));
    j["checks"] = json::array({{{"kind", "main-theorem"}, {"insertions", "nope"}}});
    CHECK(mentions(diagnose(j), "unknown insertion set"));
    j["checks"] = json::array({{{"kind", "key-equality"}, {"classes", {{1}}}}});
    CHECK(mentions(diagnose(j), "wrong rank"));
    j["checks"] = json::array({{{"kind", "bar-diagonal"}}});
    CHECK(mentions(diagnose(j), "needs a ktilde section"));
    j["checks"] = json::array({{{"kind", "flop"}}});
    CHECK_THROWS_WITH_AS(gwpt::parse_scenario(j.dump()), doctest::Contains("unknown check kind"), gwpt::ScenarioError);
}

TEST_CASE("run reports")
{
    const auto s = gwpt::parse_scenario(toy_text());
    gwpt::RunOptions o;
    o.only = {"local-correspondence/1", "key-equality"};
    const auto a = gwpt::run_all(s, o);
    CHECK(a.checks.size() == 2);
    CHECK(a.verdict == gwpt::Verdict::pass);
    CHECK(gwpt::exit_code(a) == 0);
    CHECK(gwpt::render_report(a) == gwpt::render_report(gwpt::run_all(s, o)));
    CHECK(a.digest == gwpt::hex64(gwpt::fnv1a64(toy_text())));

    // no coefficient below u^-2 exists, so nothing is compared
    o.u_order = -2;
    o.only = {"local-correspondence/1"};
    const auto v = gwpt::run_all(s, o);
    CHECK(v.verdict == gwpt::Verdict::vacuous);
    CHECK(gwpt::exit_code(v) == 1);

    o.only = {"no-such-check"};
    CHECK_THROWS_AS(gwpt::run_all(s, o), gwpt::ScenarioError);
}

TEST_CASE("fnv1a")
{
    // published test vectors
    CHECK(gwpt::fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(gwpt::fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(gwpt::hex64(0xaf63dc4c8601ec8cull) == "af63dc4c8601ec8c");
}
