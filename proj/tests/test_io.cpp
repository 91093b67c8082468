#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "cmacr/scenario_io.hpp"
#include "cmacr/selftest.hpp"

using namespace cmacr;

TEST_CASE("gaussian scenario parsing") {
    auto sf = parse_scenario(R"({"type":"gaussian","p1_db":5,"p2_db":5,
        "p3_db":5,"gamma2":5,"eta2":10})");
    auto* f = std::get_if<GaussianScenarioFile>(&sf);
    REQUIRE(f);
    CHECK(f->scenario.p1 == doctest::Approx(db_to_linear(5)).epsilon(1e-14));
    CHECK(f->scenario.gamma2 == 5.0);
    CHECK(f->grid_n == 17);
}

TEST_CASE("unknown fields are rejected") {
    CHECK_THROWS_AS(parse_scenario(R"({"type":"binary","eps1":0.1,"eps2":0.1,
        "eps3":0.1,"bogus":1})"),
                    ScenarioError);
    CHECK_THROWS_AS(parse_scenario(R"({"type":"warp"})"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario("not json"), ScenarioError);
    CHECK_THROWS_AS(parse_scenario(R"({"type":"gaussian","p1_db":5})"),
                    ScenarioError);
}

TEST_CASE("invariant violations become scenario errors") {
    CHECK_THROWS_AS(parse_scenario(R"({"type":"binary","eps1":0.7,"eps2":0.1,
        "eps3":0.1})"),
                    ScenarioError);
    CHECK_THROWS_AS(parse_scenario(R"({"type":"cognitive","p1_db":3,"p2_db":3,
        "p3_db":3,"r3":-1})"),
                    ScenarioError);
}

TEST_CASE("sim scenario parsing") {
    auto sf = parse_scenario(R"({"type":"sim","eps1":0.05,"eps2":0.05,
        "eps3":0.2,"n":24,"k1":6,"k2":6,"blocks":4,"trials":10,"seed":1,
        "relay_decoder":"joint"})");
    auto* f = std::get_if<SimScenarioFile>(&sf);
    REQUIRE(f);
    CHECK(f->config.relay_decoder == RelayDecoder::joint);
    CHECK(f->config.master_seed == 1);
    CHECK_NOTHROW(f->config.validate());

    CHECK_THROWS_AS(parse_scenario(R"({"type":"sim","eps1":0.05,"eps2":0.05,
        "eps3":0.2,"n":24,"k1":6,"k2":6,"blocks":4,"trials":10,"seed":1,
        "relay_decoder":"magic"})"),
                    ScenarioError);
}

TEST_CASE("csv formatting") {
    CsvTable t;
    t.comments = {"one", "two"};
    t.header = {"a", "b"};
    t.rows = {{1.0, 2.5}, {0.1, -3.0}};
    auto s = t.to_string();
    CHECK(s == "# one\n# two\na,b\n1,2.5\n0.1,-3\n");
    CHECK(s.find("\r") == std::string::npos);
}

TEST_CASE("boundary csv carries kind and scenario") {
    RegionBoundary b;
    b.kind = "df";
    b.scenario = "P1=1";
    b.points = {{0.0, 1.0}, {1.0, 0.0}};
    auto t = boundary_to_csv(b);
    bool has_kind = false;
    for (const auto& c : t.comments)
        if (c.find("kind: df") != std::string::npos) has_kind = true;
    CHECK(has_kind);
    CHECK(t.rows.size() == 2);
}

TEST_CASE("selftest passes clean and fails under fault injection") {
    SelftestOptions opt;
    auto clean = run_selftest(opt);
    for (const auto& r : clean) CHECK(r.passed);

    opt.perturb_hb = 1e-3;
    auto broken = run_selftest(opt);
    bool any_fail = false;
    for (const auto& r : broken) any_fail |= !r.passed;
    CHECK(any_fail);
}
