#include <doctest.h>

#include <stdexcept>

#include "cmacr/sim.hpp"

using namespace cmacr;

namespace {

SimConfig base_config() {
    SimConfig c;
    c.scenario = {0.05, 0.05, 0.1};
    c.n = 12;
    c.k1 = 3;
    c.k2 = 3;
    c.blocks = 3;
    c.trials = 50;
    c.master_seed = 2024;
    return c;
}

}  // namespace

TEST_CASE("config validation") {
    SimConfig c = base_config();
    CHECK_NOTHROW(c.validate());

    SimConfig bad = c;
    bad.k1 = 0;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.k2 = 5;  // k2 > k1
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.n = 5;  // k1 + k2 > n
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.blocks = 1;
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
    bad = c;
    bad.k1 = 20;
    bad.n = 50;
    CHECK_THROWS_AS(bad.validate(), std::length_error);
}

TEST_CASE("noiseless runs are exactly error free") {
    SimConfig c = base_config();
    c.scenario = {0.0, 0.0, 0.0};
    for (auto dec : {RelayDecoder::xor_sum, RelayDecoder::joint}) {
        c.relay_decoder = dec;
        auto r = run_sim(c);
        CHECK(r.relay_error_rate == 0.0);
        CHECK(r.rx1_error_rate == 0.0);
        CHECK(r.rx2_error_rate == 0.0);
        CHECK(r.end_to_end_error_rate == 0.0);
    }
}

TEST_CASE("reports are bit-identical for identical configs") {
    SimConfig c = base_config();
    c.trials = 30;
    auto a = run_sim(c);
    auto b = run_sim(c);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_csv_row() == b.to_csv_row());

    c.master_seed += 1;
    auto d = run_sim(c);
    CHECK(a.to_json() != d.to_json());  // seed actually matters
}

TEST_CASE("moderate noise produces sane rates") {
    SimConfig c = base_config();
    c.n = 8;
    c.k1 = 1;
    c.k2 = 1;
    c.scenario = {0.1, 0.1, 0.1};
    c.trials = 200;
    auto r = run_sim(c);
    CHECK(r.relay_error_rate >= 0.0);
    CHECK(r.relay_error_rate <= 1.0);
    CHECK(r.rx1_error_rate <= 1.0);
    CHECK(r.rx2_error_rate <= 1.0);
    CHECK(r.end_to_end_error_rate <= 1.0);
    CHECK(r.end_to_end_error_rate > 0.0);  // this operating point does err
    CHECK(r.end_to_end_error_rate >= r.rx1_error_rate);
    CHECK(r.trials == 200);
    CHECK(r.blocks == 3);
}

TEST_CASE("xor relaying beats joint decoding at the infeasible sum rate") {
    // R1 + R2 = 0.5 exceeds the relay's sum capacity 1 - Hb(0.2) = 0.278,
    // while each individual rate 0.25 stays below it.
    SimConfig c;
    c.scenario = {0.05, 0.05, 0.2};
    c.n = 24;
    c.k1 = 6;
    c.k2 = 6;
    c.blocks = 4;
    c.trials = 300;
    c.master_seed = 7;
    c.relay_decoder = RelayDecoder::xor_sum;
    auto x = run_sim(c);
    c.relay_decoder = RelayDecoder::joint;
    auto j = run_sim(c);
    CHECK(x.relay_error_rate * 2.0 <= j.relay_error_rate);
}

TEST_CASE("degenerate second source") {
    SimConfig c = base_config();
    c.k2 = 0;
    c.scenario = {0.0, 0.0, 0.0};
    auto r = run_sim(c);
    CHECK(r.relay_error_rate == 0.0);
    CHECK(r.end_to_end_error_rate == 0.0);
}

TEST_CASE("json report carries the stable schema") {
    SimConfig c = base_config();
    c.trials = 5;
    auto r = run_sim(c);
    auto j = r.to_json();
    for (const char* key :
         {"relay_error_rate", "rx1_error_rate", "rx2_error_rate",
          "end_to_end_error_rate", "trials", "blocks", "seed", "config",
          "relay_decoder"})
        CHECK(j.find(key) != std::string::npos);
    CHECK(SimReport::csv_header().find("end_to_end_error_rate") !=
          std::string::npos);
}
