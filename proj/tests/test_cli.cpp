#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#ifndef CMACR_CLI_PATH
#define CMACR_CLI_PATH "./cmacr"
#endif

namespace {

int run(const std::string& args) {
    std::string cmd = std::string(CMACR_CLI_PATH) + " " + args +
                      " > /dev/null 2>&1";
    int st = std::system(cmd.c_str());
    return WIFEXITED(st) ? WEXITSTATUS(st) : -1;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    out << text;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Fixtures {
    Fixtures() {
        int rc = std::system("rm -rf cli_tmp && mkdir -p cli_tmp");
        (void)rc;
        write_file("cli_tmp/gaussian.json",
                   R"({"type":"gaussian","p1_db":5,"p2_db":5,"p3_db":5,)"
                   R"("gamma2":1,"eta2":10,"grid_n":9})");
        write_file("cli_tmp/binary.json",
                   R"({"type":"binary","eps1":0.05,"eps2":0.05,"eps3":0.2})");
        write_file("cli_tmp/cog_bad_r3.json",
                   R"({"type":"cognitive","p1_db":3,"p2_db":3,"p3_db":3,)"
                   R"("r3":3.0})");
        write_file("cli_tmp/over_cap.json",
                   R"({"type":"sim","eps1":0.1,"eps2":0.1,"eps3":0.1,"n":50,)"
                   R"("k1":20,"k2":2,"blocks":3,"trials":5,"seed":1})");
        write_file("cli_tmp/sim.json",
                   R"({"type":"sim","eps1":0,"eps2":0,"eps3":0,"n":12,)"
                   R"("k1":3,"k2":3,"blocks":3,"trials":20,"seed":5})");
        write_file("cli_tmp/junk.json", R"({"type":"gaussian","oops":true})");
    }
};

Fixtures fixtures;

}  // namespace

TEST_CASE("region command round trip") {
    CHECK(run("region --kind df --scenario cli_tmp/gaussian.json "
              "--out cli_tmp/df.csv") == 0);
    auto csv = slurp("cli_tmp/df.csv");
    CHECK(csv.find("r1,r2") != std::string::npos);
    CHECK(csv.find("# kind: df") != std::string::npos);

    CHECK(run("region --kind binary-df --scenario cli_tmp/binary.json "
              "--out cli_tmp/b.csv") == 0);
    CHECK(slurp("cli_tmp/b.csv").find("df_sum_max") != std::string::npos);
}

TEST_CASE("input errors exit with code 2") {
    CHECK(run("region --kind outer --scenario cli_tmp/binary.json "
              "--out /dev/null") == 2);
    CHECK(run("region --kind warp --scenario cli_tmp/binary.json "
              "--out /dev/null") == 2);
    CHECK(run("region --kind df --scenario cli_tmp/junk.json "
              "--out /dev/null") == 2);
    CHECK(run("figure --id 7 --out-dir cli_tmp") == 2);
    CHECK(run("rate --scheme df --pmin-db 10 --pmax-db 0 --step-db 1 "
              "--gamma2 1 --eta2 1 --out /dev/null") == 2);
    CHECK(run("region --kind df") == 2);  // missing required options
}

TEST_CASE("infeasible region exits with code 3") {
    CHECK(run("region --kind cognitive-full --scenario cli_tmp/cog_bad_r3.json "
              "--out /dev/null") == 3);
}

TEST_CASE("cap violations exit with code 4") {
    CHECK(run("sim --config cli_tmp/over_cap.json --out /dev/null") == 4);
}

TEST_CASE("sim writes report files") {
    CHECK(run("sim --config cli_tmp/sim.json --out cli_tmp/rep.json "
              "--csv cli_tmp/rep.csv") == 0);
    auto j = slurp("cli_tmp/rep.json");
    CHECK(j.find("\"relay_error_rate\": 0.0") != std::string::npos);
    auto c = slurp("cli_tmp/rep.csv");
    CHECK(c.find("relay_error_rate") != std::string::npos);
}

TEST_CASE("rate sweep row count") {
    CHECK(run("rate --scheme upper --pmin-db -10 --pmax-db 40 --step-db 1 "
              "--gamma2 0.1 --eta2 10 --out cli_tmp/up.csv") == 0);
    auto csv = slurp("cli_tmp/up.csv");
    int rows = 0;
    for (char ch : csv)
        if (ch == '\n') ++rows;
    CHECK(rows == 51 + 3 + 1);  // data + comments + header
}
