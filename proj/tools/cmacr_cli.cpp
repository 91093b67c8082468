// Command-line front end: rate-region computation, figure-data reproduction,
// Monte Carlo simulation and built-in self tests. All outputs are
// machine-readable CSV/JSON with deterministic contents; powers are given in
// dB on the command line and converted internally to linear scale.
//
// Exit codes: 0 success, 1 selftest failure, 2 input error, 3 infeasible
// region, 4 brute-force cap exceeded.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cmacr/scenario_io.hpp"
#include "cmacr/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitSelftest = 1;
constexpr int kExitInput = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitCap = 4;

struct CliError {
    int code;
    std::string message;
};

[[noreturn]] void fail(int code, const std::string& msg) {
    throw CliError{code, msg};
}

cmacr::CsvTable constraints_csv(const cmacr::BinaryConstraints& c,
                                const std::string& kind,
                                const std::string& scenario) {
    cmacr::CsvTable t;
    t.comments = {cmacr::tool_version(), "kind: " + kind,
                  "scenario: " + scenario};
    t.header = {"r1_max", "r2_max", "sum_max"};
    std::vector<double> row{c.r1_max, c.r2_max, c.sum_max};
    if (c.df) {
        t.header.push_back("df_sum_max");
        row.push_back(c.df_sum_max);
    }
    t.rows.push_back(row);
    return t;
}

int cmd_region(const std::string& kind, const std::string& scenario_path,
               const std::string& out) {
    cmacr::ScenarioFile sf;
    try {
        sf = cmacr::load_scenario(scenario_path);
    } catch (const cmacr::ScenarioError& e) {
        fail(kExitInput, e.what());
    }

    cmacr::CsvTable table;
    if (kind == "cognitive-full" || kind == "cognitive-partial" ||
        kind == "cognitive-links") {
        auto* f = std::get_if<cmacr::CognitiveScenarioFile>(&sf);
        if (!f) fail(kExitInput, "region kind '" + kind + "' needs a cognitive scenario");
        cmacr::RegionBoundary b;
        if (kind == "cognitive-full") {
            b = cmacr::full_cognitive_boundary(f->scenario, f->r3, f->grid_n);
        } else if (kind == "cognitive-partial") {
            b = cmacr::partial_cognitive_boundary(f->scenario, f->r3, f->grid_n);
        } else {
            if (!f->c1 || !f->c2)
                fail(kExitInput, "cognitive-links needs fields c1 and c2");
            b = cmacr::finite_capacity_boundary(f->scenario, *f->c1, *f->c2,
                                                f->r3, std::min(f->grid_n, 17));
        }
        if (!b.feasible)
            fail(kExitInfeasible, "empty region: r3 exceeds the relay's best rate");
        table = cmacr::boundary_to_csv(b);
    } else if (kind == "df" || kind == "outer" || kind == "cf") {
        auto* f = std::get_if<cmacr::GaussianScenarioFile>(&sf);
        if (!f) fail(kExitInput, "region kind '" + kind + "' needs a gaussian scenario");
        cmacr::RegionBoundary b;
        if (kind == "df")
            b = cmacr::df_boundary(f->scenario, f->grid_n);
        else if (kind == "outer")
            b = cmacr::outer_boundary(f->scenario, f->grid_n);
        else
            b = cmacr::cf_boundary(f->scenario, std::max(f->grid_n, 33));
        if (!b.feasible) fail(kExitInfeasible, "empty region");
        table = cmacr::boundary_to_csv(b);
    } else if (kind == "binary" || kind == "binary-df") {
        auto* f = std::get_if<cmacr::BinaryScenarioFile>(&sf);
        if (!f) fail(kExitInput, "region kind '" + kind + "' needs a binary scenario");
        auto c = kind == "binary"
                     ? cmacr::binary_capacity_constraints(f->scenario)
                     : cmacr::binary_df_constraints(f->scenario);
        table = constraints_csv(c, kind, f->scenario.describe());
    } else {
        fail(kExitInput, "unknown region kind '" + kind + "'");
    }
    table.write(out);
    std::cout << "wrote " << out << " (" << table.rows.size() << " rows)\n";
    return kExitOk;
}

int cmd_rate(const std::string& scheme, double pmin_db, double pmax_db,
             double step_db, double gamma2, double eta2,
             const std::string& out, const std::string& extra_comment = "") {
    if (!(step_db > 0.0) || pmax_db < pmin_db)
        fail(kExitInput, "bad power range");
    if (!(gamma2 >= 0.0) || !(eta2 >= 0.0))
        fail(kExitInput, "gains must be >= 0");

    cmacr::CsvTable t;
    t.comments = {cmacr::tool_version(), "scheme: " + scheme};
    if (!extra_comment.empty()) t.comments.push_back(extra_comment);
    {
        std::ostringstream os;
        os << "gamma2: " << gamma2 << " eta2: " << eta2;
        t.comments.push_back(os.str());
    }
    t.header = {"p_db", "rate"};
    const int steps = static_cast<int>(std::floor((pmax_db - pmin_db) / step_db + 1e-9));
    for (int i = 0; i <= steps; ++i) {
        double pdb = pmin_db + i * step_db;
        double p = cmacr::db_to_linear(pdb);
        cmacr::GaussianScenario s{p, p, p, gamma2, eta2};
        double rate = 0.0;
        if (scheme == "df")
            rate = cmacr::symmetric_df_rate(s);
        else if (scheme == "cf")
            rate = cmacr::symmetric_cf_rate(s);
        else if (scheme == "lattice")
            rate = cmacr::lattice_equal_rate(s);
        else if (scheme == "upper")
            rate = cmacr::symmetric_upper_bound(s);
        else
            fail(kExitInput, "unknown scheme '" + scheme + "'");
        t.rows.push_back({pdb, rate});
    }
    t.write(out);
    std::cout << "wrote " << out << " (" << t.rows.size() << " rows)\n";
    return kExitOk;
}

std::string fmt_db(double db) {
    std::ostringstream os;
    os << (db < 0 ? "m" : "") << std::abs(db) << "dB";
    return os.str();
}

int cmd_figure(int id, const std::string& out_dir) {
    namespace fs = std::filesystem;
    if (id < 3 || id > 6) fail(kExitInput, "unknown figure id (expected 3..6)");
    fs::create_directories(out_dir);
    auto path = [&](const std::string& name) {
        return (fs::path(out_dir) / name).string();
    };
    auto write_boundary = [&](const cmacr::RegionBoundary& b,
                              const std::string& name) {
        auto t = cmacr::boundary_to_csv(b);
        t.comments.insert(t.comments.begin() + 1,
                          "figure: " + std::to_string(id));
        t.write(path(name));
    };
    int files = 0;

    if (id == 3) {
        // cognitive-relay capacity regions, P1 = P2 = 3 dB, r3 = 0
        cmacr::CogScenario s;
        s.p1 = s.p2 = cmacr::db_to_linear(3.0);
        for (double p3db : {-6.0, 3.0}) {
            s.p3 = cmacr::db_to_linear(p3db);
            auto full = cmacr::full_cognitive_boundary(s, 0.0);
            auto part = cmacr::partial_cognitive_boundary(s, 0.0);
            write_boundary(full, "fig3_full_p3_" + fmt_db(p3db) + ".csv");
            write_boundary(part, "fig3_partial_p3_" + fmt_db(p3db) + ".csv");
            files += 2;
        }
    } else if (id == 4) {
        // largest unobtrusive relay rate vs relay power, P1 = P2 = 3 dB
        cmacr::CogScenario s;
        s.p1 = s.p2 = cmacr::db_to_linear(3.0);
        for (double r : {0.3, 0.55}) {
            for (auto mode : {cmacr::CognitionMode::full,
                              cmacr::CognitionMode::partial}) {
                cmacr::CsvTable t;
                const char* mname =
                    mode == cmacr::CognitionMode::full ? "full" : "partial";
                t.comments = {cmacr::tool_version(), "figure: 4",
                              std::string("mode: ") + mname};
                {
                    std::ostringstream os;
                    os << "r1 = r2 = " << r << ", P1 = P2 = 3 dB";
                    t.comments.push_back(os.str());
                }
                t.header = {"p3_db", "r3_max"};
                for (double p3db = -20.0; p3db <= 20.0 + 1e-9; p3db += 0.5) {
                    s.p3 = cmacr::db_to_linear(p3db);
                    t.rows.push_back(
                        {p3db, cmacr::max_unobtrusive_r3(s, r, r, mode)});
                }
                std::ostringstream name;
                name << "fig4_" << mname << "_r" << r << ".csv";
                t.write(path(name.str()));
                ++files;
            }
        }
    } else if (id == 5) {
        // DF / CF / outer frontiers, P = 5 dB, eta2 = 10, gamma2 in {1, 5}
        for (double g2 : {1.0, 5.0}) {
            cmacr::GaussianScenario s{cmacr::db_to_linear(5.0),
                                      cmacr::db_to_linear(5.0),
                                      cmacr::db_to_linear(5.0), g2, 10.0};
            auto axis = cmacr::gaussian_r1_axis(s);
            std::ostringstream suffix;
            suffix << "_g2_" << g2 << ".csv";
            write_boundary(cmacr::df_boundary(s, 17, &axis),
                           "fig5_df" + suffix.str());
            write_boundary(cmacr::outer_boundary(s, 17, &axis),
                           "fig5_outer" + suffix.str());
            write_boundary(cmacr::cf_boundary(s, 64, &axis),
                           "fig5_cf" + suffix.str());
            files += 3;
        }
    } else {
        // equal rates vs power, gamma2 = 0.1, eta2 = 10
        for (const char* scheme : {"lattice", "df", "cf", "upper"}) {
            std::string out = path(std::string("fig6_") + scheme + ".csv");
            cmd_rate(scheme, -10.0, 40.0, 0.5, 0.1, 10.0, out, "figure: 6");
            ++files;
        }
        return kExitOk;
    }
    std::cout << "wrote " << files << " files to " << out_dir << "\n";
    return kExitOk;
}

int cmd_sim(const std::string& config_path, const std::string& out,
            const std::string& csv_out) {
    cmacr::ScenarioFile sf;
    try {
        sf = cmacr::load_scenario(config_path);
    } catch (const cmacr::ScenarioError& e) {
        fail(kExitInput, e.what());
    }
    auto* f = std::get_if<cmacr::SimScenarioFile>(&sf);
    if (!f) fail(kExitInput, "sim needs a scenario of type 'sim'");
    try {
        f->config.validate();
    } catch (const std::length_error& e) {
        fail(kExitCap, e.what());
    } catch (const std::exception& e) {
        fail(kExitInput, e.what());
    }

    auto report = cmacr::run_sim(f->config);
    std::ofstream js(out, std::ios::binary);
    if (!js) fail(kExitInput, "cannot open " + out + " for writing");
    js << report.to_json() << "\n";
    if (!csv_out.empty()) {
        std::ofstream cs(csv_out, std::ios::binary);
        if (!cs) fail(kExitInput, "cannot open " + csv_out + " for writing");
        cs << cmacr::SimReport::csv_header() << "\n"
           << report.to_csv_row() << "\n";
    }
    std::printf(
        "trials=%ld blocks=%ld relay_err=%.6g rx1_err=%.6g rx2_err=%.6g "
        "end_to_end=%.6g\n",
        report.trials, report.blocks, report.relay_error_rate,
        report.rx1_error_rate, report.rx2_error_rate,
        report.end_to_end_error_rate);
    return kExitOk;
}

int cmd_selftest(bool verbose, double perturb_hb) {
    cmacr::SelftestOptions opt;
    opt.verbose = verbose;
    opt.perturb_hb = perturb_hb;
    auto results = cmacr::run_selftest(opt);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
        if (verbose) {
            std::printf("  [%.3f s]  %s", r.elapsed_s, r.detail.c_str());
        } else if (!r.passed) {
            std::cout << "  " << r.detail;
        }
        std::cout << "\n";
    }
    return all ? kExitOk : kExitSelftest;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rate-region toolkit and linear-code relay simulator for the "
                 "compound MAC with a relay"};
    app.require_subcommand(1);

    auto* region = app.add_subcommand("region", "compute a rate-region boundary");
    std::string kind, scenario_path, out = "region.csv";
    region->add_option("--kind", kind,
                       "cognitive-full|cognitive-partial|cognitive-links|"
                       "df|cf|outer|binary|binary-df")
        ->required();
    region->add_option("--scenario", scenario_path, "scenario JSON file")
        ->required();
    region->add_option("--out", out, "output CSV path");

    auto* rate = app.add_subcommand("rate", "symmetric equal-rate sweep");
    std::string scheme;
    double pmin_db = 0.0, pmax_db = 0.0, step_db = 1.0, gamma2 = 1.0,
           eta2 = 1.0;
    std::string rate_out = "rate.csv";
    rate->add_option("--scheme", scheme, "df|cf|lattice|upper")->required();
    rate->add_option("--pmin-db", pmin_db, "lowest power (dB)")->required();
    rate->add_option("--pmax-db", pmax_db, "highest power (dB)")->required();
    rate->add_option("--step-db", step_db, "sweep step (dB)");
    rate->add_option("--gamma2", gamma2, "squared source->relay gain")
        ->required();
    rate->add_option("--eta2", eta2, "squared relay->receiver gain")
        ->required();
    rate->add_option("--out", rate_out, "output CSV path");

    auto* figure = app.add_subcommand("figure", "emit figure data as CSV");
    int fig_id = 0;
    std::string out_dir = ".";
    figure->add_option("--id", fig_id, "figure id (3..6)")->required();
    figure->add_option("--out-dir", out_dir, "output directory");

    auto* sim = app.add_subcommand("sim", "run the Monte Carlo relay simulation");
    std::string sim_config, sim_out = "report.json", sim_csv;
    sim->add_option("--config", sim_config, "sim config JSON file")->required();
    sim->add_option("--out", sim_out, "output JSON report path");
    sim->add_option("--csv", sim_csv, "also write a one-row CSV");

    auto* selftest = app.add_subcommand("selftest", "run oracle cross-checks");
    bool verbose = false;
    double perturb_hb = 0.0;
    selftest->add_flag("--verbose", verbose, "per-check timing and detail");
    selftest
        ->add_option("--inject-hb-error", perturb_hb,
                     "fault-injection hook: offset the closed-form entropy")
        ->group("");  // hidden

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitInput;
    }

    try {
        if (region->parsed()) return cmd_region(kind, scenario_path, out);
        if (rate->parsed())
            return cmd_rate(scheme, pmin_db, pmax_db, step_db, gamma2, eta2,
                            rate_out);
        if (figure->parsed()) return cmd_figure(fig_id, out_dir);
        if (sim->parsed()) return cmd_sim(sim_config, sim_out, sim_csv);
        if (selftest->parsed()) return cmd_selftest(verbose, perturb_hb);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << "\n";
        return e.code;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCap;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
