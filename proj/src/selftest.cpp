#include "cmacr/selftest.hpp"

#include <chrono>
#include <cmath>
#include <sstream>

#include "cmacr/binary.hpp"
#include "cmacr/cmacr_gaussian.hpp"
#include "cmacr/cognitive.hpp"
#include "cmacr/gf2.hpp"
#include "cmacr/numerics.hpp"

namespace cmacr {

namespace {

using Clock = std::chrono::steady_clock;

CheckResult timed(const std::string& name,
                  const std::function<bool(std::string&)>& body) {
    CheckResult r;
    r.name = name;
    auto t0 = Clock::now();
    r.passed = body(r.detail);
    r.elapsed_s = std::chrono::duration<double>(Clock::now() - t0).count();
    return r;
}

bool check_binary_oracle(double perturb, std::string& detail) {
    SplitMix64 rng(0xb1a2c3ULL);
    double worst = 0.0;
    for (int i = 0; i < 5; ++i) {
        BinaryScenario b{0.5 * rng.next_unit(), 0.5 * rng.next_unit(),
                         0.5 * rng.next_unit()};
        auto oracle = brute_force_channel_oracle(b, 501);
        auto c = binary_capacity_constraints(b);
        double r1_closed = c.r1_max + perturb;
        double sum1_closed = 1.0 - binary_entropy(b.eps1) + perturb;
        double sum2_closed = 1.0 - binary_entropy(b.eps2) + perturb;
        worst = std::max(worst, std::fabs(oracle.relay1_max - r1_closed));
        worst = std::max(worst, std::fabs(oracle.rx1_max - sum1_closed));
        worst = std::max(worst, std::fabs(oracle.rx2_max - sum2_closed));
    }
    std::ostringstream os;
    os << "max |oracle - closed form| = " << worst;
    detail = os.str();
    return worst < 1e-6;
}

bool check_optimizer(std::string& detail) {
    GaussianScenario s{10.0, 10.0, 10.0, 0.1, 10.0};
    double opt = symmetric_upper_bound(s);
    // dense brute force over the (alpha, alpha3) square
    double brute = 0.0;
    const int n = 1000;
    for (double a : linspace(0.0, 1.0, n)) {
        for (double a3 : linspace(0.0, 1.0, n)) {
            double t = a * a3;
            double t1 = (1.0 - t > 0.0)
                            ? 1.0 + 0.1 * 10.0 * (1.0 - 2.0 * t) / (1.0 - t)
                            : 0.0;
            double v1 = t1 > 0.0 ? 0.5 * std::log2(t1) : -1e300;
            double v2 = 0.5 * std::log2(1.0 + 10.0 + 10.0 * 10.0 * (1.0 - a3));
            double v3 = 0.25 * std::log2(1.0 + 10.0 * (1.0 + 10.0 +
                                                       2.0 * std::sqrt(10.0 * t)));
            brute = std::max(brute, std::min(v1, std::min(v2, v3)));
        }
    }
    std::ostringstream os;
    os << "optimizer = " << opt << ", dense grid = " << brute;
    detail = os.str();
    return std::fabs(opt - brute) < 1e-4;
}

bool check_containment(std::string& detail) {
    for (double g2 : {1.0, 5.0}) {
        GaussianScenario s{db_to_linear(5), db_to_linear(5), db_to_linear(5),
                           g2, 10.0};
        auto axis = gaussian_r1_axis(s);
        auto df = df_boundary(s, 17, &axis);
        auto outer = outer_boundary(s, 17, &axis);
        auto cf = cf_boundary(s, 64, &axis);
        for (size_t i = 0; i < axis.size(); ++i) {
            if (df.points[i].r2 > outer.points[i].r2 + 1e-9 ||
                cf.points[i].r2 > outer.points[i].r2 + 1e-9) {
                std::ostringstream os;
                os << "violation at r1 = " << axis[i] << " (gamma2 = " << g2
                   << ")";
                detail = os.str();
                return false;
            }
        }
    }
    detail = "df and cf inside the outer bound on both Fig.-5 scenarios";
    return true;
}

}  // namespace

std::vector<CheckResult> run_selftest(const SelftestOptions& opt) {
    std::vector<CheckResult> out;
    out.push_back(timed("binary-oracle-vs-closed-form", [&](std::string& d) {
        return check_binary_oracle(opt.perturb_hb, d);
    }));
    out.push_back(timed("optimizer-vs-dense-grid", check_optimizer));
    out.push_back(timed("region-containment", check_containment));
    return out;
}

}  // namespace cmacr
