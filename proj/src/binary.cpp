#include "cmacr/binary.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "cmacr/numerics.hpp"

namespace cmacr {

void BinaryScenario::validate() const {
    auto ok = [](double e) { return e >= 0.0 && e <= 0.5; };
    if (!ok(eps1) || !ok(eps2) || !ok(eps3))
        throw std::invalid_argument("BinaryScenario: crossovers must be in [0, 0.5]");
}

std::string BinaryScenario::describe() const {
    std::ostringstream os;
    os << "eps1=" << eps1 << " eps2=" << eps2 << " eps3=" << eps3;
    return os.str();
}

BinaryConstraints binary_capacity_constraints(const BinaryScenario& b) {
    b.validate();
    BinaryConstraints c;
    c.r1_max = 1.0 - binary_entropy(b.eps3);
    c.r2_max = c.r1_max;
    c.sum_max = std::min(1.0 - binary_entropy(b.eps1),
                         1.0 - binary_entropy(b.eps2));
    return c;
}

BinaryConstraints binary_df_constraints(const BinaryScenario& b) {
    BinaryConstraints c = binary_capacity_constraints(b);
    c.df = true;
    c.df_sum_max = 1.0 - binary_entropy(b.eps3);
    return c;
}

bool contains(const BinaryConstraints& c, double r1, double r2) {
    if (!(r1 >= 0.0 && r2 >= 0.0))
        throw std::domain_error("contains: rates must be >= 0");
    if (r1 > c.r1_max || r2 > c.r2_max) return false;
    if (r1 + r2 > c.sum_max) return false;
    if (c.df && r1 + r2 > c.df_sum_max) return false;
    return true;
}

namespace {


double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

// I(X1,X3;Y) with Y = X1 xor X3 xor Z. The pair (X1,X3) is one compound
// input; the joint is over 4 x 2 outcomes.
double mi_pair_output(double p1, double p3, double eps) {
    double hy = 0.0, hxy = 0.0, hx = 0.0;
    std::array<double, 2> py{};
    for (int x1 = 0; x1 < 2; ++x1) {
        for (int x3 = 0; x3 < 2; ++x3) {
            double px = (x1 ? p1 : 1.0 - p1) * (x3 ? p3 : 1.0 - p3);
            hx -= plogp(px);
            for (int y = 0; y < 2; ++y) {
                double pz = ((x1 ^ x3) ^ y) ? eps : 1.0 - eps;
                double j = px * pz;
                hxy -= plogp(j);
                py[y] += j;
            }
        }
    }
    hy = -plogp(py[0]) - plogp(py[1]);
    return hx + hy - hxy;
}

// I(X1;Y3|X2,X3): averaged conditional mutual information from the joint
// distribution over (x1, x2, y3); X3 does not enter Y3 but stays in the
// conditioning for fidelity to the region's constraint.
double mi_relay(double p1, double p2, double eps3) {
    double acc = 0.0;
    for (int x2 = 0; x2 < 2; ++x2) {
        double px2 = x2 ? p2 : 1.0 - p2;
        // given X2 = x2: Y3 = X1 xor x2 xor Z3
        double hy = 0.0, hxy = 0.0, hx = 0.0;
        std::array<double, 2> py{};
        for (int x1 = 0; x1 < 2; ++x1) {
            double px1 = x1 ? p1 : 1.0 - p1;
            hx -= plogp(px1);
            for (int y = 0; y < 2; ++y) {
                double pz = ((x1 ^ x2) ^ y) ? eps3 : 1.0 - eps3;
                double j = px1 * pz;
                hxy -= plogp(j);
                py[y] += j;
            }
        }
        hy = -plogp(py[0]) - plogp(py[1]);
        acc += px2 * (hx + hy - hxy);
    }
    return acc;
}

}  // namespace

ChannelOracleResult brute_force_channel_oracle(const BinaryScenario& b,
                                               int dist_grid_n) {
    b.validate();
    if (dist_grid_n < 2)
        throw std::invalid_argument("brute_force_channel_oracle: grid >= 2");
    const auto grid = linspace(0.0, 1.0, dist_grid_n);

    ChannelOracleResult r;
    r.relay1_max = r.relay2_max = r.rx1_max = r.rx2_max = -1.0;

    // Relay terms: I(X1;Y3|X2,X3) is invariant in (p2, p3) (conditioning on
    // X2 relabels the channel), so scanning p1 with p2 fixed is exhaustive.
    // mi_relay still averages over X2 explicitly.
    for (double p1 : grid) {
        double v = mi_relay(p1, 0.5, b.eps3);
        if (v > r.relay1_max) {
            r.relay1_max = v;
            r.relay1_arg = p1;
        }
    }
    for (double p2 : grid) {
        double v = mi_relay(p2, 0.5, b.eps3);
        if (v > r.relay2_max) {
            r.relay2_max = v;
            r.relay2_arg = p2;
        }
    }

    for (double p1 : grid) {
        for (double p3 : grid) {
            double v = mi_pair_output(p1, p3, b.eps1);
            if (v > r.rx1_max) {
                r.rx1_max = v;
                r.rx1_arg_p1 = p1;
                r.rx1_arg_p3 = p3;
            }
        }
    }
    for (double p2 : grid) {
        for (double p3 : grid) {
            double v = mi_pair_output(p2, p3, b.eps2);
            if (v > r.rx2_max) {
                r.rx2_max = v;
                r.rx2_arg_p2 = p2;
                r.rx2_arg_p3 = p3;
            }
        }
    }

    return r;
}

}  // namespace cmacr
