#ifndef CMACR_BINARY_HPP
#define CMACR_BINARY_HPP

#include <string>

// Closed-form capacity region of the binary symmetric relay channel
// Y1 = X1 + X3 + Z1, Y2 = X2 + X3 + Z2, Y3 = X1 + X2 + Z3 (mod-2 sums,
// Zi ~ Bernoulli(eps_i)), the decode-and-forward comparison region, and an
// exhaustive mutual-information oracle used to validate the closed forms.

namespace cmacr {

struct BinaryScenario {
    double eps1 = 0.0;
    double eps2 = 0.0;
    double eps3 = 0.0;

    // Crossovers above 1/2 describe a relabeled channel and are rejected.
    void validate() const;
    std::string describe() const;
};

struct BinaryConstraints {
    double r1_max = 0.0;   // 1 - Hb(eps3)
    double r2_max = 0.0;   // 1 - Hb(eps3)
    double sum_max = 0.0;  // min{1 - Hb(eps1), 1 - Hb(eps2)}
    bool df = false;       // adds sum <= 1 - Hb(eps3)
    double df_sum_max = 0.0;
};

BinaryConstraints binary_capacity_constraints(const BinaryScenario& b);
BinaryConstraints binary_df_constraints(const BinaryScenario& b);

bool contains(const BinaryConstraints& c, double r1, double r2);

// Maximizes the mutual informations that generate the region's constraints
// over independent Bernoulli(p) inputs on a grid of size dist_grid_n per
// parameter: I(X1;Y3|X2,X3) and I(X2;Y3|X1,X3) at the relay, and the
// receiver sum terms I(X1,X3;Y1), I(X2,X3;Y2). All mutual informations are
// evaluated by direct summation over the joint distribution.
struct ChannelOracleResult {
    double relay1_max = 0.0;  // max I(X1;Y3|X2,X3), argmax p1
    double relay1_arg = 0.0;
    double relay2_max = 0.0;  // max I(X2;Y3|X1,X3), argmax p2
    double relay2_arg = 0.0;
    double rx1_max = 0.0;  // max I(X1,X3;Y1), argmax (p1, p3)
    double rx1_arg_p1 = 0.0;
    double rx1_arg_p3 = 0.0;
    double rx2_max = 0.0;  // max I(X2,X3;Y2), argmax (p2, p3)
    double rx2_arg_p2 = 0.0;
    double rx2_arg_p3 = 0.0;
};

ChannelOracleResult brute_force_channel_oracle(const BinaryScenario& b,
                                               int dist_grid_n);

}  // namespace cmacr

#endif
