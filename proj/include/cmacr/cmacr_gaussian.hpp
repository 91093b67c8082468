#ifndef CMACR_CMACR_GAUSSIAN_HPP
#define CMACR_CMACR_GAUSSIAN_HPP

#include <string>
#include <vector>

#include "cmacr/numerics.hpp"

// Achievable regions and bounds for the Gaussian compound MAC with a relay
// and no cross-reception (each receiver hears its own transmitter and the
// relay only), with the relay's private rate fixed to zero: decode-and-forward
// region, the matching outer bound, compress-and-forward region, symmetric
// rates, and the lattice-coding equal rate.

namespace cmacr {

struct GaussianScenario {
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;
    double gamma2 = 0.0;  // squared gain, sources -> relay
    double eta2 = 0.0;    // squared gain, relay -> receivers; +inf acts as a
                          // perfect relay pipe (quantization noise vanishes)

    void validate() const;
    bool symmetric() const;
    std::string describe() const;
};

// Source correlation fractions (a1, a2) plus the relay power split.
struct DfSplit {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3p = 0.0;
    double a3pp = 0.0;

    void validate() const;
};

// Each bound is the min of its listed closed-form terms. Terms may be -inf
// when a log argument is non-positive (the split then supports no rate).
struct DfBounds {
    double r1 = 0.0;   // min{relay-decoding term, receiver-1 term}
    double r2 = 0.0;
    double sum = 0.0;  // min{relay sum term, receiver-1 term, receiver-2 term}
    double outer_sum = 0.0;  // min of the two receiver terms only
};

// Throws std::domain_error when a fractional relay-decoding term has a zero
// denominator (1 - a2*a3pp = 0 with a1*a3p > 0, or symmetrically).
DfBounds df_bounds(const GaussianScenario& s, const DfSplit& d);

// How the compress-and-forward quantization noise is evaluated: `verbatim`
// keeps the gamma^2 * a1P1 * a2P2 product term in the numerator;
// `no_product` drops it (sensitivity variant, see README).
enum class NqConvention { verbatim, no_product };

struct CfRates {
    double r1max = 0.0;
    double r2max = 0.0;
};

CfRates cf_rates(const GaussianScenario& s, double a1, double a2,
                 NqConvention nq = NqConvention::verbatim);

// Frontiers on a common R1 axis (201 points from 0 to the largest achievable
// R1 of the DF/outer pair). Pass `axis` to align several boundaries.
std::vector<double> gaussian_r1_axis(const GaussianScenario& s,
                                     int grid_n = 17);

RegionBoundary df_boundary(const GaussianScenario& s, int grid_n = 17,
                           const std::vector<double>* axis = nullptr);
RegionBoundary outer_boundary(const GaussianScenario& s, int grid_n = 17,
                              const std::vector<double>* axis = nullptr);
RegionBoundary cf_boundary(const GaussianScenario& s, int grid_n = 64,
                           const std::vector<double>* axis = nullptr,
                           NqConvention nq = NqConvention::verbatim);

// Symmetric-scenario equal rates (P1 = P2 = P3). All are maximized over their
// free parameters with the deterministic grid refiner and clamped to >= 0.
// symmetric_df_rate never exceeds symmetric_upper_bound on the same inputs.
double symmetric_upper_bound(const GaussianScenario& s);
double symmetric_df_rate(const GaussianScenario& s);
double symmetric_cf_rate(const GaussianScenario& s,
                         NqConvention nq = NqConvention::verbatim);

// Equal rate of the nested-lattice scheme:
// max(0, min{ (1/2)log2(1/2 + g2 P), (1/2)log2(1 + P min{1, e2}),
//             (1/4)log2(1 + P (1 + e2)) }).
double lattice_equal_rate(const GaussianScenario& s);

}  // namespace cmacr

#endif
