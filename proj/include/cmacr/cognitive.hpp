#ifndef CMACR_COGNITIVE_HPP
#define CMACR_COGNITIVE_HPP

#include <array>
#include <string>
#include <vector>

#include "cmacr/numerics.hpp"

// Capacity regions for the Gaussian MAC with a cognitive relay: full
// cognition, partial cognition (relay informed of message 1 only), cognition
// through finite-capacity links, and the orthogonal-channel polytope.
// Powers are linear-scale average power constraints; the unit-variance noise
// is baked into the formulas.

namespace cmacr {

struct CogScenario {
    double p1 = 0.0;
    double p2 = 0.0;
    double p3 = 0.0;

    void validate() const;  // throws std::invalid_argument
};

// Fractions of relay power spent cooperating with transmitter 1 (a3p) and
// transmitter 2 (a3pp); a3p + a3pp <= 1.
struct RelaySplit {
    double a3p = 0.0;
    double a3pp = 0.0;

    void validate() const;
};

struct RateTriple {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
};

// Bounds on R3, R1+R3, R2+R3 and R1+R2+R3 at a fixed relay power split.
struct FullCognitiveBounds {
    double r3 = 0.0;
    double r13 = 0.0;
    double r23 = 0.0;
    double sum = 0.0;
};

FullCognitiveBounds full_cognitive_bounds(const CogScenario& s,
                                          const RelaySplit& split);

// Bounds on R2, R3, R1+R3, R2+R3 and R1+R2+R3 at correlation rho between
// the relay signal and transmitter 1's signal.
struct PartialCognitiveBounds {
    double r2 = 0.0;
    double r3 = 0.0;
    double r13 = 0.0;
    double r23 = 0.0;
    double sum = 0.0;
};

PartialCognitiveBounds partial_cognitive_bounds(const CogScenario& s,
                                                double rho);

// Seven bounds for the relay fed through unidirectional links of capacities
// c1, c2 (bits/use; kInfiniteCapacity collapses the corresponding min terms
// exactly). a1, a2 are the source power fractions spent on the correlated
// (relay-known) components. Computed for jointly Gaussian inputs, so the
// region is achievable rather than proven optimal; see README.
struct FiniteCapacityBounds {
    double r1 = 0.0;   // I(X1;Y|X2,X3,U1,U2) + c1
    double r2 = 0.0;   // I(X2;Y|X1,X3,U1,U2) + c2
    double r3 = 0.0;   // I(X3;Y|X1,X2,U1,U2)
    double r12 = 0.0;  // I(X1,X2;Y|X3,U1,U2) + c1 + c2
    double r13 = 0.0;  // min{. + c1, I(X1,X3;Y|X2,U2)}
    double r23 = 0.0;  // min{. + c2, I(X2,X3;Y|X1,U1)}
    double sum = 0.0;  // min of four sum-rate terms
};

FiniteCapacityBounds finite_capacity_bounds(const CogScenario& s, double c1,
                                            double c2, const RelaySplit& split,
                                            double a1, double a2);

// Orthogonal-channel special case: the capacity region is the listed set of
// linear constraints on (R1, R2, R3).
struct LinearConstraint {
    std::array<double, 3> coeff{};  // on (R1, R2, R3)
    double bound = 0.0;
};

std::vector<LinearConstraint> orthogonal_polytope(double c1, double c2,
                                                  double c3);

bool polytope_contains(const std::vector<LinearConstraint>& cs,
                       const RateTriple& r);

// (R1, R2) Pareto boundaries at fixed r3, sweeping the free parameters.
// grid_n controls the sweep resolution. An infeasible r3 yields an empty
// boundary with feasible = false.
RegionBoundary full_cognitive_boundary(const CogScenario& s, double r3,
                                       int grid_n = 64);
RegionBoundary partial_cognitive_boundary(const CogScenario& s, double r3,
                                          int grid_n = 64);
RegionBoundary finite_capacity_boundary(const CogScenario& s, double c1,
                                        double c2, double r3, int grid_n = 17);

enum class CognitionMode { full, partial };

// Largest relay rate R3 such that (r1, r2, R3) is still inside the capacity
// region, with (r1, r2) achievable in the relay-free MAC. Throws
// std::domain_error when (r1, r2) is outside the relay-free MAC region.
double max_unobtrusive_r3(const CogScenario& s, double r1, double r2,
                          CognitionMode mode);

}  // namespace cmacr

#endif
