#include "cmacr/cognitive.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sweep_engine.hpp"

namespace cmacr {

using detail::Pentagon;
using detail::SweepProblem;

namespace {

bool unit(double x) { return x >= 0.0 && x <= 1.0; }

std::string describe(const CogScenario& s) {
    std::ostringstream os;
    os << "P1=" << s.p1 << " P2=" << s.p2 << " P3=" << s.p3;
    return os.str();
}

}  // namespace

void CogScenario::validate() const {
    if (!(p1 >= 0.0) || !(p2 >= 0.0) || !(p3 >= 0.0) || !std::isfinite(p1) ||
        !std::isfinite(p2) || !std::isfinite(p3))
        throw std::invalid_argument("CogScenario: powers must be finite and >= 0");
}

void RelaySplit::validate() const {
    if (!unit(a3p) || !unit(a3pp) || a3p + a3pp > 1.0 + 1e-12)
        throw std::invalid_argument(
            "RelaySplit: need 0 <= a3p, a3pp and a3p + a3pp <= 1");
}

FullCognitiveBounds full_cognitive_bounds(const CogScenario& s,
                                          const RelaySplit& split) {
    s.validate();
    split.validate();
    const double ab3 = std::max(0.0, 1.0 - split.a3p - split.a3pp);
    FullCognitiveBounds b;
    b.r3 = awgn_capacity(ab3 * s.p3);
    b.r13 = awgn_capacity(s.p1 + (1.0 - split.a3pp) * s.p3 +
                          2.0 * std::sqrt(split.a3p * s.p1 * s.p3));
    b.r23 = awgn_capacity(s.p2 + (1.0 - split.a3p) * s.p3 +
                          2.0 * std::sqrt(split.a3pp * s.p2 * s.p3));
    b.sum = awgn_capacity(s.p1 + s.p2 + s.p3 +
                          2.0 * std::sqrt(split.a3p * s.p1 * s.p3) +
                          2.0 * std::sqrt(split.a3pp * s.p2 * s.p3));
    return b;
}

PartialCognitiveBounds partial_cognitive_bounds(const CogScenario& s,
                                                double rho) {
    s.validate();
    if (!unit(rho)) throw std::domain_error("partial_cognitive_bounds: rho");
    const double cross = 2.0 * rho * std::sqrt(s.p1 * s.p3);
    const double free3 = (1.0 - rho * rho) * s.p3;
    PartialCognitiveBounds b;
    b.r2 = awgn_capacity(s.p2);
    b.r3 = awgn_capacity(free3);
    b.r13 = awgn_capacity(s.p1 + s.p3 + cross);
    b.r23 = awgn_capacity(s.p2 + free3);
    b.sum = awgn_capacity(s.p1 + s.p2 + s.p3 + cross);
    return b;
}

FiniteCapacityBounds finite_capacity_bounds(const CogScenario& s, double c1,
                                            double c2, const RelaySplit& split,
                                            double a1, double a2) {
    s.validate();
    split.validate();
    if (!unit(a1) || !unit(a2))
        throw std::invalid_argument("finite_capacity_bounds: a1, a2 in [0,1]");
    if (!(c1 >= 0.0) || !(c2 >= 0.0))
        throw std::invalid_argument("finite_capacity_bounds: c1, c2 >= 0");

    // Conditional variances of Y = X1 + X2 + X3 + Z for the jointly Gaussian
    // parameterization X_j = sqrt(a_j P_j) U_j + sqrt((1-a_j) P_j) S_j,
    // X_3 = sqrt(a3' P3) U_1 + sqrt(a3'' P3) U_2 + sqrt(a3bar P3) S_3.
    const double ab1 = (1.0 - a1) * s.p1;
    const double ab2 = (1.0 - a2) * s.p2;
    const double ab3 = std::max(0.0, 1.0 - split.a3p - split.a3pp) * s.p3;
    const double coh1 =
        std::pow(std::sqrt(a1 * s.p1) + std::sqrt(split.a3p * s.p3), 2);
    const double coh2 =
        std::pow(std::sqrt(a2 * s.p2) + std::sqrt(split.a3pp * s.p3), 2);

    const double i_x1 = awgn_capacity(ab1);              // I(X1;Y|X2,X3,U1,U2)
    const double i_x2 = awgn_capacity(ab2);              // I(X2;Y|X1,X3,U1,U2)
    const double i_x3 = awgn_capacity(ab3);              // I(X3;Y|X1,X2,U1,U2)
    const double i_x12 = awgn_capacity(ab1 + ab2);       // I(X1,X2;Y|X3,U1,U2)
    const double i_x13_u12 = awgn_capacity(ab1 + ab3);   // I(X1,X3;Y|X2,U1,U2)
    const double i_x13_u2 = awgn_capacity(ab1 + coh1 + ab3);  // I(X1,X3;Y|X2,U2)
    const double i_x23_u12 = awgn_capacity(ab2 + ab3);   // I(X2,X3;Y|X1,U1,U2)
    const double i_x23_u1 = awgn_capacity(ab2 + coh2 + ab3);  // I(X2,X3;Y|X1,U1)
    const double i_all_u12 = awgn_capacity(ab1 + ab2 + ab3);
    const double i_all_u1 = awgn_capacity(ab1 + ab2 + coh2 + ab3);
    const double i_all_u2 = awgn_capacity(ab1 + ab2 + coh1 + ab3);
    const double i_all = awgn_capacity(
        s.p1 + s.p2 + s.p3 + 2.0 * std::sqrt(a1 * s.p1 * split.a3p * s.p3) +
        2.0 * std::sqrt(a2 * s.p2 * split.a3pp * s.p3));

    FiniteCapacityBounds b;
    b.r1 = i_x1 + c1;
    b.r2 = i_x2 + c2;
    b.r3 = i_x3;
    b.r12 = i_x12 + c1 + c2;
    b.r13 = std::min(i_x13_u12 + c1, i_x13_u2);
    b.r23 = std::min(i_x23_u12 + c2, i_x23_u1);
    b.sum = std::min(std::min(i_all_u12 + c1 + c2, i_all_u1 + c1),
                     std::min(i_all_u2 + c2, i_all));
    return b;
}

std::vector<LinearConstraint> orthogonal_polytope(double c1, double c2,
                                                  double c3) {
    if (!(c1 >= 0.0) || !(c2 >= 0.0) || !(c3 >= 0.0))
        throw std::invalid_argument("orthogonal_polytope: capacities >= 0");
    return {
        {{0.0, 0.0, 1.0}, c3},
        {{1.0, 1.0, 0.0}, c1 + c2},
        {{0.0, 1.0, 1.0}, c2 + c3},
        {{1.0, 1.0, 1.0}, c1 + c2 + c3},
    };
}

bool polytope_contains(const std::vector<LinearConstraint>& cs,
                       const RateTriple& r) {
    for (const auto& c : cs) {
        double v = c.coeff[0] * r.r1 + c.coeff[1] * r.r2 + c.coeff[2] * r.r3;
        if (v > c.bound + 1e-12) return false;
    }
    return r.r1 >= 0.0 && r.r2 >= 0.0 && r.r3 >= 0.0;
}

namespace {

Pentagon full_pentagon(const FullCognitiveBounds& b, double r3) {
    if (r3 > b.r3) return {detail::kNegInf, detail::kNegInf, detail::kNegInf};
    return {b.r13 - r3, b.r23 - r3, b.sum - r3};
}

RegionBoundary run_cog_sweep(const SweepProblem& prob, double r3,
                             const std::string& kind, const CogScenario& s) {
    auto res = detail::sweep_frontiers(prob, {});
    return detail::to_boundary(res, 0, r3, kind, describe(s));
}

}  // namespace

RegionBoundary full_cognitive_boundary(const CogScenario& s, double r3,
                                       int grid_n) {
    s.validate();
    if (!(r3 >= 0.0)) throw std::domain_error("full_cognitive_boundary: r3");
    SweepProblem prob;
    prob.objectives = 1;
    prob.coarse_n = std::max(2, grid_n);
    if (r3 == 0.0) {
        // a3p + a3pp = 1 is optimal at r3 = 0, so sweep the segment only.
        prob.dim = 1;
        prob.lo = {0.0};
        prob.hi = {1.0};
        prob.eval = [&s](const detail::Params& p,
                         std::vector<std::optional<Pentagon>>& out) {
            RelaySplit split{p[0], 1.0 - p[0]};
            out[0] = full_pentagon(full_cognitive_bounds(s, split), 0.0);
        };
    } else {
        prob.dim = 2;
        prob.lo = {0.0, 0.0};
        prob.hi = {1.0, 1.0};
        prob.feasible = [](const detail::Params& p) {
            return p[0] + p[1] <= 1.0 + 1e-15;
        };
        prob.eval = [&s, r3](const detail::Params& p,
                             std::vector<std::optional<Pentagon>>& out) {
            RelaySplit split{p[0], std::min(p[1], 1.0 - p[0])};
            auto b = full_cognitive_bounds(s, split);
            if (r3 > b.r3) {
                out[0].reset();
                return;
            }
            out[0] = full_pentagon(b, r3);
        };
    }
    return run_cog_sweep(prob, r3, "cognitive-full", s);
}

RegionBoundary partial_cognitive_boundary(const CogScenario& s, double r3,
                                          int grid_n) {
    s.validate();
    if (!(r3 >= 0.0)) throw std::domain_error("partial_cognitive_boundary: r3");
    SweepProblem prob;
    prob.objectives = 1;
    prob.coarse_n = std::max(2, grid_n);
    prob.dim = 1;
    prob.lo = {0.0};
    prob.hi = {1.0};
    prob.eval = [&s, r3](const detail::Params& p,
                         std::vector<std::optional<Pentagon>>& out) {
        auto b = partial_cognitive_bounds(s, p[0]);
        if (r3 > b.r3) {
            out[0].reset();
            return;
        }
        out[0] = Pentagon{b.r13 - r3, std::min(b.r2, b.r23 - r3), b.sum - r3};
    };
    return run_cog_sweep(prob, r3, "cognitive-partial", s);
}

RegionBoundary finite_capacity_boundary(const CogScenario& s, double c1,
                                        double c2, double r3, int grid_n) {
    s.validate();
    if (!(r3 >= 0.0)) throw std::domain_error("finite_capacity_boundary: r3");
    SweepProblem prob;
    prob.objectives = 1;
    prob.coarse_n = std::max(2, grid_n);
    prob.dim = 4;  // (a1, a2, a3p, a3pp)
    prob.lo = {0.0, 0.0, 0.0, 0.0};
    prob.hi = {1.0, 1.0, 1.0, 1.0};
    prob.feasible = [](const detail::Params& p) {
        return p[2] + p[3] <= 1.0 + 1e-15;
    };
    prob.eval = [&s, c1, c2, r3](const detail::Params& p,
                                 std::vector<std::optional<Pentagon>>& out) {
        RelaySplit split{p[2], std::min(p[3], 1.0 - p[2])};
        auto b = finite_capacity_bounds(s, c1, c2, split, p[0], p[1]);
        if (r3 > b.r3) {
            out[0].reset();
            return;
        }
        out[0] = Pentagon{std::min(b.r1, b.r13 - r3),
                          std::min(b.r2, b.r23 - r3),
                          std::min(b.r12, b.sum - r3)};
    };
    auto res = detail::sweep_frontiers(prob, {});
    // jointly Gaussian inputs are not proven optimal for the finite-capacity
    // links model, so this boundary is labeled achievable, not capacity
    return detail::to_boundary(res, 0, r3, "cognitive-links",
                               describe(s) + " [achievable-with-gaussian-inputs]");
}

double max_unobtrusive_r3(const CogScenario& s, double r1, double r2,
                          CognitionMode mode) {
    s.validate();
    if (!(r1 >= 0.0) || !(r2 >= 0.0))
        throw std::domain_error("max_unobtrusive_r3: rates must be >= 0");
    const double tol = 1e-12;
    if (r1 > awgn_capacity(s.p1) + tol || r2 > awgn_capacity(s.p2) + tol ||
        r1 + r2 > awgn_capacity(s.p1 + s.p2) + tol)
        throw std::domain_error(
            "max_unobtrusive_r3: (r1, r2) outside the relay-free MAC region");

    GridOptions opt;  // defaults: 64-point grid, 4 refinement rounds
    if (mode == CognitionMode::full) {
        auto f = [&](double a3p, double a3pp) {
            auto b = full_cognitive_bounds(s, {a3p, std::min(a3pp, 1.0 - a3p)});
            return std::min(std::min(b.r3, b.r13 - r1),
                            std::min(b.r23 - r2, b.sum - r1 - r2));
        };
        return clamp_rate(maximize_on_simplex(f, opt).value);
    }
    auto f = [&](double rho) {
        auto b = partial_cognitive_bounds(s, rho);
        return std::min(std::min(b.r3, b.r13 - r1),
                        std::min(b.r23 - r2, b.sum - r1 - r2));
    };
    return clamp_rate(maximize_on_interval(f, 0.0, 1.0, opt).value);
}

}  // namespace cmacr
