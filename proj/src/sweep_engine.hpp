#ifndef CMACR_SWEEP_ENGINE_HPP
#define CMACR_SWEEP_ENGINE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "cmacr/numerics.hpp"

// Internal machinery for sampling Pareto frontiers of parameterized pentagon
// unions. A region is swept over a parameter box of dimension <= 4; each
// candidate parameter vector yields one pentagon per objective (several
// objectives share one sweep so that frontiers computed from the same
// candidate set compare exactly, e.g. an achievable region against its outer
// bound). Deterministic: fixed grids plus local refinement around incumbents.

namespace cmacr::detail {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kPosInf = std::numeric_limits<double>::infinity();

// R1 <= r1cap, R2 <= r2cap, R1 + R2 <= sumcap (caps may be +-inf).
struct Pentagon {
    double r1cap = kNegInf;
    double r2cap = kNegInf;
    double sumcap = kPosInf;
};

inline double pentagon_r1max(const Pentagon& p) {
    return std::min(p.r1cap, p.sumcap);
}

// Best R2 at a given R1, or -inf when R1 is not achievable.
inline double pentagon_r2_at(const Pentagon& p, double r1) {
    if (r1 > pentagon_r1max(p)) return kNegInf;
    double r2 = std::min(p.r2cap, p.sumcap - r1);
    return r2 < 0.0 ? kNegInf : r2;
}

using Params = std::array<double, 4>;

struct SweepProblem {
    int dim = 1;
    Params lo{};
    Params hi{};
    // Optional candidate filter (e.g. a3p + a3pp <= 1); default: accept all.
    std::function<bool(const Params&)> feasible;
    // Fills one pentagon per objective; nullopt marks an objective infeasible
    // at this candidate (contributes nothing).
    std::function<void(const Params&, std::vector<std::optional<Pentagon>>&)>
        eval;
    int objectives = 1;
    int coarse_n = 17;
    int refine_n = 5;
    int refine_rounds = 3;
    double shrink = 0.25;
};

struct SweepResult {
    // frontier[obj][i] = best r2 at axis[i] (-inf if nothing feasible)
    std::vector<std::vector<double>> frontier;
    std::vector<double> axis;
    bool any_feasible = false;
};

// Walks every candidate of a dim-dimensional grid given per-axis sample
// lists, invoking visit(params).
template <typename Visit>
void for_each_candidate(int dim, const std::array<std::vector<double>, 4>& axes,
                        Visit&& visit) {
    Params p{};
    std::array<size_t, 4> idx{};
    while (true) {
        for (int d = 0; d < dim; ++d) p[d] = axes[d][idx[d]];
        visit(p);
        int d = 0;
        for (; d < dim; ++d) {
            if (++idx[d] < axes[d].size()) break;
            idx[d] = 0;
        }
        if (d == dim) break;
    }
}

// If axis is empty it is derived from the sweep itself: 201 uniform samples
// from 0 to the largest achievable R1 over all objectives and candidates.
SweepResult sweep_frontiers(const SweepProblem& prob, std::vector<double> axis);

RegionBoundary to_boundary(const SweepResult& res, int obj, double r3,
                           std::string kind, std::string scenario);

}  // namespace cmacr::detail

#endif
