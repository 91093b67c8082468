#include "sweep_engine.hpp"

namespace cmacr::detail {

namespace {

struct Incumbent {
    double r2 = kNegInf;
    Params params{};
    bool set = false;
};

}  // namespace

SweepResult sweep_frontiers(const SweepProblem& prob, std::vector<double> axis) {
    const int nobj = prob.objectives;
    std::vector<std::optional<Pentagon>> pens(nobj);

    // Coarse pass: collect pentagons, track the largest achievable R1.
    std::array<std::vector<double>, 4> coarse;
    for (int d = 0; d < prob.dim; ++d)
        coarse[d] = linspace(prob.lo[d], prob.hi[d], prob.coarse_n);

    std::vector<std::pair<Params, std::vector<std::optional<Pentagon>>>> kept;
    double r1max = kNegInf;
    for_each_candidate(prob.dim, coarse, [&](const Params& p) {
        if (prob.feasible && !prob.feasible(p)) return;
        prob.eval(p, pens);
        bool any = false;
        for (const auto& pen : pens) {
            if (!pen) continue;
            any = true;
            r1max = std::max(r1max, pentagon_r1max(*pen));
        }
        if (any) kept.emplace_back(p, pens);
    });

    SweepResult res;
    res.any_feasible = !kept.empty() && r1max >= 0.0;
    if (!res.any_feasible) return res;

    if (axis.empty()) axis = linspace(0.0, clamp_rate(r1max), kBoundarySamples);
    const size_t npts = axis.size();
    res.axis = axis;
    res.frontier.assign(nobj, std::vector<double>(npts, kNegInf));

    std::vector<std::vector<Incumbent>> inc(nobj,
                                            std::vector<Incumbent>(npts));
    auto absorb = [&](const Params& p,
                      const std::vector<std::optional<Pentagon>>& ps,
                      size_t only_i, bool all_points) {
        for (int o = 0; o < nobj; ++o) {
            if (!ps[o]) continue;
            size_t ibegin = all_points ? 0 : only_i;
            size_t iend = all_points ? npts : only_i + 1;
            for (size_t i = ibegin; i < iend; ++i) {
                double r2 = pentagon_r2_at(*ps[o], axis[i]);
                if (r2 > inc[o][i].r2) {
                    inc[o][i].r2 = r2;
                    inc[o][i].params = p;
                    inc[o][i].set = true;
                }
            }
        }
    };
    for (const auto& [p, ps] : kept) absorb(p, ps, 0, true);

    // Local refinement per axis point, per objective. All objectives absorb
    // every refinement candidate evaluated at an axis point, so the candidate
    // sets (and hence frontier orderings) are shared across objectives.
    // Besides its own incumbent, each point also refines around the
    // incumbents of its axis neighbours: near the feasibility edge the coarse
    // pass can be stuck on a degenerate parameter plateau that a neighbour's
    // basin escapes.
    std::array<double, 4> half{};
    for (int d = 0; d < prob.dim; ++d) {
        half[d] = (prob.coarse_n > 1)
                      ? (prob.hi[d] - prob.lo[d]) / (prob.coarse_n - 1)
                      : 0.0;
    }
    std::array<std::vector<double>, 4> waxes;
    for (int round = 0; round < prob.refine_rounds; ++round) {
        for (size_t i = 0; i < npts; ++i) {
            for (int o = 0; o < nobj; ++o) {
                std::vector<Params> centers;
                for (size_t j : {i, i > 0 ? i - 1 : i,
                                 i + 1 < npts ? i + 1 : i}) {
                    if (!inc[o][j].set) continue;
                    const Params& c = inc[o][j].params;
                    bool dup = false;
                    for (const auto& seen : centers) dup = dup || seen == c;
                    if (!dup) centers.push_back(c);
                }
                for (const Params& center : centers) {
                    for (int d = 0; d < prob.dim; ++d) {
                        double wlo = std::max(prob.lo[d], center[d] - half[d]);
                        double whi = std::min(prob.hi[d], center[d] + half[d]);
                        waxes[d] = linspace(wlo, whi, prob.refine_n);
                    }
                    for_each_candidate(prob.dim, waxes, [&](const Params& p) {
                        if (prob.feasible && !prob.feasible(p)) return;
                        prob.eval(p, pens);
                        absorb(p, pens, i, false);
                    });
                }
            }
        }
        for (int d = 0; d < prob.dim; ++d) half[d] *= prob.shrink;
    }

    for (int o = 0; o < nobj; ++o)
        for (size_t i = 0; i < npts; ++i) res.frontier[o][i] = inc[o][i].r2;
    return res;
}

RegionBoundary to_boundary(const SweepResult& res, int obj, double r3,
                           std::string kind, std::string scenario) {
    RegionBoundary b;
    b.r3 = r3;
    b.kind = std::move(kind);
    b.scenario = std::move(scenario);
    if (!res.any_feasible) {
        b.feasible = false;
        return b;
    }
    b.points.reserve(res.axis.size());
    // Enforce monotonicity: a pentagon covering some r1 also covers every
    // smaller r1 at the same r2, so the frontier is the suffix max.
    std::vector<double> vals(res.axis.size());
    double run = kNegInf;
    for (size_t i = res.axis.size(); i-- > 0;) {
        run = std::max(run, res.frontier[obj][i]);
        vals[i] = run;
    }
    for (size_t i = 0; i < res.axis.size(); ++i)
        b.points.push_back({res.axis[i], clamp_rate(vals[i])});
    return b;
}

}  // namespace cmacr::detail
