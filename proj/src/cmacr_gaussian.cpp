#include "cmacr/cmacr_gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "sweep_engine.hpp"

namespace cmacr {

using detail::kNegInf;
using detail::kPosInf;
using detail::Pentagon;
using detail::SweepProblem;

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// (1/2) log2(arg), -inf when arg <= 0. Rates clamp to zero only at the
// reporting boundary, so negative/min compositions stay intact.
double half_log2(double arg) {
    if (!(arg > 0.0)) return kNegInf;
    return 0.5 * std::log2(arg);
}

double quarter_log2(double arg) {
    if (!(arg > 0.0)) return kNegInf;
    return 0.25 * std::log2(arg);
}

bool unit(double x) { return x >= 0.0 && x <= 1.0; }

struct DfTerms {
    double r1_relay, r1_rx;
    double r2_relay, r2_rx;
    double sum_relay, sum_rx1, sum_rx2;
    bool singular = false;  // zero denominator with a nonzero numerator
};

// Fractional loss term a*b/(1-c*d) with the convention 0/x = 0 even at x = 0;
// a positive numerator over a zero denominator marks the split singular.
double frac(double num, double den, bool& singular) {
    if (num == 0.0) return 0.0;
    if (den <= 0.0) {
        singular = true;
        return kPosInf;
    }
    return num / den;
}

DfTerms df_terms(const GaussianScenario& s, const DfSplit& d) {
    DfTerms t{};
    const double eta = std::sqrt(s.eta2);
    const double l1 = frac(d.a1 * d.a3p, 1.0 - d.a2 * d.a3pp, t.singular);
    const double l2 = frac(d.a2 * d.a3pp, 1.0 - d.a1 * d.a3p, t.singular);
    t.r1_relay = half_log2(1.0 + s.gamma2 * s.p1 * (1.0 - l1));
    t.r2_relay = half_log2(1.0 + s.gamma2 * s.p2 * (1.0 - l2));
    t.r1_rx = half_log2(1.0 + s.p1 + s.eta2 * s.p3 * (1.0 - d.a3pp));
    t.r2_rx = half_log2(1.0 + s.p2 + s.eta2 * s.p3 * (1.0 - d.a3p));

    const double ptot = s.p1 + s.p2;
    double coherent = 0.0;
    if (ptot > 0.0) {
        const double c = std::sqrt(d.a1 * d.a3p * s.p1) +
                         std::sqrt(d.a2 * d.a3pp * s.p2);
        coherent = c * c / ptot;
    }
    t.sum_relay = half_log2(1.0 + s.gamma2 * ptot * (1.0 - coherent));
    t.sum_rx1 = half_log2(1.0 + s.p1 + s.eta2 * s.p3 +
                          2.0 * eta * std::sqrt(d.a1 * d.a3p * s.p1 * s.p3));
    t.sum_rx2 = half_log2(1.0 + s.p2 + s.eta2 * s.p3 +
                          2.0 * eta * std::sqrt(d.a2 * d.a3pp * s.p2 * s.p3));
    return t;
}

Pentagon df_pentagon(const DfTerms& t) {
    if (t.singular) return {kNegInf, kNegInf, kNegInf};
    return {std::min(t.r1_relay, t.r1_rx), std::min(t.r2_relay, t.r2_rx),
            std::min(t.sum_relay, std::min(t.sum_rx1, t.sum_rx2))};
}

Pentagon outer_pentagon(const DfTerms& t) {
    if (t.singular) return {kNegInf, kNegInf, kNegInf};
    return {std::min(t.r1_relay, t.r1_rx), std::min(t.r2_relay, t.r2_rx),
            std::min(t.sum_rx1, t.sum_rx2)};
}

// DF region and outer bound share one sweep so the two frontiers come from
// identical candidate sets and containment holds exactly point by point.
SweepProblem df_outer_problem(const GaussianScenario& s, int grid_n) {
    SweepProblem prob;
    prob.objectives = 2;
    prob.dim = 4;  // (a1, a2, a3p, a3pp)
    prob.lo = {0.0, 0.0, 0.0, 0.0};
    prob.hi = {1.0, 1.0, 1.0, 1.0};
    prob.coarse_n = std::max(2, grid_n);
    prob.feasible = [](const detail::Params& p) {
        return p[2] + p[3] <= 1.0 + 1e-15;
    };
    prob.eval = [s](const detail::Params& p,
                    std::vector<std::optional<Pentagon>>& out) {
        DfSplit d{p[0], p[1], p[2], std::min(p[3], 1.0 - p[2])};
        auto t = df_terms(s, d);
        out[0] = df_pentagon(t);
        out[1] = outer_pentagon(t);
    };
    return prob;
}

}  // namespace

void GaussianScenario::validate() const {
    bool ok = p1 >= 0.0 && std::isfinite(p1) && p2 >= 0.0 && std::isfinite(p2) &&
              p3 >= 0.0 && std::isfinite(p3) && gamma2 >= 0.0 &&
              std::isfinite(gamma2) && eta2 >= 0.0 && !std::isnan(eta2);
    if (!ok)
        throw std::invalid_argument(
            "GaussianScenario: powers/gains must be >= 0 (eta2 may be +inf)");
}

bool GaussianScenario::symmetric() const {
    return p1 == p2 && p2 == p3;
}

std::string GaussianScenario::describe() const {
    std::ostringstream os;
    os << "P1=" << p1 << " P2=" << p2 << " P3=" << p3 << " gamma2=" << gamma2
       << " eta2=" << eta2;
    return os.str();
}

void DfSplit::validate() const {
    if (!unit(a1) || !unit(a2) || !unit(a3p) || !unit(a3pp) ||
        a3p + a3pp > 1.0 + 1e-12)
        throw std::invalid_argument("DfSplit: fractions in [0,1], a3p+a3pp <= 1");
}

DfBounds df_bounds(const GaussianScenario& s, const DfSplit& d) {
    s.validate();
    d.validate();
    auto t = df_terms(s, d);
    if (t.singular)
        throw std::domain_error(
            "df_bounds: zero denominator in a relay-decoding term");
    DfBounds b;
    b.r1 = std::min(t.r1_relay, t.r1_rx);
    b.r2 = std::min(t.r2_relay, t.r2_rx);
    b.sum = std::min(t.sum_relay, std::min(t.sum_rx1, t.sum_rx2));
    b.outer_sum = std::min(t.sum_rx1, t.sum_rx2);
    return b;
}

std::vector<double> gaussian_r1_axis(const GaussianScenario& s, int grid_n) {
    s.validate();
    auto prob = df_outer_problem(s, grid_n);
    prob.refine_rounds = 0;  // the axis is fixed by the coarse pass
    auto res = detail::sweep_frontiers(prob, {});
    if (!res.any_feasible) return linspace(0.0, 0.0, kBoundarySamples);
    return res.axis;
}

RegionBoundary df_boundary(const GaussianScenario& s, int grid_n,
                           const std::vector<double>* axis) {
    s.validate();
    auto res = detail::sweep_frontiers(df_outer_problem(s, grid_n),
                                       axis ? *axis : std::vector<double>{});
    return detail::to_boundary(res, 0, 0.0, "df", s.describe());
}

RegionBoundary outer_boundary(const GaussianScenario& s, int grid_n,
                              const std::vector<double>* axis) {
    s.validate();
    auto res = detail::sweep_frontiers(df_outer_problem(s, grid_n),
                                       axis ? *axis : std::vector<double>{});
    return detail::to_boundary(res, 1, 0.0, "outer", s.describe());
}

namespace {

// Quantization noise seen past the relay. +inf relay pipe gives exactly 0.
double quantization_noise(const GaussianScenario& s, double a1, double a2,
                          NqConvention nq) {
    const double s1 = a1 * s.p1;
    const double s2 = a2 * s.p2;
    double num = 1.0 + s.gamma2 * (s1 + s2) + std::min(s1, s2);
    if (nq == NqConvention::verbatim) num += s.gamma2 * s1 * s2;
    if (std::isinf(s.eta2)) {
        if (s.p3 <= 0.0)
            throw std::domain_error("cf_rates: eta2*P3 = 0");
        return 0.0;
    }
    const double pipe = s.eta2 * s.p3;
    if (pipe <= 0.0) throw std::domain_error("cf_rates: eta2*P3 = 0");
    return num / pipe;
}

}  // namespace

CfRates cf_rates(const GaussianScenario& s, double a1, double a2,
                 NqConvention nq) {
    s.validate();
    if (!unit(a1) || !unit(a2))
        throw std::invalid_argument("cf_rates: a1, a2 in [0,1]");
    const double nqv = quantization_noise(s, a1, a2, nq);
    CfRates r;
    r.r1max = clamp_rate(half_log2(1.0 + s.gamma2 * a1 * s.p1 / (1.0 + nqv)));
    r.r2max = clamp_rate(half_log2(1.0 + s.gamma2 * a2 * s.p2 / (1.0 + nqv)));
    return r;
}

RegionBoundary cf_boundary(const GaussianScenario& s, int grid_n,
                           const std::vector<double>* axis, NqConvention nq) {
    s.validate();
    RegionBoundary empty;
    empty.kind = "cf";
    empty.scenario = s.describe();
    if (s.p3 <= 0.0 || s.eta2 <= 0.0) {
        // no relay pipe: the CF region is the origin
        empty.points.push_back({0.0, 0.0});
        return empty;
    }
    SweepProblem prob;
    prob.objectives = 1;
    prob.dim = 2;  // (a1, a2)
    prob.lo = {0.0, 0.0};
    prob.hi = {1.0, 1.0};
    prob.coarse_n = std::max(2, grid_n);
    prob.eval = [s, nq](const detail::Params& p,
                        std::vector<std::optional<Pentagon>>& out) {
        auto r = cf_rates(s, p[0], p[1], nq);
        out[0] = Pentagon{r.r1max, r.r2max, kPosInf};
    };
    auto res = detail::sweep_frontiers(prob,
                                       axis ? *axis : std::vector<double>{});
    return detail::to_boundary(res, 0, 0.0, "cf", s.describe());
}

namespace {

struct SymTerms {
    double upper;  // min of the three outer-bound terms
    double df;     // min including the relay sum-rate term
};

SymTerms sym_terms(double P, double g2, double e2, double a, double a3) {
    const double t = a * a3;
    double t1;
    if (1.0 - t <= 0.0) {
        t1 = kNegInf;
    } else {
        t1 = half_log2(1.0 + g2 * P * (1.0 - 2.0 * t) / (1.0 - t));
    }
    const double t2 = half_log2(1.0 + P + e2 * P * (1.0 - a3));
    const double t3 =
        quarter_log2(1.0 + P * (1.0 + e2 + 2.0 * std::sqrt(e2 * t)));
    const double t4 = quarter_log2(1.0 + 2.0 * g2 * P * (1.0 - 2.0 * t));
    SymTerms r;
    r.upper = std::min(t1, std::min(t2, t3));
    r.df = std::min(r.upper, t4);
    return r;
}

struct SymPair {
    double upper = 0.0;
    double df = 0.0;
};

// Upper bound and DF rate maximized over a shared candidate set so that
// df <= upper holds exactly on every evaluation.
SymPair sym_rates(const GaussianScenario& s) {
    s.validate();
    if (!s.symmetric())
        throw std::invalid_argument("symmetric rates need P1 = P2 = P3");
    const double P = s.p1;
    const GridOptions opt;
    const int n = opt.grid_n;

    struct Inc {
        double v = kNegInf;
        double a = 0.0, a3 = 0.0;
    };
    Inc up, df;
    auto scan = [&](double alo, double ahi, double blo, double bhi) {
        for (double a : linspace(alo, ahi, n)) {
            for (double a3 : linspace(blo, bhi, n)) {
                auto t = sym_terms(P, s.gamma2, s.eta2, a, a3);
                if (t.upper > up.v) up = {t.upper, a, a3};
                if (t.df > df.v) df = {t.df, a, a3};
            }
        }
    };
    scan(0.0, 1.0, 0.0, 1.0);
    double half = 0.5;
    for (int r = 0; r < opt.refine_rounds; ++r) {
        half *= opt.shrink;
        for (const Inc* c : {&up, &df}) {
            scan(std::max(0.0, c->a - half), std::min(1.0, c->a + half),
                 std::max(0.0, c->a3 - half), std::min(1.0, c->a3 + half));
        }
    }
    return {clamp_rate(up.v), clamp_rate(df.v)};
}

}  // namespace

double symmetric_upper_bound(const GaussianScenario& s) {
    return sym_rates(s).upper;
}

double symmetric_df_rate(const GaussianScenario& s) { return sym_rates(s).df; }

double symmetric_cf_rate(const GaussianScenario& s, NqConvention nq) {
    s.validate();
    if (!s.symmetric())
        throw std::invalid_argument("symmetric_cf_rate needs P1 = P2 = P3");
    if (s.p1 == 0.0) return 0.0;
    GridOptions opt;
    auto f = [&](double a) { return cf_rates(s, a, a, nq).r1max; };
    return clamp_rate(maximize_on_interval(f, 0.0, 1.0, opt).value);
}

double lattice_equal_rate(const GaussianScenario& s) {
    s.validate();
    if (!s.symmetric())
        throw std::invalid_argument("lattice_equal_rate needs P1 = P2 = P3");
    const double P = s.p1;
    const double relay_term = half_log2(0.5 + s.gamma2 * P);
    const double direct_term = half_log2(1.0 + P * std::min(1.0, s.eta2));
    const double split_term = quarter_log2(1.0 + P * (1.0 + s.eta2));
    return clamp_rate(std::min(relay_term, std::min(direct_term, split_term)));
}

}  // namespace cmacr
