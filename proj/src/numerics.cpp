#include "cmacr/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cmacr {

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::domain_error("binary_entropy: p outside [0,1]");
    // Canonicalize through the larger of (p, 1-p). For p >= 0.5 the pair
    // (1-hi, hi) is exact, and for p < 0.5 it equals the pair obtained from
    // 1-p, which makes Hb(p) == Hb(1-p) bit-exact.
    const double hi = (p >= 0.5) ? p : 1.0 - p;
    const double lo = 1.0 - hi;
    double h = 0.0;
    if (lo > 0.0) h -= lo * std::log2(lo);
    if (hi < 1.0) h -= hi * std::log2(hi);
    return h;
}

double awgn_capacity(double snr) {
    if (!(snr >= 0.0)) throw std::domain_error("awgn_capacity: snr < 0");
    return 0.5 * (std::log1p(snr) / M_LN2);
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double x) { return 10.0 * std::log10(x); }

double clamp_rate(double r) { return r > 0.0 ? r : 0.0; }

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v;
    if (n <= 1) {
        v.push_back(lo);
        return v;
    }
    v.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) {
        double t = static_cast<double>(i) / (n - 1);
        v.push_back(i == n - 1 ? hi : lo + t * (hi - lo));
    }
    return v;
}

Opt1dResult maximize_on_interval(const std::function<double(double)>& f,
                                 double lo, double hi, const GridOptions& opt) {
    const int n = std::max(2, opt.grid_n);
    Opt1dResult best;
    best.x = lo;
    best.value = -std::numeric_limits<double>::infinity();
    auto scan = [&](double wlo, double whi) {
        for (double x : linspace(wlo, whi, n)) {
            double v = f(x);
            if (v > best.value) {
                best.value = v;
                best.x = x;
            }
        }
    };
    scan(lo, hi);
    double half = 0.5 * (hi - lo);
    for (int r = 0; r < opt.refine_rounds; ++r) {
        half *= opt.shrink;
        double wlo = std::max(lo, best.x - half);
        double whi = std::min(hi, best.x + half);
        scan(wlo, whi);
    }
    return best;
}

namespace {

void scan_box(const std::function<double(double, double)>& f, double alo,
              double ahi, double blo, double bhi, int n, bool simplex,
              Opt2dResult& best) {
    const auto as = linspace(alo, ahi, n);
    const auto bs = linspace(blo, bhi, n);
    for (double a : as) {
        for (double b : bs) {
            if (simplex && a + b > 1.0 + 1e-15) continue;
            double v = f(a, b);
            if (v > best.value) {
                best = {a, b, v};
            }
        }
        if (simplex && a <= 1.0) {
            // keep the diagonal a + b = 1 in the candidate set
            double b = 1.0 - a;
            if (b >= blo && b <= bhi) {
                double v = f(a, b);
                if (v > best.value) best = {a, b, v};
            }
        }
    }
}

}  // namespace

Opt2dResult maximize_on_box(const std::function<double(double, double)>& f,
                            double alo, double ahi, double blo, double bhi,
                            const GridOptions& opt, bool simplex) {
    const int n = std::max(2, opt.grid_n);
    Opt2dResult best;
    best.a = alo;
    best.b = blo;
    best.value = -std::numeric_limits<double>::infinity();
    scan_box(f, alo, ahi, blo, bhi, n, simplex, best);
    double ahalf = 0.5 * (ahi - alo);
    double bhalf = 0.5 * (bhi - blo);
    for (int r = 0; r < opt.refine_rounds; ++r) {
        ahalf *= opt.shrink;
        bhalf *= opt.shrink;
        scan_box(f, std::max(alo, best.a - ahalf), std::min(ahi, best.a + ahalf),
                 std::max(blo, best.b - bhalf), std::min(bhi, best.b + bhalf), n,
                 simplex, best);
    }
    return best;
}

Opt2dResult maximize_on_simplex(const std::function<double(double, double)>& f,
                                const GridOptions& opt) {
    return maximize_on_box(f, 0.0, 1.0, 0.0, 1.0, opt, true);
}

RegionBoundary pareto_frontier(const std::vector<BoundaryPoint>& points,
                               const std::vector<double>& axis_grid) {
    if (points.empty())
        throw std::invalid_argument("pareto_frontier: empty point set");
    // Sort a copy by r1 descending; a running max of r2 then answers
    // "best r2 among points with r1 >= threshold" for descending thresholds.
    std::vector<BoundaryPoint> sorted = points;
    std::sort(sorted.begin(), sorted.end(),
              [](const BoundaryPoint& x, const BoundaryPoint& y) {
                  return x.r1 > y.r1;
              });
    RegionBoundary out;
    out.points.resize(axis_grid.size());
    size_t idx = 0;
    double run = -std::numeric_limits<double>::infinity();
    for (size_t gi = axis_grid.size(); gi-- > 0;) {
        double thr = axis_grid[gi];
        while (idx < sorted.size() && sorted[idx].r1 >= thr) {
            run = std::max(run, sorted[idx].r2);
            ++idx;
        }
        out.points[gi] = {thr, clamp_rate(run)};
    }
    return out;
}

}  // namespace cmacr
