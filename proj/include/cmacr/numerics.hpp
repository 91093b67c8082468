#ifndef CMACR_NUMERICS_HPP
#define CMACR_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <limits>
#include <string>
#include <vector>

// Shared numeric primitives for the rate-region toolkit. All rates are in
// bits per channel use (log base 2 throughout; see README for the convention).

namespace cmacr {

// Binary entropy Hb(p) = -p log2 p - (1-p) log2 (1-p), with 0 log 0 = 0.
// Symmetric under p <-> 1-p bit-exactly. Throws std::domain_error outside [0,1].
double binary_entropy(double p);

// (1/2) log2(1 + snr). Throws std::domain_error for snr < 0.
double awgn_capacity(double snr);

double db_to_linear(double db);
double linear_to_db(double x);

// Rates are clamped to >= 0 only at reporting boundaries, never inside
// min/max compositions.
double clamp_rate(double r);

// Dedicated infinite-capacity sentinel: min expressions and additions
// collapse exactly under IEEE infinity arithmetic.
inline constexpr double kInfiniteCapacity =
    std::numeric_limits<double>::infinity();

// Deterministic nested grid refinement. Each refinement round shrinks the
// search window by `shrink` around the incumbent and re-grids it, so the
// result is bit-reproducible and never decreases with extra rounds.
struct GridOptions {
    int grid_n = 64;
    int refine_rounds = 4;
    double shrink = 0.25;
};

struct Opt1dResult {
    double x = 0.0;
    double value = 0.0;
};

struct Opt2dResult {
    double a = 0.0;
    double b = 0.0;
    double value = 0.0;
};

Opt1dResult maximize_on_interval(const std::function<double(double)>& f,
                                 double lo, double hi, const GridOptions& opt);

// Maximize f over the box [alo,ahi] x [blo,bhi]. With `simplex` set, only
// points with a + b <= 1 are evaluated (the grid always contains the
// diagonal a + b = 1 endpoints of each row).
Opt2dResult maximize_on_box(const std::function<double(double, double)>& f,
                            double alo, double ahi, double blo, double bhi,
                            const GridOptions& opt, bool simplex = false);

// Maximize f(a, b) over the simplex a, b >= 0, a + b <= 1.
Opt2dResult maximize_on_simplex(const std::function<double(double, double)>& f,
                                const GridOptions& opt);

struct BoundaryPoint {
    double r1 = 0.0;
    double r2 = 0.0;
};

// Pareto-frontier sample of an (R1, R2) region at fixed R3. r2 is
// non-increasing in r1 and all entries are >= 0.
struct RegionBoundary {
    std::vector<BoundaryPoint> points;
    bool feasible = true;  // false: requested r3 exceeds the region's max R3
    double r3 = 0.0;
    std::string kind;
    std::string scenario;
};

// For each r1 in axis_grid (ascending), the maximum r2 over all input points
// whose first coordinate is >= r1; 0 when no such point exists.
// Throws std::invalid_argument on empty input.
RegionBoundary pareto_frontier(const std::vector<BoundaryPoint>& points,
                               const std::vector<double>& axis_grid);

// Number of samples on the R1 axis of every region boundary.
inline constexpr int kBoundarySamples = 201;

std::vector<double> linspace(double lo, double hi, int n);

}  // namespace cmacr

#endif
