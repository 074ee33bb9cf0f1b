#ifndef SPHCAP_QUALITY_HPP
#define SPHCAP_QUALITY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sphcap/kernels.hpp"
#include "sphcap/oracles.hpp"
#include "sphcap/sphere.hpp"

namespace sphcap {

struct McCheck {
    std::string name;
    double estimate = 0.0;
    double std_error = 0.0;
    double closed_value = 0.0;
    double z_score = 0.0;
};

struct QualityReport {
    int d = 0;
    int N = 0;
    double sum_of_distances = 0.0;
    double energy_gap = 0.0;
    double wce = 0.0;
    double discrepancy = 0.0;  // same number as wce by the invariance identity
    std::map<std::string, double> weighted_wce;  // keyed by weight label
    std::vector<McCheck> mc_checks;
    std::map<std::string, double> timing;  // seconds per stage

    std::string to_json() const;
    std::string to_csv_row() const;  // flat row; header via csv_header()
    std::string csv_header() const;
    std::string to_text() const;
};

/// (1/N^2) sum_{k,l} ||x_k - x_l||, compensated sequential summation.
double sum_of_distances(const PointSet& P);

/// Parallel pairwise-reduction variant; deterministic for a given worker
/// count and agrees with the sequential reference to 1e-10.
double sum_of_distances_parallel(const PointSet& P, int threads);

/// mean_distance(d) - sum_of_distances(P); non-negative up to round-off.
double energy_gap(const PointSet& P);

/// e(H_C, Q_N) = sqrt(C_d * energy_gap(P)).
double worst_case_error(const PointSet& P);

/// L2(P) through the invariance identity; identical to worst_case_error.
/// The independent check against the defining integral is discrepancy_mc.
double discrepancy_closed(const PointSet& P);

/// sqrt((1/N^2) sum K_{C,v}(x_k,x_l) - kernel_mean), with kernel values
/// memoized over inner products rounded to 1e-12.
double weighted_wce(const PointSet& P, const WeightFunction& v, int nodes);

/// Representer of the integration error at x:
/// R(x) = C_d * [(1/N) sum_k ||x - x_k|| - I_d].
double representer_eval(const PointSet& P, const UnitPoint& x);

struct Residual {
    double residual = 0.0;
    double std_error = 0.0;
};

/// Invariance residual with the MC term supplying the statistically
/// independent side.  Unweighted:
///   sum_of_distances + (1/C_d) * discrepancy_mc - mean_distance.
/// Weighted:
///   (1/N^2) sum K_{C,v} - weighted_discrepancy_mc - kernel_mean.
Residual invariance_residual(const PointSet& P,
                             const std::optional<WeightFunction>& v,
                             const McConfig& cfg, int nodes = 256);

/// Full report for a point set (closed-form measures only; MC checks and
/// weighted entries are appended by the callers that request them).
QualityReport analyze(const PointSet& P);

}  // namespace sphcap

#endif
