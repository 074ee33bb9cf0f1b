#ifndef SPHCAP_SPHERE_HPP
#define SPHCAP_SPHERE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "sphcap/quadrature.hpp"

namespace sphcap {

/// A point on S^d, stored as d+1 Cartesian coordinates.
class UnitPoint {
public:
    /// Validates the unit norm to 1e-9.  With renormalize set, inputs within
    /// 1e-6 of unit norm are rescaled; worse deviations are rejected.
    explicit UnitPoint(std::vector<double> coords, bool renormalize = false);

    const std::vector<double>& coords() const { return coords_; }
    int dim() const { return static_cast<int>(coords_.size()) - 1; }
    double operator[](int i) const { return coords_[i]; }

    UnitPoint antipode() const;

private:
    std::vector<double> coords_;
};

struct PointSet {
    int d;
    std::vector<UnitPoint> points;

    PointSet(int dim, std::vector<UnitPoint> pts);
    int size() const { return static_cast<int>(points.size()); }
};

double dot(const UnitPoint& x, const UnitPoint& y);

/// Euclidean distance ||x - y||, computed from coordinate differences.
double chordal_distance(const UnitPoint& x, const UnitPoint& y);

/// 1 if <center,x> >= t (closed cap), else 0.
int cap_indicator(const UnitPoint& center, double t, const UnitPoint& x);

/// n i.i.d. uniform points on S^d: normalized Gaussian vectors drawn from
/// mt19937_64 seeded with splitmix64(seed); deterministic in (d, n, seed).
PointSet sample_uniform(int d, int n, std::uint64_t seed);

/// Quadrature rule for (omega_{d-1}/omega_d) int_{-1}^{1} f(t) (1-t^2)^{d/2-1} dt.
/// Weights sum to 1.  Even d folds the polynomial weight into Gauss-Legendre;
/// odd d uses Gauss-Jacobi with exponents (d/2-1, d/2-1).
const GaussRule& zonal_rule(int d, int nodes);

/// Integral over S^d of the zonal function f(<pole, .>).
double zonal_integral(int d, const std::function<double(double)>& f, int nodes);

/// Exact integral over z in S^d of any function of (t, w) = (<x,z>, <y*,z*>)
/// for fixed x, y, via the nested measure decomposition (outer axis t on S^d,
/// inner axis w on S^{d-1}).  Requires d >= 2.  The optional breakpoints
/// callback may return w-values in (-1,1) at which the inner integrand has a
/// kink for the given t; the inner integral is split there.  outer_breaks
/// lists t-values at which the t-integrand loses smoothness (typically where
/// an inner kink enters or leaves the w-range); the outer axis is split there.
double two_point_quadrature(
    int d, const std::function<double(double, double)>& F, int nodes,
    const std::function<std::vector<double>(double)>& inner_breaks = nullptr,
    const std::vector<double>& outer_breaks = {});

}  // namespace sphcap

#endif
