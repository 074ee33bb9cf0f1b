#include "sphcap/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "sphcap/rng.hpp"
#include "sphcap/special_functions.hpp"

namespace sphcap {

UnitPoint::UnitPoint(std::vector<double> coords, bool renormalize)
    : coords_(std::move(coords)) {
    if (coords_.size() < 2)
        throw std::domain_error("UnitPoint: need at least 2 coordinates");
    double s = 0.0;
    for (double c : coords_) s += c * c;
    const double norm = std::sqrt(s);
    const double dev = std::fabs(norm - 1.0);
    if (dev <= 1e-9) return;
    if (renormalize && dev <= 1e-6) {
        for (double& c : coords_) c /= norm;
        return;
    }
    throw std::domain_error("UnitPoint: norm deviates from 1 by more than tolerance");
}

UnitPoint UnitPoint::antipode() const {
    std::vector<double> c = coords_;
    for (double& v : c) v = -v;
    return UnitPoint(std::move(c));
}

PointSet::PointSet(int dim, std::vector<UnitPoint> pts)
    : d(dim), points(std::move(pts)) {
    if (d < 1) throw std::domain_error("PointSet: d must be >= 1");
    if (points.empty()) throw std::domain_error("PointSet: N must be >= 1");
    for (const UnitPoint& p : points)
        if (p.dim() != d)
            throw std::domain_error("PointSet: point arity mismatch");
}

double dot(const UnitPoint& x, const UnitPoint& y) {
    if (x.dim() != y.dim())
        throw std::domain_error("dot: dimension mismatch");
    double s = 0.0;
    for (int i = 0; i <= x.dim(); ++i) s += x[i] * y[i];
    return s;
}

double chordal_distance(const UnitPoint& x, const UnitPoint& y) {
    if (x.dim() != y.dim())
        throw std::domain_error("chordal_distance: dimension mismatch");
    // coordinate differences, not sqrt(2 - 2<x,y>): exact for x = y and not
    // subject to the round-off amplification of the inner-product form
    double s = 0.0;
    for (int i = 0; i <= x.dim(); ++i) {
        const double diff = x[i] - y[i];
        s += diff * diff;
    }
    return std::sqrt(s);
}

int cap_indicator(const UnitPoint& center, double t, const UnitPoint& x) {
    if (!(t >= -1.0 && t <= 1.0))
        throw std::domain_error("cap_indicator: t must lie in [-1,1]");
    return dot(center, x) >= t ? 1 : 0;
}

PointSet sample_uniform(int d, int n, std::uint64_t seed) {
    if (n < 1) throw std::domain_error("sample_uniform: n must be >= 1");
    GaussianSampler g(splitmix64(seed));
    std::vector<UnitPoint> pts;
    pts.reserve(n);
    for (int k = 0; k < n; ++k) {
        std::vector<double> c(d + 1);
        double s = 0.0;
        for (int i = 0; i <= d; ++i) {
            c[i] = g.next();
            s += c[i] * c[i];
        }
        const double norm = std::sqrt(s);
        for (double& v : c) v /= norm;
        pts.emplace_back(std::move(c));
    }
    return PointSet(d, std::move(pts));
}

const GaussRule& zonal_rule(int d, int nodes) {
    if (d < 1) throw std::domain_error("zonal_rule: d must be >= 1");
    if (nodes < 1) throw std::domain_error("zonal_rule: nodes must be >= 1");
    static std::map<std::pair<int, int>, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find({d, nodes});
    if (it != cache.end()) return it->second;

    GaussRule r;
    const double ar = area_ratio(d);
    if (d % 2 == 0) {
        const GaussRule& gl = gauss_legendre(nodes);
        r.nodes = gl.nodes;
        r.weights.resize(nodes);
        const int p = d / 2 - 1;  // polynomial exponent for even d
        for (int i = 0; i < nodes; ++i) {
            const double t = gl.nodes[i];
            r.weights[i] = ar * gl.weights[i] * std::pow(1.0 - t * t, p);
        }
    } else {
        r = gauss_jacobi(nodes, d / 2.0 - 1.0, d / 2.0 - 1.0);
        for (double& w : r.weights) w *= ar;
    }
    return cache.emplace(std::make_pair(d, nodes), std::move(r)).first->second;
}

double zonal_integral(int d, const std::function<double(double)>& f, int nodes) {
    const GaussRule& r = zonal_rule(d, nodes);
    double s = 0.0;
    for (int i = 0; i < nodes; ++i) s += r.weights[i] * f(r.nodes[i]);
    return s;
}

namespace {

// (omega_{m-1}/omega_m) int_{-1}^{1} h(w) (1-w^2)^{m/2-1} dw for the sphere
// S^m, evaluated in the angle variable w = cos(phi) so that the weight
// becomes the smooth sin^{m-1}(phi).  Splits at the given w-breakpoints.
double inner_zonal(int m, const std::function<double(double)>& h, int nodes,
                   const std::vector<double>& breaks_w) {
    std::vector<double> phis;
    phis.push_back(0.0);
    for (double w : breaks_w)
        if (w > -1.0 && w < 1.0) phis.push_back(std::acos(w));
    phis.push_back(M_PI);
    std::sort(phis.begin(), phis.end());

    const double ar = area_ratio(m);
    double total = 0.0;
    for (std::size_t s = 0; s + 1 < phis.size(); ++s) {
        const double a = phis[s], b = phis[s + 1];
        if (b - a < 1e-15) continue;
        total += integrate_gl(
            [&](double phi) {
                const double sp = std::sin(phi);
                return h(std::cos(phi)) * (m == 1 ? 1.0 : std::pow(sp, m - 1));
            },
            a, b, nodes);
    }
    return ar * total;
}

}  // namespace

double two_point_quadrature(
    int d, const std::function<double(double, double)>& F, int nodes,
    const std::function<std::vector<double>(double)>& inner_breaks,
    const std::vector<double>& outer_breaks) {
    if (d < 2)
        throw std::domain_error("two_point_quadrature: requires d >= 2");
    if (nodes < 1)
        throw std::domain_error("two_point_quadrature: nodes must be >= 1");
    // The outer axis also goes through the angle variable so that the
    // half-integer weight powers of odd d stay smooth, split at outer_breaks.
    std::vector<double> no_breaks;
    return inner_zonal(
        d,
        [&](double t) {
            const std::vector<double> breaks =
                inner_breaks ? inner_breaks(t) : no_breaks;
            return inner_zonal(d - 1, [&](double w) { return F(t, w); }, nodes,
                               breaks);
        },
        nodes, outer_breaks);
}

}  // namespace sphcap
