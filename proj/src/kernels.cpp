#include "sphcap/kernels.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "sphcap/special_functions.hpp"

namespace sphcap {

void WeightFunction::validate() const {
    const int grid = 1000;
    const double h = 1e-5;
    for (int i = 0; i < grid; ++i) {
        const double t = -1.0 + 2.0 * (i + 0.5) / grid;
        const double vt = v(t);
        if (!(vt > 0.0) || !std::isfinite(vt))
            throw std::domain_error("WeightFunction: v must be positive on [-1,1] (label " +
                                    label + ")");
        const double dV = (V(t + h) - V(t - h)) / (2.0 * h);
        if (std::fabs(dV - vt) > 1e-6 * (1.0 + std::fabs(vt)))
            throw std::domain_error("WeightFunction: V is not an antiderivative of v (label " +
                                    label + ")");
    }
}

WeightFunction unit_weight() {
    WeightFunction w;
    w.v = [](double) { return 1.0; };
    w.V = [](double t) { return t; };
    w.label = "one";
    return w;
}

WeightFunction parse_weight(const std::string& spec) {
    if (spec == "one") return unit_weight();
    const std::string prefix = "poly:";
    if (spec.rfind(prefix, 0) != 0)
        throw std::domain_error("parse_weight: expected \"one\" or \"poly:c0,c1,...\", got \"" +
                                spec + "\"");
    std::vector<double> c;
    std::stringstream ss(spec.substr(prefix.size()));
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        double val;
        try {
            val = std::stod(tok, &pos);
        } catch (const std::exception&) {
            throw std::domain_error("parse_weight: bad coefficient \"" + tok + "\"");
        }
        if (pos != tok.size())
            throw std::domain_error("parse_weight: bad coefficient \"" + tok + "\"");
        c.push_back(val);
    }
    if (c.empty()) throw std::domain_error("parse_weight: empty coefficient list");

    WeightFunction w;
    w.v = [c](double t) {
        double s = 0.0;
        for (std::size_t i = c.size(); i-- > 0;) s = s * t + c[i];
        return s;
    };
    w.V = [c](double t) {
        double s = 0.0;  // exact antiderivative, normalized by V(0) = 0
        for (std::size_t i = c.size(); i-- > 0;) s = s * t + c[i] / (i + 1.0);
        return s * t;
    };
    w.label = spec;
    w.validate();
    return w;
}

double kernel_unweighted_ip(int d, double u) {
    return 1.0 - distance_constant(d) * std::sqrt(std::max(0.0, 2.0 - 2.0 * u));
}

double kernel_unweighted(int d, const UnitPoint& x, const UnitPoint& y) {
    if (x.dim() != d || y.dim() != d)
        throw std::domain_error("kernel_unweighted: dimension mismatch");
    return 1.0 - distance_constant(d) * chordal_distance(x, y);
}

double kernel_weighted_ip(int d, double u, const WeightFunction& wf, int nodes) {
    if (d < 2) throw std::domain_error("kernel_weighted: requires d >= 2");
    if (u > 1.0) u = 1.0;
    if (u < -1.0) u = -1.0;

    if (u >= 1.0 - 1e-12)  // x = y
        return zonal_integral(d, wf.V, nodes) - wf.V(-1.0);
    if (u <= -1.0 + 1e-12) {
        // x = -y: min(t, -t) = -|t|; by symmetry twice the upper half, in the
        // angle variable so the kink at t = 0 sits on the segment boundary.
        const double integral = integrate_gl(
            [&](double psi) {
                return wf.V(-std::cos(psi)) * std::pow(std::sin(psi), d - 1);
            },
            0.0, M_PI / 2.0, nodes);
        return 2.0 * area_ratio(d) * integral - wf.V(-1.0);
    }

    // Frame with x as pole: <x,z> = t, <y,z> = u t + sqrt(1-u^2) sqrt(1-t^2) w.
    const double su = std::sqrt(1.0 - u * u);
    const double c = std::sqrt((1.0 - u) / (1.0 + u));
    const auto yz = [&](double t, double w) {
        return u * t + su * std::sqrt(std::max(0.0, 1.0 - t * t)) * w;
    };
    // Kink of V(min(t, <y,z>)) along <x,z> = <y,z>, i.e. w = w0(t).
    const auto breaks = [&](double t) {
        const double st = std::sqrt(std::max(0.0, 1.0 - t * t));
        std::vector<double> b;
        if (st > 1e-14) b.push_back(c * t / st);
        return b;
    };
    // The inner kink leaves the w-range at |t| = s, where the t-integrand
    // loses smoothness; split the outer axis there.
    const double s = std::sqrt(std::max(0.0, (1.0 + u) / 2.0));
    const double integral = two_point_quadrature(
        d, [&](double t, double w) { return wf.V(std::min(t, yz(t, w))); }, nodes,
        breaks, {-s, s});
    return integral - wf.V(-1.0);
}

double kernel_weighted(int d, const UnitPoint& x, const UnitPoint& y,
                       const WeightFunction& v, int nodes) {
    if (x.dim() != d || y.dim() != d)
        throw std::domain_error("kernel_weighted: dimension mismatch");
    return kernel_weighted_ip(d, dot(x, y), v, nodes);
}

double kernel_weighted_appendix_ip(int d, double u, const WeightFunction& wf,
                                   int nodes) {
    if (d < 2) throw std::domain_error("kernel_weighted_appendix: requires d >= 2");
    if (u >= 1.0 - 1e-12)
        throw std::invalid_argument(
            "kernel_weighted_appendix: degenerate input x = y; use kernel_weighted");
    if (u < -1.0) u = -1.0;

    // A(x,y) in the angle variable t = cos(psi):
    //   A = ar * [ int_{t=-1}^{-s} V(t) sin^{d-1} dpsi
    //            + int_{t=-s}^{s} V(t) I_{(1-x(t))/2}((d-1)/2,(d-1)/2) sin^{d-1} dpsi ],
    // with s = sqrt((1+u)/2) and x(t) = sqrt((1-u)/(1+u)) t / sqrt(1-t^2).
    const double ar = area_ratio(d);
    const double s = std::sqrt(std::max(0.0, (1.0 + u) / 2.0));
    const double psi_lo = std::acos(std::min(1.0, s));    // t = s
    const double psi_hi = std::acos(std::max(-1.0, -s));  // t = -s
    const double slope = std::sqrt((1.0 - u) / (1.0 + u));
    const double ab = (d - 1) / 2.0;

    const auto weight_pow = [&](double psi) {
        const double sp = std::sin(psi);
        return d == 1 ? 1.0 : std::pow(sp, d - 1);
    };

    double seg1 = 0.0;
    if (psi_hi < M_PI - 1e-15)
        seg1 = integrate_gl(
            [&](double psi) { return wf.V(std::cos(psi)) * weight_pow(psi); },
            psi_hi, M_PI, nodes);

    double seg2 = 0.0;
    if (psi_hi - psi_lo > 1e-15)
        seg2 = integrate_gl(
            [&](double psi) {
                const double t = std::cos(psi);
                const double sp = std::sin(psi);
                double xt = slope * t / sp;
                if (xt > 1.0) xt = 1.0;
                if (xt < -1.0) xt = -1.0;
                const double frac =
                    regularized_incomplete_beta((1.0 - xt) / 2.0, ab, ab);
                return wf.V(t) * frac * weight_pow(psi);
            },
            psi_lo, psi_hi, nodes);

    const double A = ar * (seg1 + seg2);
    return 2.0 * A - wf.V(-1.0);  // A is symmetric in (x,y)
}

double kernel_weighted_appendix(int d, const UnitPoint& x, const UnitPoint& y,
                                const WeightFunction& v, int nodes) {
    if (x.dim() != d || y.dim() != d)
        throw std::domain_error("kernel_weighted_appendix: dimension mismatch");
    return kernel_weighted_appendix_ip(d, dot(x, y), v, nodes);
}

double kernel_mean(int d, const WeightFunction& wf, int nodes) {
    if (d < 1) throw std::domain_error("kernel_mean: d must be >= 1");
    // Angle variable: the half-integer endpoint powers of cap_measure for odd
    // d become smooth in psi.
    return integrate_gl(
        [&](double psi) {
            const double t = std::cos(psi);
            const double m = cap_measure(d, t);
            return wf.v(t) * m * m * std::sin(psi);
        },
        0.0, M_PI, nodes);
}

double kernel_mean_appendix_variant(int d, const WeightFunction& wf, int nodes) {
    if (d < 1) throw std::domain_error("kernel_mean_appendix_variant: d must be >= 1");
    return integrate_gl(
        [&](double psi) {
            const double t = std::cos(psi);
            return wf.v(-t) *
                   regularized_incomplete_beta(t * t, 0.5, d / 2.0) *
                   std::sin(psi);
        },
        0.0, M_PI / 2.0, nodes);
}

double kernel_mean_appendix_variant_alt(int d, const WeightFunction& wf,
                                        int nodes) {
    if (d < 1) throw std::domain_error("kernel_mean_appendix_variant_alt: d must be >= 1");
    // Same quantity before integration by parts, in the angle variable.
    const double integral = integrate_gl(
        [&](double psi) {
            const double sp = std::sin(psi);
            return wf.V(-std::cos(psi)) * (d == 1 ? 1.0 : std::pow(sp, d - 1));
        },
        0.0, M_PI / 2.0, nodes);
    return 2.0 * area_ratio(d) * integral - wf.V(-1.0);
}

double kernel_eval(const KernelSpec& spec, const UnitPoint& x, const UnitPoint& y) {
    if (spec.weight)
        return kernel_weighted(spec.d, x, y, *spec.weight, spec.nodes);
    return kernel_unweighted(spec.d, x, y);
}

double induced_distance(const KernelSpec& spec, const UnitPoint& x,
                        const UnitPoint& y) {
    const double kxx = kernel_eval(spec, x, x);
    const double kyy = kernel_eval(spec, y, y);
    const double kxy = kernel_eval(spec, x, y);
    double r = kxx - 2.0 * kxy + kyy;
    if (r < 0.0) {
        if (r < -1e-12)
            throw std::runtime_error("induced_distance: negative radicand beyond tolerance");
        r = 0.0;
    }
    return std::sqrt(r);
}

}  // namespace sphcap
