#include "sphcap/special_functions.hpp"

#include <cmath>
#include <stdexcept>

#include "sphcap/quadrature.hpp"

namespace sphcap {

double log_gamma(double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("log_gamma: argument must be positive and finite");
    return std::lgamma(x);
}

namespace {

// Continued fraction for the incomplete beta function (modified Lentz).
double beta_cf(double z, double a, double b) {
    const double tiny = 1e-300;
    const double eps = 1e-16;
    const double qab = a + b, qap = a + 1.0, qam = a - 1.0;
    double c = 1.0;
    double d = 1.0 - qab * z / qap;
    if (std::fabs(d) < tiny) d = tiny;
    d = 1.0 / d;
    double h = d;
    for (int m = 1; m <= 300; ++m) {
        const int m2 = 2 * m;
        double aa = m * (b - m) * z / ((qam + m2) * (a + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        h *= d * c;
        aa = -(a + m) * (qab + m) * z / ((a + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = 1.0 + aa / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::fabs(del - 1.0) < eps) return h;
    }
    throw std::runtime_error("regularized_incomplete_beta: continued fraction did not converge");
}

}  // namespace

double regularized_incomplete_beta(double z, double a, double b) {
    if (!(a > 0.0) || !(b > 0.0))
        throw std::domain_error("regularized_incomplete_beta: a, b must be positive");
    if (!(z >= 0.0 && z <= 1.0))
        throw std::domain_error("regularized_incomplete_beta: z must lie in [0,1]");
    if (z == 0.0) return 0.0;
    if (z == 1.0) return 1.0;
    const double log_front = a * std::log(z) + b * std::log1p(-z) -
                             (log_gamma(a) + log_gamma(b) - log_gamma(a + b));
    // Symmetry switch keeps the continued fraction in its fast-converging regime.
    if (z < (a + 1.0) / (a + b + 2.0))
        return std::exp(log_front) * beta_cf(z, a, b) / a;
    return 1.0 - std::exp(log_front) * beta_cf(1.0 - z, b, a) / b;
}

double area_ratio(int d) {
    if (d < 1) throw std::domain_error("area_ratio: d must be >= 1");
    return std::exp(log_gamma((d + 1) / 2.0) - 0.5 * std::log(M_PI) -
                    log_gamma(d / 2.0));
}

double distance_constant(int d) {
    if (d < 1) throw std::domain_error("distance_constant: d must be >= 1");
    return area_ratio(d) / d;
}

double cap_measure(int d, double t) {
    if (d < 1) throw std::domain_error("cap_measure: d must be >= 1");
    if (!(t >= -1.0 && t <= 1.0))
        throw std::domain_error("cap_measure: t must lie in [-1,1]");
    if (t == 0.0) return 0.5;
    const double half_ib = 0.5 * regularized_incomplete_beta(t * t, 0.5, d / 2.0);
    return t > 0.0 ? 0.5 - half_ib : 0.5 + half_ib;
}

double mean_distance(int d) {
    if (d < 1) throw std::domain_error("mean_distance: d must be >= 1");
    // Zonal reduction: I_d = (omega_{d-1}/omega_d) int_{-1}^{1} sqrt(2-2t) (1-t^2)^{d/2-1} dt.
    // sqrt(2-2t) = sqrt(2) (1-t)^{1/2} is absorbed into the Jacobi weight,
    // leaving a constant integrand.
    const GaussRule r = gauss_jacobi(8, (d - 1) / 2.0, d / 2.0 - 1.0);
    double s = 0.0;
    for (double w : r.weights) s += w;
    return area_ratio(d) * std::sqrt(2.0) * s;
}

}  // namespace sphcap
