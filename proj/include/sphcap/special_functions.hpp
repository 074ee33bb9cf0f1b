#ifndef SPHCAP_SPECIAL_FUNCTIONS_HPP
#define SPHCAP_SPECIAL_FUNCTIONS_HPP

namespace sphcap {

/// ln Gamma(x) for x > 0.
double log_gamma(double x);

/// Regularized incomplete beta function I_z(a,b), z in [0,1], a,b > 0.
double regularized_incomplete_beta(double z, double a, double b);

/// omega_{d-1}/omega_d = Gamma((d+1)/2) / (sqrt(pi) Gamma(d/2)), d >= 1.
double area_ratio(int d);

/// C_d = (1/d) * omega_{d-1}/omega_d.  Satisfies 0 < 2 C_d < 1.
double distance_constant(int d);

/// Normalized surface measure of the cap {z : <c,z> >= t} on S^d.
/// Equals 1/2 - sign(t) * (1/2) * I_{t^2}(1/2, d/2).
double cap_measure(int d, double t);

/// I_d = double distance integral of the uniform measure on S^d.
double mean_distance(int d);

}  // namespace sphcap

#endif
