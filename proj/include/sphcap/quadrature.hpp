#ifndef SPHCAP_QUADRATURE_HPP
#define SPHCAP_QUADRATURE_HPP

#include <vector>

namespace sphcap {

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1,1].
const GaussRule& gauss_legendre(int n);

/// n-point Gauss-Jacobi rule on [-1,1] with weight (1-t)^alpha (1+t)^beta,
/// alpha, beta > -1.  Computed by Golub-Welsch.
GaussRule gauss_jacobi(int n, double alpha, double beta);

/// Integrate f over [a,b] with an n-point Gauss-Legendre rule.
template <typename F>
double integrate_gl(F&& f, double a, double b, int n) {
    const GaussRule& r = gauss_legendre(n);
    const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < n; ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
    return half * s;
}

}  // namespace sphcap

#endif
