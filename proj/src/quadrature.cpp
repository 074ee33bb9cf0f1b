#include "sphcap/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "sphcap/special_functions.hpp"

namespace sphcap {

namespace {

// Classic Newton iteration on the Legendre recurrence.
GaussRule make_legendre(int n) {
    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    const double eps = 1e-15;
    const int m = (n + 1) / 2;
    for (int i = 0; i < m; ++i) {
        double z = std::cos(M_PI * (i + 0.75) / (n + 0.5));
        double pp = 0.0, z1;
        do {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * j + 1.0) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            z1 = z;
            z = z1 - p1 / pp;
        } while (std::fabs(z - z1) > eps);
        r.nodes[i] = -z;
        r.nodes[n - 1 - i] = z;
        r.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        r.weights[n - 1 - i] = r.weights[i];
    }
    return r;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
    if (n < 1) throw std::domain_error("gauss_legendre: n must be >= 1");
    static std::map<int, GaussRule> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_legendre(n)).first;
    return it->second;
}

GaussRule gauss_jacobi(int n, double alpha, double beta) {
    if (n < 1) throw std::domain_error("gauss_jacobi: n must be >= 1");
    if (alpha <= -1.0 || beta <= -1.0)
        throw std::domain_error("gauss_jacobi: exponents must exceed -1");

    // Golub-Welsch: eigen-decomposition of the Jacobi matrix built from the
    // three-term recurrence coefficients of the monic Jacobi polynomials.
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    const double ab = alpha + beta;
    for (int k = 0; k < n; ++k) {
        double a;
        if (k == 0)
            a = (beta - alpha) / (ab + 2.0);
        else
            a = (beta * beta - alpha * alpha) /
                ((2.0 * k + ab) * (2.0 * k + ab + 2.0));
        J(k, k) = a;
    }
    for (int k = 1; k < n; ++k) {
        double b2;
        if (k == 1)
            b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) /
                 ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
        else
            b2 = 4.0 * k * (k + alpha) * (k + beta) * (k + ab) /
                 ((2.0 * k + ab) * (2.0 * k + ab) * (2.0 * k + ab + 1.0) *
                  (2.0 * k + ab - 1.0));
        const double b = std::sqrt(b2);
        J(k, k - 1) = b;
        J(k - 1, k) = b;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    if (es.info() != Eigen::Success)
        throw std::runtime_error("gauss_jacobi: eigensolver failed");

    // mu0 = int_{-1}^{1} (1-t)^alpha (1+t)^beta dt = 2^{a+b+1} B(a+1, b+1)
    const double log_mu0 = (ab + 1.0) * std::log(2.0) + log_gamma(alpha + 1.0) +
                           log_gamma(beta + 1.0) - log_gamma(ab + 2.0);
    const double mu0 = std::exp(log_mu0);

    GaussRule r;
    r.nodes.resize(n);
    r.weights.resize(n);
    for (int i = 0; i < n; ++i) {
        r.nodes[i] = es.eigenvalues()(i);
        const double v0 = es.eigenvectors()(0, i);
        r.weights[i] = mu0 * v0 * v0;
    }
    return r;
}

}  // namespace sphcap
