#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "sphcap/quadrature.hpp"
#include "sphcap/special_functions.hpp"

using namespace sphcap;

namespace {

// Independent oracle for the incomplete beta integral: substitute t = sin^2
// so the endpoint singularities disappear for a, b >= 1/2.
double beta_lower_oracle(double z, double a, double b) {
    return integrate_gl(
        [&](double th) {
            return 2.0 * std::pow(std::sin(th), 2.0 * a - 1.0) *
                   std::pow(std::cos(th), 2.0 * b - 1.0);
        },
        0.0, std::asin(std::sqrt(z)), 400);
}

double reg_beta_oracle(double z, double a, double b) {
    return beta_lower_oracle(z, a, b) / beta_lower_oracle(1.0, a, b);
}

// Gamma(x) by quadrature of 2 int_0^inf u^{2x-1} e^{-u^2} du (truncated).
double gamma_oracle(double x) {
    return integrate_gl(
        [&](double u) { return 2.0 * std::pow(u, 2.0 * x - 1.0) * std::exp(-u * u); },
        0.0, 12.0, 600);
}

}  // namespace

TEST_CASE("log_gamma basic values") {
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
    // Oracle comparison; the analytic value is ln sqrt(pi).
    CHECK(log_gamma(0.5) ==
          doctest::Approx(std::log(gamma_oracle(0.5))).epsilon(1e-12));
    CHECK(log_gamma(0.5) ==
          doctest::Approx(0.5 * std::log(M_PI)).epsilon(1e-14));
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(std::nan("")), std::domain_error);
}

TEST_CASE("regularized incomplete beta") {
    CHECK(regularized_incomplete_beta(0.0, 2.0, 3.0) == 0.0);
    CHECK(regularized_incomplete_beta(1.0, 2.0, 3.0) == 1.0);
    for (double z : {0.1, 0.25, 0.5, 0.77, 0.99})
        CHECK(regularized_incomplete_beta(z, 0.5, 1.0) ==
              doctest::Approx(std::sqrt(z)).epsilon(1e-13));
    // cross-check against the quadrature oracle over the cap-measure range
    for (double a : {0.5, 1.0, 2.5})
        for (double b : {0.5, 1.5, 5.0})
            for (double z : {0.05, 0.3, 0.6, 0.95})
                CHECK(regularized_incomplete_beta(z, a, b) ==
                      doctest::Approx(reg_beta_oracle(z, a, b)).epsilon(1e-10));
    CHECK_THROWS_AS(regularized_incomplete_beta(-0.1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_incomplete_beta(1.1, 1.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_incomplete_beta(0.5, 0.0, 1.0), std::domain_error);
    CHECK_THROWS_AS(regularized_incomplete_beta(0.5, 1.0, -2.0), std::domain_error);
}

TEST_CASE("incomplete beta symmetry and monotonicity") {
    for (double a : {0.5, 1.5, 4.0})
        for (double b : {0.5, 2.0})
            for (double z : {0.1, 0.4, 0.8}) {
                const double s = regularized_incomplete_beta(z, a, b) +
                                 regularized_incomplete_beta(1.0 - z, b, a);
                CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
            }
    double prev = 0.0;
    for (int i = 0; i <= 100; ++i) {
        const double z = i / 100.0;
        const double v = regularized_incomplete_beta(z, 0.5, 3.0);
        CHECK(v >= prev - 1e-15);
        prev = v;
    }
}

TEST_CASE("area_ratio and distance_constant") {
    CHECK(area_ratio(2) == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(area_ratio(1) == doctest::Approx(1.0 / M_PI).epsilon(1e-13));
    CHECK(distance_constant(2) == doctest::Approx(0.25).epsilon(1e-13));
    CHECK(distance_constant(3) == doctest::Approx(2.0 / (3.0 * M_PI)).epsilon(1e-13));
    for (int d = 1; d <= 20; ++d) {
        CHECK(d * distance_constant(d) ==
              doctest::Approx(area_ratio(d)).epsilon(1e-14));
        const double c = distance_constant(d);
        CHECK(2.0 * c > 0.0);
        CHECK(2.0 * c < 1.0);
    }
    // large-d asymptotics C_d ~ 1/sqrt(2 pi d)
    CHECK(distance_constant(10000) * std::sqrt(2.0 * M_PI * 10000.0) ==
          doctest::Approx(1.0).epsilon(1e-2));
    CHECK_THROWS_AS(area_ratio(0), std::domain_error);

    // very large d: the closed forms stay finite and match the Gaussian limits
    // cap_measure(d, t) -> Phi(-sqrt(d) t) and mean_distance -> sqrt(2)
    const int big = 1000000;
    CHECK(distance_constant(big) * std::sqrt(2.0 * M_PI * big) ==
          doctest::Approx(1.0).epsilon(1e-5));
    CHECK(cap_measure(big, 1.0 / std::sqrt(static_cast<double>(big))) ==
          doctest::Approx(0.5 * std::erfc(1.0 / std::sqrt(2.0))).epsilon(1e-3));
    CHECK(mean_distance(big) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-5));
}

TEST_CASE("cap_measure") {
    for (int d : {1, 2, 3, 5, 8}) {
        CHECK(cap_measure(d, -1.0) == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(cap_measure(d, 1.0) == doctest::Approx(0.0).epsilon(1e-14));
        CHECK(cap_measure(d, 0.0) == doctest::Approx(0.5).epsilon(1e-14));
    }
    for (double t : {-0.9, -0.3, 0.2, 0.7})
        CHECK(cap_measure(2, t) == doctest::Approx((1.0 - t) / 2.0).epsilon(1e-13));
    CHECK_THROWS_AS(cap_measure(2, 1.5), std::domain_error);

    SUBCASE("antipodal symmetry and monotonicity on a grid") {
        for (int d : {1, 2, 3, 7}) {
            double prev = 2.0;
            for (int i = 0; i <= 1000; ++i) {
                const double t = -1.0 + 2.0 * i / 1000.0;
                const double m = cap_measure(d, t);
                CHECK(m >= -1e-15);
                CHECK(m <= 1.0 + 1e-15);
                CHECK(m <= prev + 1e-12);
                prev = m;
                CHECK(cap_measure(d, -t) + m == doctest::Approx(1.0).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("mean_distance") {
    CHECK(mean_distance(2) == doctest::Approx(4.0 / 3.0).epsilon(1e-13));
    CHECK(mean_distance(1) == doctest::Approx(4.0 / M_PI).epsilon(1e-13));
    // Closed Beta-function oracle:
    // I_d = (omega_{d-1}/omega_d) 2^d B((d+1)/2, d/2).
    for (int d = 1; d <= 16; ++d) {
        const double oracle =
            area_ratio(d) * std::pow(2.0, d) *
            std::exp(log_gamma((d + 1) / 2.0) + log_gamma(d / 2.0) -
                     log_gamma(d + 0.5));
        CHECK(mean_distance(d) == doctest::Approx(oracle).epsilon(1e-12));
        CHECK(mean_distance(d) < 2.0);
    }
}
