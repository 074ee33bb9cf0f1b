// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure.  Each criterion pins its tolerance in code.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "sphcap/kernels.hpp"
#include "sphcap/oracles.hpp"
#include "sphcap/pointsets.hpp"
#include "sphcap/quality.hpp"
#include "sphcap/special_functions.hpp"

using namespace sphcap;

namespace {

int failures = 0;

void report(int criterion, const std::string& what, bool ok,
            const std::string& detail = "") {
    std::printf("%s criterion %d: %s%s%s\n", ok ? "PASS" : "FAIL", criterion,
                what.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
    if (!ok) ++failures;
}

McConfig mc(long long samples, std::uint64_t seed, int threads = 4) {
    McConfig c;
    c.samples = samples;
    c.seed = seed;
    c.threads = threads;
    return c;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// 1. Unweighted invariance identity: MC estimate of L2(P)^2 matches
//    C_d (I_d - sum_of_distances) within 3 standard errors.
void criterion_1() {
    struct Case {
        std::string name;
        PointSet P;
    };
    std::vector<Case> cases;
    for (int N : {1, 2, 6, 100}) {
        cases.push_back({"random N=" + std::to_string(N),
                         generate({GeneratorName::random, 2, N, 1})});
        cases.push_back({"fibonacci N=" + std::to_string(N),
                         generate({GeneratorName::fibonacci, 2, N, 0})});
    }
    // cross_polytope has the forced count N = 6 on S^2
    cases.push_back({"cross_polytope N=6",
                     generate({GeneratorName::cross_polytope, 2, 0, 0})});

    bool all_ok = true;
    std::string detail;
    for (const Case& c : cases) {
        const auto t0 = std::chrono::steady_clock::now();
        const double closed =
            distance_constant(2) * (mean_distance(2) - sum_of_distances(c.P));
        const McEstimate e = discrepancy_mc(c.P, mc(1000000, 1));
        const double secs = seconds_since(t0);
        const bool ok =
            std::fabs(e.value - closed) <= 3.0 * e.std_error && secs <= 60.0;
        if (!ok) {
            all_ok = false;
            detail += c.name + " z=" +
                      std::to_string((e.value - closed) / e.std_error) + " ";
        }
    }
    report(1, "unweighted invariance identity across generators and N", all_ok,
           detail);
}

// 2. Weighted invariance identity with v(t) = 1 + t^2, random N = 20.
void criterion_2() {
    const auto t0 = std::chrono::steady_clock::now();
    const WeightFunction w = parse_weight("poly:1,0,1");
    PointSet P = generate({GeneratorName::random, 2, 20, 2});
    const McEstimate e = weighted_discrepancy_mc(P, w, mc(1000000, 2));

    double gram = 0.0;
    for (int k = 0; k < P.size(); ++k)
        for (int l = 0; l < P.size(); ++l)
            gram += kernel_weighted(2, P.points[k], P.points[l], w, 256);
    gram /= static_cast<double>(P.size()) * P.size();
    const double closed = gram - kernel_mean(2, w, 256);
    const double secs = seconds_since(t0);

    const bool ok =
        std::fabs(e.value - closed) <= 3.0 * e.std_error && secs <= 300.0;
    report(2, "weighted invariance identity (v = 1+t^2, N = 20)", ok,
           "z=" + std::to_string((e.value - closed) / e.std_error) +
               " t=" + std::to_string(secs) + "s");
}

// 3. The constant C_d: MC of (1/2) int |<p,z>| dsigma vs the Gamma formula.
void criterion_3() {
    bool ok = true;
    std::string detail;
    for (int d : {2, 3, 5}) {
        std::vector<double> pole(d + 1, 0.0);
        pole[d] = 1.0;
        UnitPoint p(pole);
        const McEstimate e = mc_estimate(mc(10000000, 3), [&](std::mt19937_64& gen) {
            PointSet z = sample_uniform(d, 1, gen());
            return 0.5 * std::fabs(dot(z.points[0], p));
        });
        const double cd = distance_constant(d);
        if (std::fabs(e.value - cd) > 3.0 * e.std_error) {
            ok = false;
            detail += "d=" + std::to_string(d) + " ";
        }
    }
    if (std::fabs(distance_constant(2) - 0.25) > 1e-13) {
        ok = false;
        detail += "C_2 formula ";
    }
    const double tail = distance_constant(10000) * std::sqrt(2.0 * M_PI * 10000.0);
    if (!(tail >= 0.99 && tail <= 1.01)) {
        ok = false;
        detail += "asymptotics ";
    }
    report(3, "distance constant C_d (MC, exact value, asymptotics)", ok, detail);
}

// 4. Kernel closed form on 100 random pairs plus exact endpoints.
void criterion_4() {
    bool ok = true;
    std::string detail;
    PointSet P = sample_uniform(2, 200, 4);
    for (int i = 0; i < 100; ++i) {
        const UnitPoint &x = P.points[2 * i], &y = P.points[2 * i + 1];
        const McEstimate e = kernel_mc(x, y, mc(100000, 140 + i));
        const double closed = 1.0 - 0.25 * chordal_distance(x, y);
        if (std::fabs(e.value - closed) > 3.0 * e.std_error) {
            ok = false;
            detail += "pair " + std::to_string(i) + " ";
        }
    }
    const UnitPoint x = P.points[0];
    if (std::fabs(kernel_unweighted(2, x, x) - 1.0) > 1e-12) ok = false;
    if (std::fabs(kernel_unweighted(2, x, x.antipode()) -
                  (1.0 - 2.0 * distance_constant(2))) > 1e-12)
        ok = false;
    report(4, "kernel closed form vs MC oracle and endpoints", ok, detail);
}

// 5. Weighted reduction: v = 1 reproduces the unweighted kernel and wce.
void criterion_5() {
    bool ok = true;
    std::string detail;
    const WeightFunction one = unit_weight();
    for (int d : {2, 3}) {
        PointSet P = sample_uniform(d, 2000, 5);
        double worst = 0.0;
        for (int i = 0; i < 1000; ++i) {
            const UnitPoint &x = P.points[2 * i], &y = P.points[2 * i + 1];
            worst = std::max(worst,
                             std::fabs(kernel_weighted(d, x, y, one, 256) -
                                       kernel_unweighted(d, x, y)));
        }
        if (worst > 1e-8) {
            ok = false;
            detail += "kernel d=" + std::to_string(d) +
                      " worst=" + std::to_string(worst) + " ";
        }
    }
    for (int N : {1, 10, 100}) {
        PointSet P = sample_uniform(2, N, 50 + N);
        const double diff =
            std::fabs(weighted_wce(P, one, 256) - worst_case_error(P));
        if (diff > 1e-7) {
            ok = false;
            detail += "wce N=" + std::to_string(N) + " ";
        }
    }
    report(5, "weighted kernel and wce reduce to the unweighted forms", ok, detail);
}

// 6. Appendix consistency report.
void criterion_6() {
    const WeightFunction one = unit_weight();
    const double km = kernel_mean(2, one, 512);
    const double ka = kernel_mean_appendix_variant(2, one, 512);
    bool ok = std::fabs(km - 2.0 / 3.0) <= 1e-10;
    ok = ok && std::fabs(km - (1.0 - distance_constant(2) * mean_distance(2))) <= 1e-10;
    ok = ok && std::fabs(ka - 0.5) <= 1e-10;
    report(6, "kernel mean 2/3 vs printed appendix variant 1/2", ok,
           "kernel_mean=" + std::to_string(km) +
               " appendix=" + std::to_string(ka));
}

// 7. Positive semidefiniteness of both Gram matrices.
void criterion_7() {
    PointSet P = sample_uniform(2, 10, 7);
    const WeightFunction w = parse_weight("poly:1,0,1");
    Eigen::MatrixXd Gu(10, 10), Gw(10, 10);
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) {
            Gu(i, j) = kernel_unweighted(2, P.points[i], P.points[j]);
            Gw(i, j) = kernel_weighted(2, P.points[i], P.points[j], w, 256);
        }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eu(Gu), ew(Gw);
    const double mu = eu.eigenvalues().minCoeff();
    const double mw = ew.eigenvalues().minCoeff();
    report(7, "Gram matrices positive semidefinite", mu >= -1e-9 && mw >= -1e-9,
           "min eigenvalues " + std::to_string(mu) + ", " + std::to_string(mw));
}

// 8. Decay rates from N sweeps.
void criterion_8() {
    const auto t0 = std::chrono::steady_clock::now();
    const auto slope_for = [&](GeneratorName kind, std::uint64_t seed) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        int m = 0;
        for (int n = 16; n <= 4096; n *= 2) {
            PointSet P = generate({kind, 2, n, seed});
            const double x = std::log(static_cast<double>(n));
            const double y = std::log(worst_case_error(P));
            sx += x;
            sy += y;
            sxx += x * x;
            sxy += x * y;
            ++m;
        }
        return (m * sxy - sx * sy) / (m * sxx - sx * sx);
    };
    const double fib = slope_for(GeneratorName::fibonacci, 0);
    const double rnd = slope_for(GeneratorName::random, 8);
    const double secs = seconds_since(t0);
    const bool ok = fib >= -0.85 && fib <= -0.65 && rnd >= -0.6 && rnd <= -0.4 &&
                    secs <= 120.0;
    report(8, "wce decay slopes (fibonacci, random)", ok,
           "fibonacci=" + std::to_string(fib) + " random=" + std::to_string(rnd) +
               " t=" + std::to_string(secs) + "s");
}

// 9. Determinism across runs and worker counts.
void criterion_9() {
    PointSet P = sample_uniform(2, 50, 9);
    const McEstimate a = discrepancy_mc(P, mc(500000, 90, 1));
    const McEstimate b = discrepancy_mc(P, mc(500000, 90, 1));
    const McEstimate c = discrepancy_mc(P, mc(500000, 90, 8));
    PointSet P2 = sample_uniform(2, 50, 9);
    bool ok = a.value == b.value && a.std_error == b.std_error &&
              a.value == c.value && a.std_error == c.std_error;
    for (int i = 0; i < 50 && ok; ++i)
        for (int k = 0; k <= 2; ++k)
            if (P.points[i][k] != P2.points[i][k]) ok = false;
    ok = ok && sum_of_distances(P) == sum_of_distances_parallel(P, 1);
    report(9, "bitwise determinism across runs and worker counts", ok);
}

// 10. Analytic spot values.
void criterion_10() {
    bool ok = true;
    std::string detail;
    PointSet single(2, {UnitPoint({0.0, 0.0, 1.0})});
    if (std::fabs(energy_gap(single) - 4.0 / 3.0) > 1e-12) {
        ok = false;
        detail += "energy_gap ";
    }
    UnitPoint n({0.0, 0.0, 1.0});
    PointSet anti(2, {n, n.antipode()});
    if (std::fabs(worst_case_error(anti) - std::sqrt(1.0 / 12.0)) > 1e-12) {
        ok = false;
        detail += "wce ";
    }
    const McEstimate rho =
        rho_mc(n, n.antipode(), [](double) { return 1.0; }, mc(1000000, 10));
    if (std::fabs(rho.value - 1.0) > 3.0 * rho.std_error) {
        ok = false;
        detail += "rho ";
    }
    report(10, "analytic spot values (energy gap, wce, rho)", ok, detail);
}

}  // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all acceptance criteria passed\n");
    return 0;
}
