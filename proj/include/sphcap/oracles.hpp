#ifndef SPHCAP_ORACLES_HPP
#define SPHCAP_ORACLES_HPP

#include <cstdint>
#include <functional>

#include "sphcap/kernels.hpp"
#include "sphcap/rng.hpp"
#include "sphcap/sphere.hpp"

namespace sphcap {

struct McConfig {
    long long samples = 1000000;
    std::uint64_t seed = 0;
    int chunk_size = 1 << 14;
    int threads = 1;  // chunks are merged in index order regardless
};

struct McEstimate {
    double value = 0.0;
    double std_error = 0.0;
    long long samples = 0;
};

/// Streaming mean/variance accumulator (Welford), mergeable in chunk order.
struct Welford {
    long long n = 0;
    double mean = 0.0;
    double m2 = 0.0;

    void add(double x) {
        ++n;
        const double delta = x - mean;
        mean += delta / n;
        m2 += delta * (x - mean);
    }
    void merge(const Welford& o) {
        if (o.n == 0) return;
        if (n == 0) {
            *this = o;
            return;
        }
        const double delta = o.mean - mean;
        const long long total = n + o.n;
        mean += delta * o.n / total;
        m2 += o.m2 + delta * delta * (static_cast<double>(n) * o.n / total);
        n = total;
    }
    McEstimate estimate() const;
};

/// Generic chunked Monte Carlo driver.  Chunk i draws from an engine seeded
/// with stream_seed(cfg.seed, i); contribution(gen) produces one sample.
McEstimate mc_estimate(const McConfig& cfg,
                       const std::function<double(std::mt19937_64&)>& contribution);

/// MC oracle for the defining cap double integral of K_C: samples z uniform,
/// integrates over t analytically, contribution 1 + min(<x,z>, <y,z>).
McEstimate kernel_mc(const UnitPoint& x, const UnitPoint& y, const McConfig& cfg);

/// MC oracle for the squared cap L2-discrepancy, sampled directly from its
/// definition with (z, t) uniform on S^d x [-1,1].
McEstimate discrepancy_mc(const PointSet& P, const McConfig& cfg);

/// Same estimator with the integrand multiplied by v(t).  With v = 1 this
/// follows the identical sample path as discrepancy_mc.
McEstimate weighted_discrepancy_mc(const PointSet& P, const WeightFunction& v,
                                   const McConfig& cfg);

/// MC estimate of rho(x,y) = int |G(<x,z>) - G(<y,z>)| dsigma_d(z), where G
/// is a numerical antiderivative of g.  (The integration bounds are read as
/// <x,z> and <y,z>, the only reading consistent with the g = 1 reduction to
/// a multiple of the Euclidean distance.)
McEstimate rho_mc(const UnitPoint& x, const UnitPoint& y,
                  const std::function<double(double)>& g, const McConfig& cfg);

}  // namespace sphcap

#endif
