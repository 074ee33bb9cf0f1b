#include "sphcap/oracles.hpp"

#include <cmath>
#include <stdexcept>
#include <thread>
#include <vector>

#include "sphcap/special_functions.hpp"

namespace sphcap {

McEstimate Welford::estimate() const {
    McEstimate e;
    e.value = mean;
    e.samples = n;
    e.std_error = n >= 2 ? std::sqrt(m2 / (n - 1.0) / n) : 0.0;
    return e;
}

McEstimate mc_estimate(const McConfig& cfg,
                       const std::function<double(std::mt19937_64&)>& contribution) {
    if (cfg.samples < 1) throw std::domain_error("mc_estimate: samples must be >= 1");
    if (cfg.chunk_size < 1) throw std::domain_error("mc_estimate: chunk_size must be >= 1");
    const long long n_chunks = (cfg.samples + cfg.chunk_size - 1) / cfg.chunk_size;
    std::vector<Welford> stats(n_chunks);

    const auto run_chunk = [&](long long ci) {
        std::mt19937_64 gen(stream_seed(cfg.seed, static_cast<std::uint64_t>(ci)));
        const long long lo = ci * cfg.chunk_size;
        const long long hi = std::min<long long>(lo + cfg.chunk_size, cfg.samples);
        Welford w;
        for (long long s = lo; s < hi; ++s) w.add(contribution(gen));
        stats[ci] = w;
    };

    const int workers = std::max(1, cfg.threads);
    if (workers == 1 || n_chunks == 1) {
        for (long long ci = 0; ci < n_chunks; ++ci) run_chunk(ci);
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                for (long long ci = t; ci < n_chunks; ci += workers) run_chunk(ci);
            });
        for (auto& th : pool) th.join();
    }

    Welford total;  // merged in chunk order: identical for any worker count
    for (const Welford& w : stats) total.merge(w);
    return total.estimate();
}

namespace {

// One uniform point on S^d drawn into the scratch vector.
void draw_uniform(std::mt19937_64& gen, int d, std::vector<double>& z) {
    z.resize(d + 1);
    double s = 0.0;
    bool spare = false;
    double spare_val = 0.0;
    for (int i = 0; i <= d; ++i) {
        double g;
        if (spare) {
            g = spare_val;
            spare = false;
        } else {
            const double u1 = ((gen() >> 11) + 1.0) * 0x1.0p-53;
            const double u2 = (gen() >> 11) * 0x1.0p-53;
            const double r = std::sqrt(-2.0 * std::log(u1));
            const double a = 2.0 * M_PI * u2;
            g = r * std::cos(a);
            spare_val = r * std::sin(a);
            spare = true;
        }
        z[i] = g;
        s += g * g;
    }
    const double norm = std::sqrt(s);
    for (double& v : z) v /= norm;
}

double dot_raw(const std::vector<double>& a, const std::vector<double>& b) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace

McEstimate kernel_mc(const UnitPoint& x, const UnitPoint& y, const McConfig& cfg) {
    if (x.dim() != y.dim())
        throw std::domain_error("kernel_mc: dimension mismatch");
    const int d = x.dim();
    const std::vector<double> xc = x.coords(), yc = y.coords();
    return mc_estimate(cfg, [&, d](std::mt19937_64& gen) {
        thread_local std::vector<double> z;
        draw_uniform(gen, d, z);
        return 1.0 + std::min(dot_raw(xc, z), dot_raw(yc, z));
    });
}

McEstimate weighted_discrepancy_mc(const PointSet& P, const WeightFunction& wf,
                                   const McConfig& cfg) {
    const int d = P.d;
    const int N = P.size();
    std::vector<std::vector<double>> pts;
    pts.reserve(N);
    for (const UnitPoint& p : P.points) pts.push_back(p.coords());

    return mc_estimate(cfg, [&, d, N](std::mt19937_64& gen) {
        thread_local std::vector<double> z;
        draw_uniform(gen, d, z);
        const double t = -1.0 + 2.0 * uniform01(gen);
        const double vt = wf.v(t);
        if (!(vt > 0.0))
            throw std::domain_error("weighted_discrepancy_mc: non-positive weight at sampled t");
        int inside = 0;
        for (const auto& p : pts)
            if (dot_raw(z, p) >= t) ++inside;
        const double dev = cap_measure(d, t) - static_cast<double>(inside) / N;
        return 2.0 * vt * dev * dev;  // factor 2 = length of the t interval
    });
}

McEstimate discrepancy_mc(const PointSet& P, const McConfig& cfg) {
    return weighted_discrepancy_mc(P, unit_weight(), cfg);
}

McEstimate rho_mc(const UnitPoint& x, const UnitPoint& y,
                  const std::function<double(double)>& g, const McConfig& cfg) {
    if (x.dim() != y.dim())
        throw std::domain_error("rho_mc: dimension mismatch");
    const int d = x.dim();
    const std::vector<double> xc = x.coords(), yc = y.coords();
    const auto G = [&](double s) {  // antiderivative of g, normalized G(0) = 0
        return s == 0.0 ? 0.0 : integrate_gl(g, 0.0, s, 64);
    };
    return mc_estimate(cfg, [&, d](std::mt19937_64& gen) {
        thread_local std::vector<double> z;
        draw_uniform(gen, d, z);
        return std::fabs(G(dot_raw(xc, z)) - G(dot_raw(yc, z)));
    });
}

}  // namespace sphcap
