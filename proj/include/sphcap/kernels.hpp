#ifndef SPHCAP_KERNELS_HPP
#define SPHCAP_KERNELS_HPP

#include <functional>
#include <optional>
#include <string>

#include "sphcap/sphere.hpp"

namespace sphcap {

/// Positive weight v on [-1,1] together with its antiderivative V.
struct WeightFunction {
    std::function<double(double)> v;
    std::function<double(double)> V;
    std::string label;

    /// Checks v > 0 and V' = v on a 1000-point grid; throws on failure.
    void validate() const;
};

WeightFunction unit_weight();

/// Parses the CLI weight spec: "one", or "poly:c0,c1,...,ck" meaning
/// v(t) = sum c_i t^i with its exact polynomial antiderivative (V(0) = 0).
/// Positivity is validated on the grid.
WeightFunction parse_weight(const std::string& spec);

/// K_C(x,y) = 1 - C_d ||x-y||.
double kernel_unweighted(int d, const UnitPoint& x, const UnitPoint& y);
double kernel_unweighted_ip(int d, double inner_product);

/// K_{C,v}(x,y) = int V(min(<x,z>,<y,z>)) dsigma_d(z) - V(-1), by nested
/// quadrature with the inner integral split at the kink.  Requires d >= 2.
double kernel_weighted(int d, const UnitPoint& x, const UnitPoint& y,
                       const WeightFunction& v, int nodes);
double kernel_weighted_ip(int d, double inner_product, const WeightFunction& v,
                          int nodes);

/// Cross-check route through the incomplete-beta form; rejects x = y.
double kernel_weighted_appendix(int d, const UnitPoint& x, const UnitPoint& y,
                                const WeightFunction& v, int nodes);
double kernel_weighted_appendix_ip(int d, double inner_product,
                                   const WeightFunction& v, int nodes);

/// int int K_{C,v} dsigma dsigma = int_{-1}^{1} v(t) cap_measure(d,t)^2 dt.
double kernel_mean(int d, const WeightFunction& v, int nodes);

/// The printed variant int_0^1 v(-t) I_{t^2}(1/2, d/2) dt, kept for the
/// consistency report; it disagrees with kernel_mean (e.g. 1/2 vs 2/3 for
/// v = 1, d = 2).
double kernel_mean_appendix_variant(int d, const WeightFunction& v, int nodes);

/// The other printed sub-form of the same quantity:
/// 2 (omega_{d-1}/omega_d) int_0^1 V(-t) (1-t^2)^{d/2-1} dt - V(-1).
double kernel_mean_appendix_variant_alt(int d, const WeightFunction& v,
                                        int nodes);

struct KernelSpec {
    int d;
    std::optional<WeightFunction> weight;  // empty -> unweighted kernel
    int nodes = 256;
};

double kernel_eval(const KernelSpec& spec, const UnitPoint& x, const UnitPoint& y);

/// sqrt(K(x,x) - 2 K(x,y) + K(y,y)); tiny negative radicands are clamped.
double induced_distance(const KernelSpec& spec, const UnitPoint& x,
                        const UnitPoint& y);

}  // namespace sphcap

#endif
