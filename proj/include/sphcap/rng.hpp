#ifndef SPHCAP_RNG_HPP
#define SPHCAP_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>

namespace sphcap {

// All randomness in the library flows through std::mt19937_64, whose output
// sequence is fixed by the C++ standard, so seeded results are bitwise
// reproducible across platforms.  Substream i of a base seed is obtained by
// running splitmix64 on seed + i * golden, the standard splitmix64 finalizer.

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(seed + stream * 0x9E3779B97F4A7C15ULL);
}

/// Uniform double in [0,1) from the high 53 bits.
inline double uniform01(std::mt19937_64& gen) {
    return (gen() >> 11) * 0x1.0p-53;
}

/// Standard normal variates by Box-Muller on explicit uniforms
/// (std::normal_distribution is not portable across library vendors).
class GaussianSampler {
public:
    explicit GaussianSampler(std::uint64_t seed) : gen_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        const double u1 = ((gen_() >> 11) + 1.0) * 0x1.0p-53;  // (0,1]
        const double u2 = (gen_() >> 11) * 0x1.0p-53;
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double a = 2.0 * M_PI * u2;
        spare_ = r * std::sin(a);
        have_spare_ = true;
        return r * std::cos(a);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace sphcap

#endif
