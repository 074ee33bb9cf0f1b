#ifndef SPHCAP_POINTSETS_HPP
#define SPHCAP_POINTSETS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include "sphcap/sphere.hpp"

namespace sphcap {

enum class GeneratorName { random, fibonacci, antipodal, cross_polytope, simplex };

GeneratorName parse_generator_name(const std::string& s);
std::string generator_name_string(GeneratorName k);

struct GeneratorKind {
    GeneratorName kind = GeneratorName::random;
    int d = 2;
    int n = 1;  // ignored by kinds with a forced point count
    std::uint64_t seed = 0;
};

/// Deterministic generators.  Constraints: fibonacci requires d = 2;
/// antipodal forces n = 2; cross_polytope forces n = 2(d+1); simplex forces
/// n = d+2.  random delegates to sample_uniform.
PointSet generate(const GeneratorKind& spec);

/// CSV point file: first line "# d=<d>", then d+1 comma-separated decimals
/// per row at 17 significant digits; '#' lines are comments; LF endings.
void save_csv(const PointSet& P, std::ostream& out);
void save_csv_file(const PointSet& P, const std::string& path);

PointSet load_csv(std::istream& in, bool renormalize = false);
PointSet load_csv_file(const std::string& path, bool renormalize = false);

}  // namespace sphcap

#endif
