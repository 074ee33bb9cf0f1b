#include "sphcap/pointsets.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace sphcap {

GeneratorName parse_generator_name(const std::string& s) {
    if (s == "random") return GeneratorName::random;
    if (s == "fibonacci") return GeneratorName::fibonacci;
    if (s == "antipodal") return GeneratorName::antipodal;
    if (s == "cross_polytope") return GeneratorName::cross_polytope;
    if (s == "simplex") return GeneratorName::simplex;
    throw std::domain_error("unknown generator kind \"" + s + "\"");
}

std::string generator_name_string(GeneratorName k) {
    switch (k) {
        case GeneratorName::random: return "random";
        case GeneratorName::fibonacci: return "fibonacci";
        case GeneratorName::antipodal: return "antipodal";
        case GeneratorName::cross_polytope: return "cross_polytope";
        case GeneratorName::simplex: return "simplex";
    }
    return "?";
}

namespace {

PointSet make_fibonacci(int n) {
    if (n < 1) throw std::domain_error("fibonacci: n must be >= 1");
    // Midpoint latitude convention z_j = 1 - 2(j+0.5)/n, golden-angle longitude.
    const double golden_angle = M_PI * (3.0 - std::sqrt(5.0));
    std::vector<UnitPoint> pts;
    pts.reserve(n);
    for (int j = 0; j < n; ++j) {
        const double z = 1.0 - 2.0 * (j + 0.5) / n;
        const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
        const double phi = golden_angle * j;
        pts.push_back(UnitPoint({r * std::cos(phi), r * std::sin(phi), z}));
    }
    return PointSet(2, std::move(pts));
}

PointSet make_antipodal(int d) {
    std::vector<double> north(d + 1, 0.0);
    north[d] = 1.0;
    UnitPoint p(north);
    return PointSet(d, {p, p.antipode()});
}

PointSet make_cross_polytope(int d) {
    std::vector<UnitPoint> pts;
    for (int i = 0; i <= d; ++i) {
        std::vector<double> e(d + 1, 0.0);
        e[i] = 1.0;
        pts.emplace_back(e);
        e[i] = -1.0;
        pts.emplace_back(e);
    }
    return PointSet(d, std::move(pts));
}

PointSet make_simplex(int d) {
    // Regular simplex with n = d+2 vertices in R^{d+1}: project the standard
    // basis of R^{d+2} onto the hyperplane orthogonal to (1,...,1) using the
    // Helmert basis, then normalize.
    const int n = d + 2;
    std::vector<UnitPoint> pts;
    for (int i = 0; i < n; ++i) {
        std::vector<double> x(d + 1, 0.0);
        for (int k = 1; k < n; ++k) {
            // Helmert row k: (1,...,1,-k,0,...,0)/sqrt(k(k+1)), k leading ones.
            double h;
            if (i < k)
                h = 1.0 / std::sqrt(k * (k + 1.0));
            else if (i == k)
                h = -k / std::sqrt(k * (k + 1.0));
            else
                h = 0.0;
            x[k - 1] = h;
        }
        double s = 0.0;
        for (double c : x) s += c * c;
        const double norm = std::sqrt(s);
        for (double& c : x) c /= norm;
        pts.emplace_back(std::move(x));
    }
    return PointSet(d, std::move(pts));
}

}  // namespace

PointSet generate(const GeneratorKind& spec) {
    if (spec.d < 1) throw std::domain_error("generate: d must be >= 1");
    switch (spec.kind) {
        case GeneratorName::random:
            return sample_uniform(spec.d, spec.n, spec.seed);
        case GeneratorName::fibonacci:
            if (spec.d != 2)
                throw std::domain_error("generate: fibonacci requires d=2");
            return make_fibonacci(spec.n);
        case GeneratorName::antipodal:
            return make_antipodal(spec.d);
        case GeneratorName::cross_polytope:
            return make_cross_polytope(spec.d);
        case GeneratorName::simplex:
            return make_simplex(spec.d);
    }
    throw std::domain_error("generate: unknown kind");
}

void save_csv(const PointSet& P, std::ostream& out) {
    out << "# d=" << P.d << "\n";
    out << std::setprecision(17);
    for (const UnitPoint& p : P.points) {
        for (int i = 0; i <= P.d; ++i) {
            if (i) out << ",";
            out << p[i];
        }
        out << "\n";
    }
}

void save_csv_file(const PointSet& P, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_csv: cannot open " + path);
    save_csv(P, out);
    if (!out) throw std::runtime_error("save_csv: write failed for " + path);
}

PointSet load_csv(std::istream& in, bool renormalize) {
    std::string line;
    int d = -1;
    int lineno = 0;
    std::vector<UnitPoint> pts;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto pos = line.find("d=");
            if (d < 0 && pos != std::string::npos) {
                try {
                    d = std::stoi(line.substr(pos + 2));
                } catch (const std::exception&) {
                    throw std::runtime_error("load_csv: bad header at line " +
                                             std::to_string(lineno));
                }
            }
            continue;
        }
        if (d < 1)
            throw std::runtime_error("load_csv: missing \"# d=<d>\" header before line " +
                                     std::to_string(lineno));
        std::vector<double> c;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            std::size_t pos = 0;
            double val;
            try {
                val = std::stod(tok, &pos);
            } catch (const std::exception&) {
                throw std::runtime_error("load_csv: non-numeric token at line " +
                                         std::to_string(lineno));
            }
            while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos])))
                ++pos;
            if (pos != tok.size())
                throw std::runtime_error("load_csv: non-numeric token at line " +
                                         std::to_string(lineno));
            c.push_back(val);
        }
        if (static_cast<int>(c.size()) != d + 1)
            throw std::runtime_error("load_csv: expected " + std::to_string(d + 1) +
                                     " columns at line " + std::to_string(lineno));
        try {
            pts.emplace_back(std::move(c), renormalize);
        } catch (const std::exception& e) {
            throw std::runtime_error("load_csv: " + std::string(e.what()) +
                                     " at line " + std::to_string(lineno));
        }
    }
    if (d < 1 || pts.empty())
        throw std::runtime_error("load_csv: no points found");
    return PointSet(d, std::move(pts));
}

PointSet load_csv_file(const std::string& path, bool renormalize) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_csv: cannot open " + path);
    return load_csv(in, renormalize);
}

}  // namespace sphcap
