// Command-line front end: generate point sets, analyze quality measures,
// verify the invariance identities, run weighted analyses, and sweep N.

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "sphcap/oracles.hpp"
#include "sphcap/pointsets.hpp"
#include "sphcap/quality.hpp"
#include "sphcap/special_functions.hpp"

using namespace sphcap;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitIo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitVerifyFailed = 3;

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw std::runtime_error("cannot open output file " + out_path);
    out << text;
    if (!out) throw std::runtime_error("write failed for " + out_path);
}

struct CommonOpts {
    std::string in_path;
    std::string out_path;
    std::string format = "text";
    bool renormalize = false;
    int threads = 1;
};

int run_gen(const std::string& kind, int d, int n, std::uint64_t seed,
            const std::string& out_path) {
    GeneratorKind spec;
    try {
        spec.kind = parse_generator_name(kind);
        spec.d = d;
        spec.n = n;
        spec.seed = seed;
        PointSet P = generate(spec);
        save_csv_file(P, out_path);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_analyze(const CommonOpts& opts, const std::string& weight_spec) {
    try {
        PointSet P = load_csv_file(opts.in_path, opts.renormalize);
        QualityReport rep = analyze(P);
        if (!weight_spec.empty()) {
            const WeightFunction w = parse_weight(weight_spec);
            rep.weighted_wce[w.label] = weighted_wce(P, w, 256);
        }
        std::string text;
        if (opts.format == "json")
            text = rep.to_json() + "\n";
        else if (opts.format == "csv")
            text = rep.csv_header() + "\n" + rep.to_csv_row() + "\n";
        else
            text = rep.to_text();
        write_output(text, opts.out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_verify(const CommonOpts& opts, const std::string& weight_spec,
               long long mc_samples, std::uint64_t seed, int nodes,
               bool strict_appendix) {
    bool failed = false;
    nlohmann::ordered_json j;
    try {
        PointSet P = load_csv_file(opts.in_path, opts.renormalize);
        McConfig cfg;
        cfg.samples = mc_samples;
        cfg.seed = seed;
        cfg.threads = opts.threads;

        j["schema_version"] = 1;
        j["d"] = P.d;
        j["N"] = P.size();

        const Residual r = invariance_residual(P, std::nullopt, cfg, nodes);
        const double z = r.std_error > 0.0 ? r.residual / r.std_error : 0.0;
        j["unweighted"] = {{"residual", r.residual},
                           {"std_error", r.std_error},
                           {"z_score", z}};
        if (std::fabs(z) > 3.0) failed = true;

        std::optional<WeightFunction> w;
        if (!weight_spec.empty()) {
            w = parse_weight(weight_spec);
            const Residual rw = invariance_residual(P, w, cfg, nodes);
            const double zw = rw.std_error > 0.0 ? rw.residual / rw.std_error : 0.0;
            j["weighted"] = {{"weight", w->label},
                             {"residual", rw.residual},
                             {"std_error", rw.std_error},
                             {"z_score", zw}};
            if (std::fabs(zw) > 3.0) failed = true;
        }

        // Informational consistency report: the Fubini kernel mean against
        // the printed appendix variant, which disagree (e.g. 2/3 vs 1/2 for
        // the unit weight on S^2).
        const WeightFunction wmean = w ? *w : unit_weight();
        const double km = kernel_mean(P.d, wmean, nodes);
        const double ka = kernel_mean_appendix_variant(P.d, wmean, nodes);
        j["appendix_consistency"] = {{"weight", wmean.label},
                                     {"kernel_mean", km},
                                     {"appendix_variant", ka},
                                     {"discrepancy", km - ka},
                                     {"mismatch", std::fabs(km - ka) > 1e-9}};
        if (strict_appendix && std::fabs(km - ka) > 1e-9) failed = true;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }

    try {
        if (opts.format == "json") {
            write_output(j.dump(2) + "\n", opts.out_path);
        } else {
            std::ostringstream os;
            os.precision(17);
            os << "unweighted residual: " << j["unweighted"]["residual"].get<double>()
               << " std_error: " << j["unweighted"]["std_error"].get<double>()
               << " z: " << j["unweighted"]["z_score"].get<double>() << "\n";
            if (j.contains("weighted"))
                os << "weighted[" << j["weighted"]["weight"].get<std::string>()
                   << "] residual: " << j["weighted"]["residual"].get<double>()
                   << " std_error: " << j["weighted"]["std_error"].get<double>()
                   << " z: " << j["weighted"]["z_score"].get<double>() << "\n";
            os << "appendix check (informational): kernel_mean="
               << j["appendix_consistency"]["kernel_mean"].get<double>()
               << " appendix_variant="
               << j["appendix_consistency"]["appendix_variant"].get<double>()
               << " mismatch="
               << (j["appendix_consistency"]["mismatch"].get<bool>() ? "yes" : "no")
               << "\n";
            os << "verdict: " << (failed ? "FAIL" : "PASS") << "\n";
            write_output(os.str(), opts.out_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return failed ? kExitVerifyFailed : kExitOk;
}

int run_weighted(const CommonOpts& opts, const std::string& weight_spec, int nodes) {
    try {
        PointSet P = load_csv_file(opts.in_path, opts.renormalize);
        const WeightFunction w = parse_weight(weight_spec);
        QualityReport rep = analyze(P);
        rep.weighted_wce[w.label] = weighted_wce(P, w, nodes);
        std::string text;
        if (opts.format == "json")
            text = rep.to_json() + "\n";
        else if (opts.format == "csv")
            text = rep.csv_header() + "\n" + rep.to_csv_row() + "\n";
        else
            text = rep.to_text();
        write_output(text, opts.out_path);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

int run_sweep(const CommonOpts& opts, const std::string& kind, int d, int nmin,
              int nmax, int factor, std::uint64_t seed) {
    try {
        const GeneratorName k = parse_generator_name(kind);
        if (nmin < 1 || nmax < nmin || factor < 2)
            throw std::domain_error("sweep: need 1 <= nmin <= nmax and factor >= 2");

        struct Row {
            int n;
            double sum, gap, wce;
        };
        std::vector<Row> rows;
        for (long long n = nmin; n <= nmax; n *= factor) {
            PointSet P = generate({k, d, static_cast<int>(n), seed});
            Row r;
            r.n = static_cast<int>(n);
            r.sum = opts.threads > 1 ? sum_of_distances_parallel(P, opts.threads)
                                     : sum_of_distances(P);
            r.gap = mean_distance(d) - r.sum;
            r.wce = std::sqrt(std::max(0.0, distance_constant(d) * r.gap));
            rows.push_back(r);
        }

        // least-squares slope of log wce against log N
        bool have_slope = rows.size() >= 2;
        double slope = 0.0;
        if (have_slope) {
            double sx = 0, sy = 0, sxx = 0, sxy = 0;
            for (const Row& r : rows) {
                const double x = std::log(static_cast<double>(r.n));
                const double y = std::log(r.wce);
                sx += x;
                sy += y;
                sxx += x * x;
                sxy += x * y;
            }
            const double m = static_cast<double>(rows.size());
            slope = (m * sxy - sx * sy) / (m * sxx - sx * sx);
        }

        std::ostringstream os;
        os.precision(17);
        if (opts.format == "json") {
            nlohmann::ordered_json j;
            j["schema_version"] = 1;
            j["kind"] = kind;
            j["d"] = d;
            j["rows"] = nlohmann::ordered_json::array();
            for (const Row& r : rows)
                j["rows"].push_back({{"N", r.n},
                                     {"sum_of_distances", r.sum},
                                     {"energy_gap", r.gap},
                                     {"wce", r.wce}});
            if (have_slope)
                j["log_log_slope"] = slope;
            else
                j["log_log_slope"] = nullptr;
            os << j.dump(2) << "\n";
        } else {
            os << "N,sum_of_distances,energy_gap,wce\n";
            for (const Row& r : rows)
                os << r.n << "," << r.sum << "," << r.gap << "," << r.wce << "\n";
            if (have_slope)
                os << "log_log_slope," << slope << "\n";
            else
                os << "log_log_slope,not-available\n";
        }
        write_output(os.str(), opts.out_path);
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Point-set quality on the sphere: sum-of-distances energy, cap "
                 "L2 discrepancy, worst-case integration error, and numerical "
                 "verification of the invariance identities tying them together"};
    app.require_subcommand(1);

    CommonOpts opts;
    app.add_option("--threads", opts.threads, "worker threads (results are independent of this)");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a point set as CSV");
    std::string kind = "random", out_path, weight_spec;
    int d = 2, n = 100;
    std::uint64_t seed = 0;
    gen->add_option("--kind", kind, "random|fibonacci|antipodal|cross_polytope|simplex")->required();
    gen->add_option("--d", d, "sphere dimension");
    gen->add_option("--n", n, "point count (ignored by kinds with a forced count)");
    gen->add_option("--seed", seed, "seed for random");
    gen->add_option("--out", out_path, "output CSV path")->required();

    // analyze
    auto* analyze_cmd = app.add_subcommand("analyze", "quality report for a point file");
    analyze_cmd->add_option("--in", opts.in_path, "input CSV")->required();
    analyze_cmd->add_option("--out", opts.out_path, "output path (default stdout)");
    analyze_cmd->add_option("--format", opts.format, "json|csv|text");
    analyze_cmd->add_option("--weight", weight_spec, "optional weight spec (one | poly:c0,c1,...)");
    analyze_cmd->add_flag("--renormalize", opts.renormalize, "fix near-unit rows within 1e-6");

    // verify
    auto* verify = app.add_subcommand("verify", "Monte Carlo residual check of the invariance identities");
    long long mc_samples = 1000000;
    int nodes = 256;
    bool strict_appendix = false;
    verify->add_option("--in", opts.in_path, "input CSV")->required();
    verify->add_option("--out", opts.out_path, "output path (default stdout)");
    verify->add_option("--format", opts.format, "json|text");
    verify->add_option("--mc-samples", mc_samples, "Monte Carlo samples (>= 1000)")
        ->check(CLI::Range(1000LL, (1LL << 40)));
    verify->add_option("--seed", seed, "Monte Carlo seed");
    verify->add_option("--nodes", nodes, "quadrature nodes");
    verify->add_option("--weight", weight_spec, "weight spec for the weighted identity");
    verify->add_flag("--strict-appendix", strict_appendix,
                     "escalate the appendix-variant mismatch to a failure");
    verify->add_flag("--renormalize", opts.renormalize, "fix near-unit rows within 1e-6");

    // weighted
    auto* weighted = app.add_subcommand("weighted", "weighted worst-case error report");
    weighted->add_option("--in", opts.in_path, "input CSV")->required();
    weighted->add_option("--out", opts.out_path, "output path (default stdout)");
    weighted->add_option("--format", opts.format, "json|csv|text");
    weighted->add_option("--weight", weight_spec, "weight spec (one | poly:c0,c1,...)")->required();
    weighted->add_option("--nodes", nodes, "quadrature nodes");
    weighted->add_flag("--renormalize", opts.renormalize, "fix near-unit rows within 1e-6");

    // sweep
    auto* sweep = app.add_subcommand("sweep", "quality measures over a geometric N grid");
    int nmin = 16, nmax = 4096, factor = 2;
    sweep->add_option("--kind", kind, "generator kind")->required();
    sweep->add_option("--d", d, "sphere dimension");
    sweep->add_option("--nmin", nmin, "smallest N");
    sweep->add_option("--nmax", nmax, "largest N");
    sweep->add_option("--factor", factor, "geometric growth factor");
    sweep->add_option("--seed", seed, "seed for random");
    sweep->add_option("--out", opts.out_path, "output path (default stdout)");
    sweep->add_option("--format", opts.format, "json|csv (csv is the text form)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitUsage;
    }

    if (opts.format != "json" && opts.format != "csv" && opts.format != "text") {
        std::cerr << "error: unknown format " << opts.format << "\n";
        return kExitUsage;
    }

    if (gen->parsed()) return run_gen(kind, d, n, seed, out_path);
    if (analyze_cmd->parsed()) return run_analyze(opts, weight_spec);
    if (verify->parsed())
        return run_verify(opts, weight_spec, mc_samples, seed, nodes, strict_appendix);
    if (weighted->parsed()) return run_weighted(opts, weight_spec, nodes);
    if (sweep->parsed()) return run_sweep(opts, kind, d, nmin, nmax, factor, seed);
    return kExitUsage;
}
