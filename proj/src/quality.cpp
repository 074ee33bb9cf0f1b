#include "sphcap/quality.hpp"

#include <chrono>
#include <cmath>
#include <map>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "sphcap/special_functions.hpp"

namespace sphcap {

namespace {

struct KahanSum {
    double sum = 0.0;
    double c = 0.0;
    void add(double x) {
        const double y = x - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
};

double clamp_radicand(double r, const char* who) {
    if (r < 0.0) {
        if (r < -1e-12)
            throw std::runtime_error(std::string(who) + ": negative radicand beyond tolerance");
        r = 0.0;
    }
    return r;
}

}  // namespace

double sum_of_distances(const PointSet& P) {
    const int N = P.size();
    KahanSum s;
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l)
            if (k != l) s.add(chordal_distance(P.points[k], P.points[l]));
    return s.sum / (static_cast<double>(N) * N);
}

double sum_of_distances_parallel(const PointSet& P, int threads) {
    const int N = P.size();
    const int workers = std::max(1, threads);
    std::vector<double> partial(workers, 0.0);
    std::vector<std::thread> pool;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            KahanSum s;
            for (int k = t; k < N; k += workers)
                for (int l = 0; l < N; ++l)
                    if (k != l) s.add(chordal_distance(P.points[k], P.points[l]));
            partial[t] = s.sum;
        });
    for (auto& th : pool) th.join();
    KahanSum total;  // merge in worker-index order
    for (double p : partial) total.add(p);
    return total.sum / (static_cast<double>(N) * N);
}

double energy_gap(const PointSet& P) {
    return mean_distance(P.d) - sum_of_distances(P);
}

double worst_case_error(const PointSet& P) {
    const double r = distance_constant(P.d) * energy_gap(P);
    return std::sqrt(clamp_radicand(r, "worst_case_error"));
}

double discrepancy_closed(const PointSet& P) { return worst_case_error(P); }

double weighted_wce(const PointSet& P, const WeightFunction& v, int nodes) {
    if (P.d < 2) throw std::domain_error("weighted_wce: requires d >= 2");
    const int N = P.size();
    std::map<long long, double> memo;  // keyed by inner product rounded to 1e-12
    KahanSum s;
    for (int k = 0; k < N; ++k)
        for (int l = 0; l < N; ++l) {
            const double u = dot(P.points[k], P.points[l]);
            const long long key = std::llround(u * 1e12);
            auto it = memo.find(key);
            if (it == memo.end())
                it = memo.emplace(key, kernel_weighted_ip(P.d, u, v, nodes)).first;
            s.add(it->second);
        }
    const double gram_mean = s.sum / (static_cast<double>(N) * N);
    const double r = gram_mean - kernel_mean(P.d, v, nodes);
    if (r < -1e-9)
        throw std::runtime_error("weighted_wce: positive-definiteness violation (radicand " +
                                 std::to_string(r) + ")");
    return std::sqrt(std::max(0.0, r));
}

double representer_eval(const PointSet& P, const UnitPoint& x) {
    if (x.dim() != P.d)
        throw std::domain_error("representer_eval: dimension mismatch");
    KahanSum s;
    for (const UnitPoint& p : P.points) s.add(chordal_distance(x, p));
    return distance_constant(P.d) * (s.sum / P.size() - mean_distance(P.d));
}

Residual invariance_residual(const PointSet& P,
                             const std::optional<WeightFunction>& v,
                             const McConfig& cfg, int nodes) {
    Residual r;
    if (!v) {
        const McEstimate mc = discrepancy_mc(P, cfg);
        const double cd = distance_constant(P.d);
        r.residual = sum_of_distances(P) + mc.value / cd - mean_distance(P.d);
        r.std_error = mc.std_error / cd;
    } else {
        const McEstimate mc = weighted_discrepancy_mc(P, *v, cfg);
        const int N = P.size();
        KahanSum s;
        std::map<long long, double> memo;
        for (int k = 0; k < N; ++k)
            for (int l = 0; l < N; ++l) {
                const double u = dot(P.points[k], P.points[l]);
                const long long key = std::llround(u * 1e12);
                auto it = memo.find(key);
                if (it == memo.end())
                    it = memo.emplace(key, kernel_weighted_ip(P.d, u, *v, nodes)).first;
                s.add(it->second);
            }
        const double gram_mean = s.sum / (static_cast<double>(N) * N);
        r.residual = gram_mean - mc.value - kernel_mean(P.d, *v, nodes);
        r.std_error = mc.std_error;
    }
    return r;
}

QualityReport analyze(const PointSet& P) {
    QualityReport rep;
    rep.d = P.d;
    rep.N = P.size();
    const auto t0 = std::chrono::steady_clock::now();
    rep.sum_of_distances = sum_of_distances(P);
    rep.energy_gap = mean_distance(P.d) - rep.sum_of_distances;
    const double r =
        clamp_radicand(distance_constant(P.d) * rep.energy_gap, "analyze");
    rep.wce = std::sqrt(r);
    rep.discrepancy = rep.wce;  // same number by the invariance identity
    const auto t1 = std::chrono::steady_clock::now();
    rep.timing["closed_form"] =
        std::chrono::duration<double>(t1 - t0).count();
    return rep;
}

std::string QualityReport::to_json() const {
    nlohmann::ordered_json j;
    j["schema_version"] = 1;
    j["d"] = d;
    j["N"] = N;
    j["sum_of_distances"] = sum_of_distances;
    j["energy_gap"] = energy_gap;
    j["wce"] = wce;
    j["discrepancy"] = discrepancy;
    j["weighted_wce"] = nlohmann::ordered_json::object();
    for (const auto& [label, value] : weighted_wce) j["weighted_wce"][label] = value;
    j["mc_checks"] = nlohmann::ordered_json::array();
    for (const McCheck& c : mc_checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["estimate"] = c.estimate;
        jc["std_error"] = c.std_error;
        jc["closed_value"] = c.closed_value;
        jc["z_score"] = c.z_score;
        j["mc_checks"].push_back(jc);
    }
    j["timing"] = nlohmann::ordered_json::object();
    for (const auto& [stage, sec] : timing) j["timing"][stage] = sec;
    return j.dump(2);
}

std::string QualityReport::csv_header() const {
    std::string h = "d,N,sum_of_distances,energy_gap,wce,discrepancy";
    for (const auto& [label, value] : weighted_wce) {
        (void)value;
        h += ",weighted_wce:" + label;
    }
    return h;
}

std::string QualityReport::to_csv_row() const {
    std::ostringstream os;
    os.precision(17);
    os << d << "," << N << "," << sum_of_distances << "," << energy_gap << ","
       << wce << "," << discrepancy;
    for (const auto& [label, value] : weighted_wce) {
        (void)label;
        os << "," << value;
    }
    return os.str();
}

std::string QualityReport::to_text() const {
    std::ostringstream os;
    os.precision(17);
    os << "d: " << d << "\n"
       << "N: " << N << "\n"
       << "sum_of_distances: " << sum_of_distances << "\n"
       << "energy_gap: " << energy_gap << "\n"
       << "wce: " << wce << "\n"
       << "discrepancy: " << discrepancy << "\n";
    for (const auto& [label, value] : weighted_wce)
        os << "weighted_wce[" << label << "]: " << value << "\n";
    for (const McCheck& c : mc_checks)
        os << "check " << c.name << ": estimate=" << c.estimate
           << " std_error=" << c.std_error << " closed=" << c.closed_value
           << " z=" << c.z_score << "\n";
    return os.str();
}

}  // namespace sphcap
