#include <foldship/sweep.hpp>
#include <foldship/textio.hpp>
#include <foldship/version.hpp>

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <ostream>
#include <thread>

namespace foldship {

std::vector<double> SweepGrid::lambda_values() const {
    if (!(lambda_step > 0))
        throw config_error("lambda step must be positive");
    if (lambda_max < lambda_min)
        throw config_error("lambda range is empty");
    std::vector<double> values;
    for (int i = 0;; ++i) {
        double v = lambda_min + i * lambda_step;
        v = std::round(v * 1e9) / 1e9; // snap accumulated FP error
        if (v > lambda_max + 1e-9) break;
        values.push_back(v);
    }
    return values;
}

std::size_t SweepGrid::size() const {
    if (n_max < n_min || m_max < m_min) return 0;
    return static_cast<std::size_t>(n_max - n_min + 1) *
           static_cast<std::size_t>(m_max - m_min + 1) * lambda_values().size();
}

SweepResult run_sweep(const DesignInputs& in, const SweepGrid& grid, unsigned workers) {
    SweepResult result;
    result.grid = grid;

    const std::vector<double> lambdas = grid.lambda_values();
    struct Point { int n, m; double lambda; };
    std::vector<Point> points;
    points.reserve(grid.size());
    for (int n = grid.n_min; n <= grid.n_max; ++n)
        for (int m = grid.m_min; m <= grid.m_max; ++m)
            for (double l : lambdas)
                points.push_back({n, m, l});

    result.evaluations.resize(points.size());
    if (workers == 0)
        workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, std::max<std::size_t>(points.size(), 1));

    // static index striding: assignment of point -> slot never depends on
    // the worker count, so results are deterministic
    std::vector<std::string> failures(workers);
    auto body = [&](unsigned w) {
        try {
            for (std::size_t i = w; i < points.size(); i += workers)
                result.evaluations[i] =
                    evaluate_design(in, points[i].n, points[i].m, points[i].lambda);
        } catch (const std::exception& e) {
            failures[w] = e.what();
        }
    };
    if (workers <= 1) {
        body(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& f : failures)
        if (!f.empty()) throw error("sweep evaluation failed: " + f);

    for (std::size_t i = 0; i < result.evaluations.size(); ++i)
        if (result.evaluations[i].feasible) result.feasible.push_back(i);

    result.ranking = rank_pairs(result.evaluations, result.feasible);
    if (!result.ranking.empty()) {
        result.has_best = true;
        result.best_n = result.ranking.front().n;
        result.best_m = result.ranking.front().m;
        double lo = 1e9, hi = -1e9;
        for (std::size_t idx : result.feasible) {
            const auto& ev = result.evaluations[idx];
            if (ev.params.n == result.best_n && ev.params.m == result.best_m) {
                lo = std::min(lo, ev.params.lambda);
                hi = std::max(hi, ev.params.lambda);
            }
        }
        result.best_lambda_min = lo;
        result.best_lambda_max = hi;
    }
    return result;
}

std::vector<PairCount> rank_pairs(const std::vector<DesignEvaluation>& evaluations,
                                  const std::vector<std::size_t>& feasible) {
    std::map<std::pair<int, int>, PairCount> pairs;
    for (std::size_t idx : feasible) {
        const auto& ev = evaluations[idx];
        auto& pc = pairs[{ev.params.n, ev.params.m}];
        if (pc.count == 0) {
            pc.n = ev.params.n;
            pc.m = ev.params.m;
        }
        ++pc.count;
        if (pc.count == 1 || ev.extra_payload_g > pc.best_extra_g) {
            pc.best_extra_g = ev.extra_payload_g;
            pc.best_lambda = ev.params.lambda;
        }
    }
    std::vector<PairCount> ranking;
    ranking.reserve(pairs.size());
    for (const auto& [key, pc] : pairs) ranking.push_back(pc);
    std::sort(ranking.begin(), ranking.end(), [](const PairCount& a, const PairCount& b) {
        if (a.count != b.count) return a.count > b.count;
        if (a.best_extra_g != b.best_extra_g) return a.best_extra_g > b.best_extra_g;
        if (a.n != b.n) return a.n < b.n;
        return a.m < b.m;
    });
    return ranking;
}

void write_sweep_csv(std::ostream& os, const SweepResult& result,
                     const std::vector<std::string>& comments) {
    write_comments(os, "# ", comments);
    os << "n,m,lambda,volume_m3,lift_g,envelope_g,sheath_g,exoskeleton_tubes_g,"
          "junctions_g,mechatronics_g,battery_g,valves_g,seal_overlap_g,total_g,"
          "extra_payload_g,deployed_height_mm,fits_height,fits_folded,feasible\n";
    for (const auto& ev : result.evaluations) {
        const MassBreakdown& mb = ev.mass;
        os << ev.params.n << "," << ev.params.m << "," << num(ev.params.lambda, "%.2f")
           << "," << num(ev.volume_deployed_m3, "%.9g") << "," << num(ev.lift_g, "%.9g")
           << "," << num(mb.envelope_g, "%.9g") << "," << num(mb.sheath_g, "%.9g")
           << "," << num(mb.exoskeleton_tubes_g, "%.9g") << "," << num(mb.junctions_g, "%.9g")
           << "," << num(mb.mechatronics_g, "%.9g") << "," << num(mb.battery_g, "%.9g")
           << "," << num(mb.valves_g, "%.9g") << "," << num(mb.seal_overlap_g, "%.9g")
           << "," << num(mb.total_g, "%.9g") << "," << num(ev.extra_payload_g, "%.9g")
           << "," << num(ev.deployed_height_mm, "%.9g") << "," << (ev.fits_height ? 1 : 0)
           << "," << (ev.fits_folded ? 1 : 0) << "," << (ev.feasible ? 1 : 0) << "\n";
    }
}

void write_sweep_json(std::ostream& os, const SweepResult& result,
                      const std::string& config_fingerprint) {
    nlohmann::ordered_json j;
    j["meta"]["tool"] = std::string(kToolName) + " " + kVersion;
    j["meta"]["config"] = config_fingerprint;
    j["grid"]["n"] = {result.grid.n_min, result.grid.n_max};
    j["grid"]["m"] = {result.grid.m_min, result.grid.m_max};
    j["grid"]["lambda"] = {result.grid.lambda_min, result.grid.lambda_max};
    j["grid"]["lambda_step"] = result.grid.lambda_step;
    j["evaluations"] = result.evaluations.size();
    j["feasible_count"] = result.feasible.size();
    if (result.has_best) {
        j["best_pair"]["n"] = result.best_n;
        j["best_pair"]["m"] = result.best_m;
        j["best_pair"]["occurrences"] = result.ranking.front().count;
        j["best_pair"]["lambda_band"] = {result.best_lambda_min, result.best_lambda_max};
    } else {
        j["best_pair"] = nullptr;
        j["note"] = "no feasible design in the grid";
    }
    auto& rank = j["ranking"] = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < result.ranking.size() && i < 10; ++i) {
        const PairCount& pc = result.ranking[i];
        rank.push_back({{"n", pc.n},
                        {"m", pc.m},
                        {"count", pc.count},
                        {"best_lambda", pc.best_lambda},
                        {"best_extra_payload_g", pc.best_extra_g}});
    }
    auto& feas = j["feasible"] = nlohmann::ordered_json::array();
    for (std::size_t idx : result.feasible) {
        const auto& ev = result.evaluations[idx];
        feas.push_back({{"n", ev.params.n},
                        {"m", ev.params.m},
                        {"lambda", ev.params.lambda},
                        {"extra_payload_g", ev.extra_payload_g}});
    }
    os << j.dump(2) << "\n";
}

}
