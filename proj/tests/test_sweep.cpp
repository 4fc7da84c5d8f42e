#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <foldship/sweep.hpp>

#include <json.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

using namespace foldship;
using doctest::Approx;

namespace {

std::string sweep_csv(const SweepResult& result) {
    std::ostringstream os;
    write_sweep_csv(os, result, {});
    return os.str();
}

DesignEvaluation fake_eval(int n, int m, double lambda, double extra) {
    DesignEvaluation ev;
    ev.params.n = n;
    ev.params.m = m;
    ev.params.lambda = lambda;
    ev.extra_payload_g = extra;
    ev.feasible = true;
    return ev;
}

} // namespace

TEST_CASE("default grid covers 2880 snapped lambda points") {
    const SweepGrid grid;
    CHECK(grid.size() == 2880);
    const std::vector<double> lams = grid.lambda_values();
    REQUIRE(lams.size() == 40);
    CHECK(lams.front() == Approx(0.51).epsilon(1e-12));
    CHECK(lams.back() == Approx(0.90).epsilon(1e-12));
    for (std::size_t i = 0; i < lams.size(); ++i) {
        CHECK(lams[i] == Approx(0.51 + 0.01 * static_cast<double>(i)).epsilon(1e-12));
        // Snapped to 9 decimals: an exact multiple of 1e-9.
        CHECK(lams[i] * 1e9 == std::round(lams[i] * 1e9));
    }

    SweepGrid single;
    single.n_min = single.n_max = 7;
    single.m_min = single.m_max = 4;
    single.lambda_min = single.lambda_max = 0.9;
    CHECK(single.size() == 1);
    CHECK(single.lambda_values().size() == 1);
}

TEST_CASE("full sweep reproduces the frozen feasible set") {
    const DesignInputs in;
    const SweepGrid grid;
    const SweepResult res = run_sweep(in, grid, 1);

    REQUIRE(res.evaluations.size() == 2880);
    CHECK(res.feasible.size() == 23);

    // Lexicographic order: the very first grid point is the smallest body.
    CHECK(res.evaluations.front().params.n == 3);
    CHECK(res.evaluations.front().params.m == 2);
    CHECK(res.evaluations.front().params.lambda == Approx(0.51).epsilon(1e-12));
    CHECK_FALSE(res.evaluations.front().feasible);

    // Frozen occurrence table: pair -> feasible lambda count.
    REQUIRE(res.ranking.size() == 7);
    const int want[7][3] = {{7, 4, 7}, {8, 4, 5}, {6, 4, 4}, {9, 4, 3},
                            {10, 4, 2}, {9, 3, 1}, {10, 3, 1}};
    for (int i = 0; i < 7; ++i) {
        CAPTURE(i);
        CHECK(res.ranking[i].n == want[i][0]);
        CHECK(res.ranking[i].m == want[i][1]);
        CHECK(res.ranking[i].count == want[i][2]);
    }

    CHECK(res.has_best);
    CHECK(res.best_n == 7);
    CHECK(res.best_m == 4);
    CHECK(res.best_lambda_min == Approx(0.84).epsilon(1e-12));
    CHECK(res.best_lambda_max == Approx(0.90).epsilon(1e-12));
    CHECK(res.ranking.front().best_lambda == Approx(0.90).epsilon(1e-12));
    CHECK(res.ranking.front().best_extra_g == Approx(67.99972536024507).epsilon(1e-6));

    std::vector<double> best_pair_lambdas;
    for (std::size_t idx : res.feasible) {
        const auto& ev = res.evaluations[idx];
        CHECK(ev.feasible);
        CHECK(ev.extra_payload_g > 0.0);
        // Every floating configuration in this grid uses fewer than 5 segments.
        CHECK(ev.params.m < 5);
        if (ev.params.n == 7 && ev.params.m == 4)
            best_pair_lambdas.push_back(ev.params.lambda);
    }
    // The winning pair floats exactly on the high-twist band 0.84 .. 0.90.
    REQUIRE(best_pair_lambdas.size() == 7);
    for (int i = 0; i < 7; ++i)
        CHECK(best_pair_lambdas[i] == Approx(0.84 + 0.01 * i).epsilon(1e-12));
}

TEST_CASE("sweep output does not depend on the worker count") {
    const DesignInputs in;
    const SweepGrid grid;
    const std::string one = sweep_csv(run_sweep(in, grid, 1));
    const std::string four = sweep_csv(run_sweep(in, grid, 4));
    const std::string self = sweep_csv(run_sweep(in, grid, 0));
    CHECK(one == four);
    CHECK(one == self);
    CHECK(one.find("n,m,lambda,") == 0);
}

TEST_CASE("sweep CSV carries 19 columns for every grid point") {
    const DesignInputs in;
    SweepGrid grid;
    grid.n_min = grid.n_max = 7;
    grid.m_min = grid.m_max = 4;
    grid.lambda_min = 0.83;
    grid.lambda_max = 0.90;
    const SweepResult res = run_sweep(in, grid, 1);
    REQUIRE(res.evaluations.size() == 8);

    std::istringstream is(sweep_csv(res));
    std::string line;
    int rows = 0;
    bool header = true;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto commas = static_cast<int>(std::count(line.begin(), line.end(), ','));
        CHECK(commas == 18);
        if (header) {
            CHECK(line ==
                  "n,m,lambda,volume_m3,lift_g,envelope_g,sheath_g,exoskeleton_tubes_g,"
                  "junctions_g,mechatronics_g,battery_g,valves_g,seal_overlap_g,total_g,"
                  "extra_payload_g,deployed_height_mm,fits_height,fits_folded,feasible");
            header = false;
            continue;
        }
        ++rows;
        CHECK(line.rfind("7,4,0.", 0) == 0);
    }
    CHECK(rows == 8);
}

TEST_CASE("pair ranking breaks ties by margin, then smaller n and m") {
    std::vector<DesignEvaluation> evals;
    // (4,2): two hits, best margin 9.  (6,2): two hits, same margin.
    // (3,2): two hits, weaker margin.  (5,3): single hit, huge margin.
    // (4,3): two hits, margin 9, same n as (4,2) but more segments.
    evals.push_back(fake_eval(4, 2, 0.6, 2.0));
    evals.push_back(fake_eval(4, 2, 0.7, 9.0));
    evals.push_back(fake_eval(6, 2, 0.6, 9.0));
    evals.push_back(fake_eval(6, 2, 0.7, 4.0));
    evals.push_back(fake_eval(3, 2, 0.6, 1.0));
    evals.push_back(fake_eval(3, 2, 0.7, 7.0));
    evals.push_back(fake_eval(5, 3, 0.8, 100.0));
    evals.push_back(fake_eval(4, 3, 0.6, 9.0));
    evals.push_back(fake_eval(4, 3, 0.7, 3.0));
    std::vector<std::size_t> feasible;
    for (std::size_t i = 0; i < evals.size(); ++i) feasible.push_back(i);

    const std::vector<PairCount> ranking = rank_pairs(evals, feasible);
    REQUIRE(ranking.size() == 5);
    // Count 2 beats count 1 regardless of margin.
    CHECK(ranking[0].n == 4);
    CHECK(ranking[0].m == 2);
    CHECK(ranking[1].n == 4);
    CHECK(ranking[1].m == 3);
    CHECK(ranking[2].n == 6);
    CHECK(ranking[2].m == 2);
    CHECK(ranking[3].n == 3);
    CHECK(ranking[3].m == 2);
    CHECK(ranking[4].n == 5);
    CHECK(ranking[4].m == 3);
    CHECK(ranking[0].best_lambda == Approx(0.7).epsilon(1e-12));
    CHECK(ranking[0].best_extra_g == Approx(9.0).epsilon(1e-12));
    CHECK(ranking[4].count == 1);
}

TEST_CASE("sweep JSON summarises the run for machines") {
    const DesignInputs in;
    const SweepGrid grid;
    const SweepResult res = run_sweep(in, grid, 2);
    std::ostringstream os;
    write_sweep_json(os, res, "deadbeef00000000");
    const nlohmann::json j = nlohmann::json::parse(os.str());

    CHECK(j["meta"]["tool"] == "foldship 0.1.0");
    CHECK(j["meta"]["config"] == "deadbeef00000000");
    CHECK(j["evaluations"] == 2880);
    CHECK(j["feasible_count"] == 23);
    CHECK(j["best_pair"]["n"] == 7);
    CHECK(j["best_pair"]["m"] == 4);
    CHECK(j["best_pair"]["occurrences"] == 7);
    CHECK(j["best_pair"]["lambda_band"][0].get<double>() == Approx(0.84).epsilon(1e-12));
    CHECK(j["best_pair"]["lambda_band"][1].get<double>() == Approx(0.90).epsilon(1e-12));
    REQUIRE(j["ranking"].is_array());
    CHECK(j["ranking"][0]["count"] == 7);
    CHECK(j["feasible"].size() == 23);
}

TEST_CASE("an infeasible grid reports no best pair") {
    const DesignInputs in;
    SweepGrid grid;
    grid.n_min = grid.n_max = 3;
    grid.m_min = grid.m_max = 2;
    grid.lambda_min = grid.lambda_max = 0.51;
    const SweepResult res = run_sweep(in, grid, 1);
    CHECK(res.evaluations.size() == 1);
    CHECK(res.feasible.empty());
    CHECK_FALSE(res.has_best);
    CHECK(res.ranking.empty());

    std::ostringstream os;
    write_sweep_json(os, res, "deadbeef00000000");
    const nlohmann::json j = nlohmann::json::parse(os.str());
    CHECK(j["best_pair"].is_null());
    CHECK(j["note"] == "no feasible design in the grid");
}
