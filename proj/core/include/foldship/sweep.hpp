#pragma once

#include <foldship/mass_model.hpp>

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

namespace foldship {

// Exhaustive (n, m, lambda) grid. The defaults cover 8 * 9 * 40 = 2880
// configurations; lambda values are snapped to 9 decimals so the grid hits
// round hundredths exactly.
struct SweepGrid {
    int n_min = 3, n_max = 10;
    int m_min = 2, m_max = 10;
    double lambda_min = 0.51, lambda_max = 0.90, lambda_step = 0.01;

    std::vector<double> lambda_values() const;
    std::size_t size() const;
};

struct PairCount {
    int n = 0, m = 0;
    int count = 0;          // feasible occurrences across lambda
    double best_lambda = 0; // lambda with the largest margin
    double best_extra_g = 0;
};

struct SweepResult {
    SweepGrid grid;
    std::vector<DesignEvaluation> evaluations; // lexicographic in (n, m, lambda)
    std::vector<std::size_t> feasible;         // indices into evaluations
    std::vector<PairCount> ranking;            // rank_pairs order
    bool has_best = false;
    int best_n = 0, best_m = 0;
    double best_lambda_min = 0, best_lambda_max = 0;
};

// Evaluates every grid point. workers = 0 picks the hardware concurrency;
// the output is independent of the worker count.
SweepResult run_sweep(const DesignInputs& in, const SweepGrid& grid,
                      unsigned workers = 0);

// Descending by occurrence count; ties broken by larger payload margin at
// the pair's best lambda, then by smaller n, then smaller m.
std::vector<PairCount> rank_pairs(const std::vector<DesignEvaluation>& evaluations,
                                  const std::vector<std::size_t>& feasible);

void write_sweep_csv(std::ostream& os, const SweepResult& result,
                     const std::vector<std::string>& comments);
void write_sweep_json(std::ostream& os, const SweepResult& result,
                      const std::string& config_fingerprint);

}
