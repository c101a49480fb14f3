#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plopt/interleave.hpp"
#include "plopt/problems.hpp"

namespace plopt {

struct ExperimentConfig {
    std::string problem;    // onemax100, himmelblau-uni, ...
    std::string algorithm;  // sga1 | sga2 | ecga | ils | ils+ecga
    int runs = 20;
    std::uint64_t budget = 2'000'000;
    std::uint64_t base_seed = 1;
    std::vector<std::uint64_t> explicit_seeds; // overrides base_seed when set
    unsigned jobs = 1;
    bool trace = false;
};

struct RunRecord {
    std::uint64_t seed = 0;
    bool success = false;
    std::optional<std::uint64_t> evaluations_to_target;
    std::string attributed_method;
    double best_objective = 0.0;
    double wall_seconds = 0.0;
};

struct SummaryRow {
    std::string problem;
    std::string algorithm;
    std::optional<double> mean_evaluations; // successful runs only
    std::optional<double> stddev_evaluations; // sample (n-1)
    int r_ts = 0;
    std::string attribution; // "a+b" for ils+ecga, empty otherwise
};

// The seed used by run `index` of a campaign; shared across algorithms so
// every algorithm sees the same initial conditions per run.
std::uint64_t run_seed(const ExperimentConfig& config, int index);

// One run of one algorithm on one problem with its own ledger.
RunRecord execute_single_run(const ProblemSpec& problem, std::string_view algorithm,
                             std::uint64_t seed, std::uint64_t budget, bool trace = false);

// All configured runs, deterministic per (config, seeds); results ordered
// by run index regardless of the number of jobs.
std::vector<RunRecord> run_experiment(const ExperimentConfig& config);

SummaryRow summarize(const std::vector<RunRecord>& records,
                     std::string_view problem, std::string_view algorithm);

// CSV header: problem,algorithm,mean_evals,std_evals,r_ts,attribution.
// JSON: array of objects with the same field names, "---" rendered null.
void emit_report(const std::vector<SummaryRow>& rows, std::string_view format,
                 const std::string& path);
std::string render_report(const std::vector<SummaryRow>& rows, std::string_view format);

const std::vector<std::string>& algorithm_names();

} // namespace plopt
