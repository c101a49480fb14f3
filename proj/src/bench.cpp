#include "plopt/bench.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "plopt/ils.hpp"
#include "plopt/ledger.hpp"
#include "plopt/paramless_ecga.hpp"
#include "plopt/sga.hpp"

namespace plopt {

const std::vector<std::string>& algorithm_names()
{
    static const std::vector<std::string> names = {"sga1", "sga2", "ecga", "ils", "ils+ecga"};
    return names;
}

std::uint64_t run_seed(const ExperimentConfig& config, int index)
{
    if (!config.explicit_seeds.empty()) {
        if (static_cast<std::size_t>(index) >= config.explicit_seeds.size())
            throw std::invalid_argument("not enough explicit seeds for the requested runs");
        return config.explicit_seeds[static_cast<std::size_t>(index)];
    }
    return Rng::mix(config.base_seed, static_cast<std::uint64_t>(index));
}

namespace {

RunOutcome ledger_outcome(const EvaluationLedger& ledger)
{
    RunOutcome outcome;
    outcome.success = ledger.target_hit();
    outcome.evaluations_to_target = ledger.target_hit_at();
    outcome.attributed_method = ledger.attribution();
    outcome.best_objective = ledger.best_objective();
    return outcome;
}

RunOutcome ils_standalone(const ProblemSpec& problem, EvaluationLedger& ledger,
                          std::uint64_t seed, std::ostream* trace)
{
    Rng rng = Rng::derive(seed, "ils");
    IlsState state;
    state.trace = trace;
    (void)problem;
    while (!ledger.done())
        if (ils_run_slice(state, ledger, ledger.remaining(), rng) == 0)
            break;
    return ledger_outcome(ledger);
}

RunOutcome ecga_standalone(const ProblemSpec& problem, EvaluationLedger& ledger,
                           std::uint64_t seed, std::ostream* trace)
{
    Rng rng = Rng::derive(seed, "ecga");
    SchedulerState state;
    state.trace = trace;
    (void)problem;
    while (!ledger.done()) {
        const auto result = paramless_run_slice(state, ledger, ledger.remaining(), rng);
        if (result.stalled)
            break;
    }
    return ledger_outcome(ledger);
}

} // namespace

RunRecord execute_single_run(const ProblemSpec& problem, std::string_view algorithm,
                             std::uint64_t seed, std::uint64_t budget, bool trace)
{
    EvaluationLedger ledger(problem, budget);
    std::ostream* trace_stream = trace ? &std::cerr : nullptr;

    const auto start = std::chrono::steady_clock::now();
    RunOutcome outcome;
    if (algorithm == "ils") {
        outcome = ils_standalone(problem, ledger, seed, trace_stream);
    } else if (algorithm == "ecga") {
        outcome = ecga_standalone(problem, ledger, seed, trace_stream);
    } else if (algorithm == "ils+ecga") {
        outcome = run_combined(problem, ledger, InterleaveConfig{}, seed, trace_stream);
    } else if (algorithm == "sga1" || algorithm == "sga2" || algorithm.starts_with("sga2-")) {
        outcome = sga_run(problem, sga_preset(algorithm, problem), ledger, seed);
    } else {
        throw std::invalid_argument("unknown algorithm: " + std::string(algorithm));
    }
    const auto elapsed = std::chrono::steady_clock::now() - start;

    RunRecord record;
    record.seed = seed;
    record.success = outcome.success;
    record.evaluations_to_target = outcome.evaluations_to_target;
    record.attributed_method = outcome.attributed_method;
    record.best_objective = outcome.best_objective;
    record.wall_seconds = std::chrono::duration<double>(elapsed).count();
    return record;
}

std::vector<RunRecord> run_experiment(const ExperimentConfig& config)
{
    if (config.runs < 1)
        throw std::invalid_argument("runs must be >= 1");
    if (config.budget < 1)
        throw std::invalid_argument("budget must be >= 1");
    const ProblemSpec& problem = ProblemSpec::by_name(config.problem);

    std::vector<RunRecord> records(static_cast<std::size_t>(config.runs));
    const auto work = [&](int index) {
        records[static_cast<std::size_t>(index)] =
            execute_single_run(problem, config.algorithm, run_seed(config, index),
                               config.budget, config.trace);
    };

    if (config.jobs <= 1) {
        for (int i = 0; i < config.runs; ++i)
            work(i);
    } else {
        // runs are independent; results land in their slot by index
        std::vector<std::future<void>> futures;
        for (int i = 0; i < config.runs; ++i)
            futures.push_back(std::async(std::launch::async, work, i));
        for (auto& f : futures)
            f.get();
    }
    return records;
}

SummaryRow summarize(const std::vector<RunRecord>& records,
                     std::string_view problem, std::string_view algorithm)
{
    SummaryRow row;
    row.problem = std::string(problem);
    row.algorithm = std::string(algorithm);

    std::vector<double> successes;
    int ils_hits = 0;
    int ecga_hits = 0;
    for (const auto& record : records) {
        if (!record.success)
            continue;
        successes.push_back(static_cast<double>(*record.evaluations_to_target));
        if (record.attributed_method == "ils")
            ++ils_hits;
        else if (record.attributed_method == "ecga")
            ++ecga_hits;
    }
    row.r_ts = static_cast<int>(successes.size());

    if (!successes.empty()) {
        double sum = 0.0;
        for (double v : successes)
            sum += v;
        const double mean = sum / static_cast<double>(successes.size());
        row.mean_evaluations = mean;
        if (successes.size() > 1) {
            double ss = 0.0;
            for (double v : successes)
                ss += (v - mean) * (v - mean);
            row.stddev_evaluations =
                std::sqrt(ss / static_cast<double>(successes.size() - 1));
        } else {
            row.stddev_evaluations = 0.0;
        }
    }
    if (algorithm == "ils+ecga")
        row.attribution = std::to_string(ils_hits) + "+" + std::to_string(ecga_hits);
    return row;
}

namespace {

std::string number_or_dashes(const std::optional<double>& value)
{
    if (!value)
        return "---";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", *value);
    return buf;
}

} // namespace

std::string render_report(const std::vector<SummaryRow>& rows, std::string_view format)
{
    if (format == "csv") {
        std::ostringstream out;
        out << "problem,algorithm,mean_evals,std_evals,r_ts,attribution\n";
        for (const auto& row : rows)
            out << row.problem << "," << row.algorithm << ","
                << number_or_dashes(row.mean_evaluations) << ","
                << number_or_dashes(row.stddev_evaluations) << "," << row.r_ts << ","
                << row.attribution << "\n";
        return out.str();
    }
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json obj;
            obj["problem"] = row.problem;
            obj["algorithm"] = row.algorithm;
            obj["mean_evals"] =
                row.mean_evaluations ? nlohmann::json(*row.mean_evaluations) : nullptr;
            obj["std_evals"] =
                row.stddev_evaluations ? nlohmann::json(*row.stddev_evaluations) : nullptr;
            obj["r_ts"] = row.r_ts;
            obj["attribution"] = row.attribution;
            arr.push_back(std::move(obj));
        }
        return arr.dump(2) + "\n";
    }
    throw std::invalid_argument("unknown report format: " + std::string(format));
}

void emit_report(const std::vector<SummaryRow>& rows, std::string_view format,
                 const std::string& path)
{
    const std::string body = render_report(rows, format);
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write report to " + path);
    out << body;
    if (!out.good())
        throw std::runtime_error("write failed for " + path);
}

} // namespace plopt
