// Acceptance suite: distributional targets over 20 seeded runs with a
// 2,000,000-evaluation budget, plus the exactness and property checks.
// Prints one line per criterion and exits nonzero on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "plopt/bench.hpp"
#include "plopt/ecga_model.hpp"
#include "plopt/ils.hpp"
#include "plopt/interleave.hpp"
#include "plopt/paramless_ecga.hpp"
#include "plopt/sga.hpp"

using namespace plopt;

namespace {

int failures = 0;

void report(int id, bool ok, const std::string& detail)
{
    std::printf("%s criterion %d: %s\n", ok ? "PASS" : "FAIL", id, detail.c_str());
    if (!ok)
        ++failures;
}

std::vector<RunRecord> campaign(const std::string& problem, const std::string& algorithm,
                                std::uint64_t budget = 2'000'000)
{
    ExperimentConfig config;
    config.problem = problem;
    config.algorithm = algorithm;
    config.runs = 20;
    config.budget = budget;
    config.base_seed = 1;
    return run_experiment(config);
}

double mean_evaluations(const std::vector<RunRecord>& records)
{
    double sum = 0.0;
    int n = 0;
    for (const auto& r : records)
        if (r.success) {
            sum += static_cast<double>(*r.evaluations_to_target);
            ++n;
        }
    return n ? sum / n : -1.0;
}

int successes(const std::vector<RunRecord>& records)
{
    return static_cast<int>(std::count_if(records.begin(), records.end(),
                                          [](const RunRecord& r) { return r.success; }));
}

char buffer[256];

std::vector<Genome> half_and_half(std::size_t n, std::size_t l)
{
    std::vector<Genome> pop;
    for (std::size_t i = 0; i < n / 2; ++i)
        pop.push_back(Genome(l, 0));
    for (std::size_t i = 0; i < n / 2; ++i)
        pop.push_back(Genome(l, 1));
    return pop;
}

std::vector<GenePartition> all_partitions(std::uint32_t l)
{
    std::vector<GenePartition> out;
    std::vector<std::uint32_t> assignment(l, 0);
    const auto emit = [&] {
        const std::uint32_t blocks =
            *std::max_element(assignment.begin(), assignment.end()) + 1;
        GenePartition partition;
        partition.groups.resize(blocks);
        for (std::uint32_t i = 0; i < l; ++i)
            partition.groups[assignment[i]].push_back(i);
        out.push_back(std::move(partition));
    };
    const auto recurse = [&](auto&& self, std::uint32_t pos, std::uint32_t max_used) -> void {
        if (pos == l) {
            emit();
            return;
        }
        for (std::uint32_t block = 0; block <= max_used + 1; ++block) {
            assignment[pos] = block;
            self(self, pos + 1, std::max(max_used, block));
        }
    };
    if (l == 1)
        emit();
    else
        recurse(recurse, 1, 0);
    return out;
}

void criterion_1()
{
    const auto start = std::chrono::steady_clock::now();
    const auto records = campaign("onemax100", "ils");
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double mean = mean_evaluations(records);
    const bool ok = successes(records) == 20 && mean >= 320.0 && mean <= 580.0 &&
                    seconds < 1.0;
    std::snprintf(buffer, sizeof(buffer),
                  "ils/onemax100 %d/20, mean %.1f in [320,580], %.2fs < 1s",
                  successes(records), mean, seconds);
    report(1, ok, buffer);
}

void criterion_2()
{
    const auto records = campaign("trap4x10", "ecga");
    const double mean = mean_evaluations(records);
    const bool ok = successes(records) == 20 && mean <= 46'000.0;
    std::snprintf(buffer, sizeof(buffer), "ecga/trap4x10 %d/20, mean %.0f <= 46000",
                  successes(records), mean);
    report(2, ok, buffer);
}

void criterion_3()
{
    const auto records = campaign("trap4x10", "ils+ecga");
    const auto row = summarize(records, "trap4x10", "ils+ecga");
    const double mean = mean_evaluations(records);
    const bool ok = successes(records) == 20 && row.attribution == "0+20" &&
                    mean <= 96'000.0;
    std::snprintf(buffer, sizeof(buffer),
                  "ils+ecga/trap4x10 %d/20, attribution %s, mean %.0f <= 96000",
                  successes(records), row.attribution.c_str(), mean);
    report(3, ok, buffer);
}

void criterion_4()
{
    const auto trap = campaign("trap4x10", "ils");
    const auto rastrigin = campaign("rastrigin10", "ils");
    const bool ok = successes(trap) == 0 && successes(rastrigin) == 0;
    std::snprintf(buffer, sizeof(buffer), "ils failures: trap4x10 %d/20, rastrigin10 %d/20",
                  successes(trap), successes(rastrigin));
    report(4, ok, buffer);
}

void criterion_5()
{
    const auto sga1 = campaign("trap4x10", "sga1");
    const auto sga2 = campaign("trap4x10", "sga2");
    const bool ok = successes(sga1) == 0 && successes(sga2) == 20;
    std::snprintf(buffer, sizeof(buffer), "sga1/trap4x10 %d/20 (want 0), sga2 %d/20 (want 20)",
                  successes(sga1), successes(sga2));
    report(5, ok, buffer);
}

void criterion_6()
{
    const auto ils = campaign("onemax100", "ils");
    const auto combined = campaign("onemax100", "ils+ecga");
    bool ok = true;
    for (std::size_t i = 0; i < 20; ++i)
        ok = ok && ils[i].success && combined[i].success &&
             ils[i].evaluations_to_target == combined[i].evaluations_to_target;
    report(6, ok, "per-seed equivalence of ils+ecga and standalone ils on onemax100");
}

void criterion_7()
{
    const auto ecga = campaign("rastrigin10", "ecga");
    const double mean = mean_evaluations(ecga);
    const auto combined = campaign("rastrigin10", "ils+ecga");
    const auto row = summarize(combined, "rastrigin10", "ils+ecga");
    const bool ok = successes(ecga) == 20 && mean < 1'000'000.0 &&
                    successes(combined) == 20 && row.attribution == "0+20";
    std::snprintf(buffer, sizeof(buffer),
                  "rastrigin10: ecga %d/20 mean %.0f < 1e6, ils+ecga %d/20 attribution %s",
                  successes(ecga), mean, successes(combined), row.attribution.c_str());
    report(7, ok, buffer);
}

void criterion_8()
{
    bool ok = true;
    const auto near = [](double a, double b) { return std::abs(a - b) <= 1e-9; };

    // model complexity (Eq. 1)
    ok = ok && near(model_complexity({{{0}, {1}, {2}, {3}}}, 15), 16.0);
    ok = ok && near(model_complexity({{{0, 1, 2, 3}}}, 15), 60.0);
    ok = ok && near(model_complexity({{{0}}}, 3), 2.0);

    // compressed population complexity (Eq. 2) and entropy
    ok = ok && near(compressed_complexity({{{0}}}, half_and_half(4, 1)), 4.0);
    ok = ok && near(compressed_complexity({{{0, 1}}}, half_and_half(8, 2)), 8.0);
    ok = ok && near(compressed_complexity({{{0}, {1}, {2}}},
                                          std::vector<Genome>(6, Genome(3, 1))), 0.0);
    MarginalTable uniform;
    uniform.genes = {0, 1};
    uniform.counts = {4, 4, 4, 4};
    uniform.total = 16;
    ok = ok && near(entropy_of_group(uniform), 2.0);

    // perturbation update (Eq. 3)
    PerturbState p{5.0, 100};
    update_alpha(p, true);
    ok = ok && near(p.alpha, 7.0);
    p.alpha = 9.0;
    update_alpha(p, false);
    ok = ok && near(p.alpha, 5.0);
    PerturbState q{3.7, 40};
    update_alpha(q, false);
    ok = ok && near(q.alpha, 3.0);

    // greedy vs exhaustive-partition oracle for l <= 5
    Rng rng(1234);
    for (std::uint32_t l = 2; l <= 5 && ok; ++l) {
        const auto partitions = all_partitions(l);
        for (int trial = 0; trial < 3; ++trial) {
            std::vector<Genome> pop;
            for (int i = 0; i < 32; ++i)
                pop.push_back(random_genome(l, rng));
            double oracle = 1e300;
            for (const auto& partition : partitions)
                oracle = std::min(oracle, score_partition(partition, pop).combined());
            const auto model = greedy_mpm_search(pop);
            ok = ok && score_partition(model.partition, pop).combined() >= oracle - 1e-9;
        }
    }

    // single-group recovery on the half 0000 / half 1111 population
    const auto linked = greedy_mpm_search(half_and_half(64, 4));
    ok = ok && linked.partition.groups.size() == 1;

    report(8, ok, "formula exactness: Eq. 1, Eq. 2, entropy, Eq. 3, greedy vs oracle");
}

void criterion_9()
{
    bool ok = true;
    std::string failed;

    // NAHC local optimality by exhaustive flip verification
    {
        const auto& trap = ProblemSpec::by_name("trap4x10");
        for (std::uint64_t seed = 0; seed < 10 && ok; ++seed) {
            Rng rng = Rng::derive(seed, "nahc-check");
            Genome start = random_genome(trap.length, rng);
            EvaluationLedger ledger(trap, 1'000'000);
            const auto result = nahc(start, evaluate(trap, start), ledger, rng);
            for (std::size_t i = 0; i < result.genome.size(); ++i) {
                Genome flipped = result.genome;
                flipped[i] ^= 1u;
                if (evaluate(trap, flipped).key > result.fitness.key)
                    ok = false;
            }
        }
        if (!ok)
            failed = "nahc local optimality";
    }

    // sampling preserves marginals within +/- 0.02 over 10,000 draws
    if (ok) {
        std::vector<Genome> pop = {{1}, {1}, {1}, {0}};
        MpmModel model;
        model.population_size = 4;
        model.partition.groups = {{0}};
        model.tables = {build_table({0}, pop)};
        Rng rng(55);
        int ones = 0;
        for (int i = 0; i < 10'000; ++i)
            ones += sample_individual(model, rng)[0];
        ok = std::abs(ones / 10'000.0 - 0.75) <= 0.02;
        if (!ok)
            failed = "sampling marginal preservation";
    }

    // scheduler size doubling and the m = 4 frequency trace
    if (ok) {
        int first = 0, second = 0;
        for (std::uint64_t t = 1; t <= 16; ++t) {
            const int position = scheduler_position(t, 4);
            first += position == 1;
            second += position == 2;
        }
        ok = first == 12 && second == 3;

        const auto& trap = ProblemSpec::by_name("trap4x10");
        EvaluationLedger ledger(trap, 50'000);
        Rng rng = Rng::derive(3, "ecga");
        SchedulerState state;
        (void)paramless_run_slice(state, ledger, 20'000, rng);
        std::uint64_t expected = 4;
        for (const auto& pop : state.populations) {
            if (pop.size != expected)
                ok = false;
            expected *= 2;
        }
        if (!ok)
            failed = "scheduler doubling / m=4 trace";
    }

    // interleaver fairness and strict alternation
    if (ok) {
        const auto& trap = ProblemSpec::by_name("trap4x10");
        EvaluationLedger ledger(trap, 20'000);
        const auto outcome = run_combined(trap, ledger, InterleaveConfig{}, 7);
        const double total =
            static_cast<double>(outcome.ils_evaluations + outcome.ecga_evaluations);
        const double share = static_cast<double>(outcome.ils_evaluations) / total;
        ok = outcome.ils_evaluations + outcome.ecga_evaluations == ledger.used() &&
             share > 0.3 && share < 0.7;
        if (!ok)
            failed = "interleaver fairness";
    }

    // ledger budget is never exceeded
    if (ok) {
        for (const auto& algorithm : algorithm_names()) {
            const auto& problem = ProblemSpec::by_name("trap4x10");
            const std::uint64_t budget = 5'000;
            EvaluationLedger probe(problem, budget);
            if (algorithm == "ils+ecga") {
                (void)run_combined(problem, probe, InterleaveConfig{}, 1);
            } else if (algorithm == "sga1" || algorithm == "sga2") {
                (void)sga_run(problem, sga_preset(algorithm, problem), probe, 1);
            } else {
                const auto record = execute_single_run(problem, algorithm, 1, budget);
                continue;
            }
            if (probe.used() > budget)
                ok = false;
        }
        if (!ok)
            failed = "ledger budget bound";
    }

    // full determinism of every algorithm given a seed
    if (ok) {
        for (const auto& algorithm : algorithm_names()) {
            const std::string problem = algorithm == "sga2" ? "onemax100" : "trap4x10";
            const auto& spec = ProblemSpec::by_name(problem);
            const auto a = execute_single_run(spec, algorithm, 42, 30'000);
            const auto b = execute_single_run(spec, algorithm, 42, 30'000);
            if (a.success != b.success ||
                a.evaluations_to_target != b.evaluations_to_target ||
                a.best_objective != b.best_objective)
                ok = false;
        }
        if (!ok)
            failed = "determinism";
    }

    report(9, ok, ok ? "property suite" : "property suite (" + failed + ")");
}

} // namespace

int main()
{
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    std::printf("%s\n", failures == 0 ? "acceptance: all criteria passed"
                                      : "acceptance: FAILURES present");
    return failures == 0 ? 0 : 1;
}
