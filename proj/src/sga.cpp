#include "plopt/sga.hpp"

#include <stdexcept>

#include "plopt/paramless_ecga.hpp" // tournament_winners

namespace plopt {

SgaConfig sga_preset(std::string_view name, const ProblemSpec& problem)
{
    const double inv_l = 1.0 / static_cast<double>(problem.length);
    if (name == "sga1")
        return {"sga1", 100, 0.6, 0.001, 2};
    if (name == "sga2-onemax")
        return {"sga2-onemax", 30, 0.9, 0.005, 2};
    if (name == "sga2-himmelblau-uni")
        return {"sga2-himmelblau-uni", 100, 0.9, 0.01, 2};
    if (name == "sga2-himmelblau-4peak")
        return {"sga2-himmelblau-4peak", 200, 0.5, inv_l, 4};
    if (name == "sga2-rastrigin")
        return {"sga2-rastrigin", 10'000, 0.9, inv_l, 8};
    if (name == "sga2-trap")
        return {"sga2-trap", 60'000, 0.5, 0.0, 4};
    if (name == "sga2") {
        switch (problem.kind) {
        case ProblemKind::onemax: return sga_preset("sga2-onemax", problem);
        case ProblemKind::himmelblau_unimodal: return sga_preset("sga2-himmelblau-uni", problem);
        case ProblemKind::himmelblau_fourpeak: return sga_preset("sga2-himmelblau-4peak", problem);
        case ProblemKind::rastrigin10: return sga_preset("sga2-rastrigin", problem);
        case ProblemKind::trap4x10: return sga_preset("sga2-trap", problem);
        }
    }
    throw std::invalid_argument("unknown SGA preset: " + std::string(name));
}

std::pair<Genome, Genome> uniform_crossover(const Genome& a, const Genome& b, Rng& rng)
{
    if (a.size() != b.size())
        throw std::invalid_argument("uniform_crossover: length mismatch");
    Genome c1 = a;
    Genome c2 = b;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (rng.bernoulli(0.5))
            std::swap(c1[i], c2[i]);
    return {std::move(c1), std::move(c2)};
}

Genome mutate(const Genome& g, double pm, Rng& rng)
{
    Genome out = g;
    if (pm > 0.0)
        for (auto& bit : out)
            if (rng.bernoulli(pm))
                bit ^= 1u;
    return out;
}

RunOutcome sga_run(const ProblemSpec& problem, const SgaConfig& config,
                   EvaluationLedger& ledger, std::uint64_t run_seed)
{
    Rng rng = Rng::derive(run_seed, "sga");
    const std::uint64_t n = config.population_size;

    std::vector<Genome> genomes;
    std::vector<Fitness> fitnesses;
    genomes.reserve(n);
    fitnesses.reserve(n);
    for (std::uint64_t i = 0; i < n && !ledger.done(); ++i) {
        Genome g = random_genome(problem.length, rng);
        const auto f = ledger.evaluate(g, "sga");
        if (!f)
            break;
        genomes.push_back(std::move(g));
        fitnesses.push_back(*f);
    }

    while (!ledger.done()) {
        const auto winners = tournament_winners(fitnesses, config.selection_pressure, rng);

        std::vector<Genome> offspring(n);
        for (std::uint64_t i = 0; i < n; ++i)
            offspring[i] = genomes[winners[i]];
        for (std::uint64_t i = 0; i + 1 < n; i += 2) {
            if (rng.bernoulli(config.crossover_probability)) {
                auto [c1, c2] = uniform_crossover(offspring[i], offspring[i + 1], rng);
                offspring[i] = std::move(c1);
                offspring[i + 1] = std::move(c2);
            }
        }

        std::vector<Fitness> next_fitnesses(n);
        bool completed = true;
        for (std::uint64_t i = 0; i < n; ++i) {
            offspring[i] = mutate(offspring[i], config.mutation_probability, rng);
            const auto f = ledger.evaluate(offspring[i], "sga");
            if (!f) {
                completed = false;
                break;
            }
            next_fitnesses[i] = *f;
            if (ledger.target_hit()) {
                completed = false;
                break;
            }
        }
        if (!completed)
            break;

        genomes = std::move(offspring);
        fitnesses = std::move(next_fitnesses);

        if (config.mutation_probability == 0.0) {
            // a converged population without mutation can never improve
            bool converged = true;
            for (std::size_t i = 1; i < genomes.size() && converged; ++i)
                converged = genomes[i] == genomes.front();
            if (converged)
                break;
        }
    }

    RunOutcome outcome;
    outcome.success = ledger.target_hit();
    outcome.evaluations_to_target = ledger.target_hit_at();
    outcome.attributed_method = ledger.attribution();
    outcome.best_objective = ledger.best_objective();
    return outcome;
}

} // namespace plopt
