#include "plopt/paramless_ecga.hpp"

#include <algorithm>
#include <ostream>

#include "plopt/ecga_model.hpp"

namespace plopt {

bool PopulationState::converged() const
{
    for (std::size_t i = 1; i < genomes.size(); ++i)
        if (genomes[i] != genomes.front())
            return false;
    return true;
}

void PopulationState::recompute_average()
{
    double sum = 0.0;
    for (const auto& f : fitnesses)
        sum += f.key;
    average_key = fitnesses.empty() ? 0.0 : sum / static_cast<double>(fitnesses.size());
}

std::vector<std::uint32_t> tournament_winners(const std::vector<Fitness>& fitnesses,
                                              int s, Rng& rng)
{
    const std::size_t n = fitnesses.size();
    std::vector<std::uint32_t> winners(n);
    for (std::size_t slot = 0; slot < n; ++slot) {
        auto best = static_cast<std::uint32_t>(rng.below(n));
        for (int k = 1; k < s; ++k) {
            const auto contender = static_cast<std::uint32_t>(rng.below(n));
            if (fitnesses[contender].key > fitnesses[best].key)
                best = contender;
        }
        winners[slot] = best;
    }
    return winners;
}

bool ecga_generation(PopulationState& population, EvaluationLedger& ledger,
                     const EcgaConfig& config, Rng& rng)
{
    const std::uint64_t n = population.size;
    const auto winners = tournament_winners(population.fitnesses,
                                            config.selection_pressure, rng);

    std::vector<Genome> winner_genomes(n);
    for (std::uint64_t i = 0; i < n; ++i)
        winner_genomes[i] = population.genomes[winners[i]];

    const MpmModel model = greedy_mpm_search(winner_genomes);

    std::vector<Genome> next_genomes(n);
    std::vector<Fitness> next_fitnesses(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        if (rng.bernoulli(config.sampling_fraction)) {
            Genome sampled = sample_individual(model, rng);
            const auto f = ledger.evaluate(sampled, "ecga");
            if (!f)
                return false; // budget exhausted; discard the partial generation
            next_genomes[i] = std::move(sampled);
            next_fitnesses[i] = *f;
            if (ledger.target_hit())
                return false; // run is over; the generation is abandoned
        } else {
            // copied winner keeps its stored fitness, no re-evaluation
            next_genomes[i] = std::move(winner_genomes[i]);
            next_fitnesses[i] = population.fitnesses[winners[i]];
        }
    }

    population.genomes = std::move(next_genomes);
    population.fitnesses = std::move(next_fitnesses);
    ++population.generation;
    population.recompute_average();
    return true;
}

int scheduler_position(std::uint64_t step, int m)
{
    int position = 1;
    while (step % static_cast<std::uint64_t>(m) == 0) {
        ++position;
        step /= static_cast<std::uint64_t>(m);
    }
    return position;
}

void eliminate_populations(SchedulerState& state)
{
    auto& pops = state.populations;
    for (std::size_t i = 0; i < pops.size(); ++i) {
        if (!pops[i].alive)
            continue;
        if (pops[i].converged()) {
            pops[i].alive = false;
            continue;
        }
        for (std::size_t j = i + 1; j < pops.size(); ++j) {
            if (pops[j].alive && pops[i].average_key < pops[j].average_key) {
                pops[i].alive = false;
                break;
            }
        }
    }
}

namespace {

// Randomly initialize and fully evaluate a population of the next
// doubling size. Returns false when the ledger stops it short; the
// partial population is then discarded.
bool spawn_population(SchedulerState& state, EvaluationLedger& ledger, Rng& rng)
{
    const std::size_t length = ledger.problem().length;
    PopulationState pop;
    pop.size = state.next_size;
    pop.genomes.reserve(pop.size);
    pop.fitnesses.reserve(pop.size);
    for (std::uint64_t i = 0; i < pop.size; ++i) {
        Genome g = random_genome(length, rng);
        const auto f = ledger.evaluate(g, "ecga");
        if (!f)
            return false;
        pop.genomes.push_back(std::move(g));
        pop.fitnesses.push_back(*f);
        if (ledger.target_hit())
            return false;
    }
    pop.recompute_average();
    state.populations.push_back(std::move(pop));
    state.next_size *= 2;
    return true;
}

void trace_generation(const SchedulerState& state, std::size_t index,
                      const EvaluationLedger& ledger)
{
    if (!state.trace)
        return;
    const auto& pop = state.populations[index];
    *state.trace << "ecga pop=" << index + 1 << " size=" << pop.size
                 << " gen=" << pop.generation << " evals=" << ledger.used()
                 << " avg=" << pop.average_key << " best=" << ledger.best_objective()
                 << "\n";
}

} // namespace

SliceResult paramless_run_slice(SchedulerState& state, EvaluationLedger& ledger,
                                std::uint64_t slice_budget, Rng& rng)
{
    const std::uint64_t start = ledger.used();
    while (!ledger.done()) {
        ++state.step;
        const int position = scheduler_position(state.step, state.config.generations_ratio);

        std::vector<std::size_t> alive;
        for (std::size_t i = 0; i < state.populations.size(); ++i)
            if (state.populations[i].alive)
                alive.push_back(i);

        if (static_cast<std::size_t>(position) > alive.size()) {
            if (ledger.remaining() < state.next_size) {
                if (alive.empty())
                    return {ledger.used() - start, true};
                continue; // existing populations keep running
            }
            spawn_population(state, ledger, rng);
        } else {
            const std::size_t index = alive[static_cast<std::size_t>(position) - 1];
            if (ecga_generation(state.populations[index], ledger, state.config, rng))
                trace_generation(state, index, ledger);
            eliminate_populations(state);
        }

        if (ledger.used() - start >= slice_budget)
            break;
    }
    return {ledger.used() - start, false};
}

} // namespace plopt
