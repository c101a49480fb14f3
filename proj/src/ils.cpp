#include "plopt/ils.hpp"

#include <algorithm>
#include <ostream>

namespace plopt {

void update_alpha(PerturbState& state, bool unchanged)
{
    const double l = static_cast<double>(state.length);
    if (unchanged)
        state.alpha = std::min(state.alpha + 0.02 * l, l);
    else
        state.alpha = PerturbState::base_alpha(state.length);
}

Genome perturb(const Genome& g, const PerturbState& state, Rng& rng)
{
    const double p = state.alpha / static_cast<double>(state.length);
    Genome out = g;
    for (auto& bit : out)
        if (rng.bernoulli(p))
            bit ^= 1u;
    return out;
}

NahcResult nahc(Genome start, Fitness start_fitness, EvaluationLedger& ledger, Rng& rng)
{
    const auto length = static_cast<std::uint32_t>(start.size());
    Genome g = std::move(start);
    Fitness f = start_fitness;

    for (;;) {
        const auto order = rng.permutation(length);
        bool improved = false;
        for (auto idx : order) {
            g[idx] ^= 1u;
            const auto candidate = ledger.evaluate(g, "ils");
            if (!candidate) {
                g[idx] ^= 1u;
                return {std::move(g), f, false}; // budget exhausted mid-search
            }
            if (candidate->key > f.key) {
                f = *candidate;
                improved = true;
            } else {
                g[idx] ^= 1u;
            }
            if (ledger.target_hit())
                return {std::move(g), f, false};
            if (improved)
                break; // restart the scan with a fresh permutation
        }
        if (!improved)
            return {std::move(g), f, true};
    }
}

std::uint64_t ils_run_slice(IlsState& state, EvaluationLedger& ledger,
                            std::uint64_t slice_budget, Rng& rng)
{
    const std::uint64_t start = ledger.used();
    const auto length = static_cast<std::uint32_t>(ledger.problem().length);

    if (!state.initialized) {
        state.perturbation = PerturbState::initial(length);
        Genome g = random_genome(length, rng);
        const auto f = ledger.evaluate(g, "ils");
        if (!f)
            return ledger.used() - start;
        state.initialized = true;
        state.current = std::move(g);
        state.current_fitness = *f;
        if (!ledger.done()) {
            auto refined = nahc(std::move(state.current), state.current_fitness, ledger, rng);
            state.current = std::move(refined.genome);
            state.current_fitness = refined.fitness;
        }
    }

    while (!ledger.done() && ledger.used() - start < slice_budget) {
        Genome perturbed = perturb(state.current, state.perturbation, rng);
        const auto f = ledger.evaluate(perturbed, "ils");
        if (!f)
            break;
        if (ledger.target_hit())
            break;

        auto result = nahc(std::move(perturbed), *f, ledger, rng);
        const bool unchanged = result.genome == state.current;
        update_alpha(state.perturbation, unchanged);
        // accept always
        state.current = std::move(result.genome);
        state.current_fitness = result.fitness;

        if (state.trace)
            *state.trace << "ils alpha=" << state.perturbation.alpha
                         << " evals=" << ledger.used()
                         << " accepted=" << state.current_fitness.raw << "\n";
    }
    return ledger.used() - start;
}

} // namespace plopt
