#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "plopt/ledger.hpp"
#include "plopt/problems.hpp"
#include "plopt/rng.hpp"

namespace plopt {

struct EcgaConfig {
    int selection_pressure = 4;      // s
    double sampling_fraction = 0.5;  // pc; s * (1 - pc) == 2
    int generations_ratio = 4;       // m, base of the execution counter
};

struct PopulationState {
    std::uint64_t size = 0;
    std::vector<Genome> genomes;
    std::vector<Fitness> fitnesses;
    std::uint64_t generation = 0;
    bool alive = true;
    double average_key = 0.0;

    bool converged() const; // all genomes bit-identical
    void recompute_average();
};

// Concurrent populations of doubling size driven by a base-m execution
// counter. Destroyed populations stay in the list (alive = false) and are
// never revived.
struct SchedulerState {
    EcgaConfig config;
    std::vector<PopulationState> populations;
    std::uint64_t step = 0;
    std::uint64_t next_size = 4; // N1 = 4, doubling per spawn
    std::ostream* trace = nullptr;
};

// s-way tournament with replacement; returns N winner indices. Ties go to
// the earliest-drawn contestant.
std::vector<std::uint32_t> tournament_winners(const std::vector<Fitness>& fitnesses,
                                              int s, Rng& rng);

// One selecto-recombinative ECGA generation with half sampling: select N
// winners, build an MPM, then fill each slot either with a fresh model
// sample (probability pc, evaluated through the ledger) or with that
// slot's winner and its stored fitness. Returns false when the ledger
// stops the generation (budget or target); the population is then left at
// the previous generation.
bool ecga_generation(PopulationState& population, EvaluationLedger& ledger,
                     const EcgaConfig& config, Rng& rng);

// Position (1-based) scheduled at step t of a base-m counter:
// 1 + multiplicity of m in t. Position k maps to the k-th alive
// population; beyond the alive list it means "spawn the next size".
int scheduler_position(std::uint64_t step, int m);

// Destroys populations that are fully converged, and populations whose
// average fitness is below that of some larger population.
void eliminate_populations(SchedulerState& state);

struct SliceResult {
    std::uint64_t consumed = 0;
    bool stalled = false; // no alive population and spawning unaffordable
};

// Advance the scheduler by whole units (one generation or one spawn) until
// at least slice_budget evaluations were consumed in this slice, or the
// ledger reports target hit / exhaustion.
SliceResult paramless_run_slice(SchedulerState& state, EvaluationLedger& ledger,
                                std::uint64_t slice_budget, Rng& rng);

} // namespace plopt
