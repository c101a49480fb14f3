#pragma once

#include <cstdint>
#include <iosfwd>

#include "plopt/ledger.hpp"
#include "plopt/problems.hpp"
#include "plopt/rng.hpp"

namespace plopt {

// Adaptive perturbation strength. alpha is the expected number of genes
// flipped; per-gene probability alpha / l.
struct PerturbState {
    double alpha = 0.0;
    std::uint32_t length = 0;

    static double base_alpha(std::uint32_t l) { return l <= 60 ? 3.0 : 0.05 * l; }
    static PerturbState initial(std::uint32_t l) { return {base_alpha(l), l}; }
};

// alpha <- alpha + 0.02 l when the last local optimum equalled the previous
// one (bitwise), else reset to base alpha. Clamped at l so the per-gene
// probability never exceeds 1.
void update_alpha(PerturbState& state, bool unchanged);

// Copy with each allele independently flipped with probability alpha / l.
Genome perturb(const Genome& g, const PerturbState& state, Rng& rng);

struct NahcResult {
    Genome genome;
    Fitness fitness;
    bool complete = false; // false when the ledger cut the search short
};

// Next-ascent hill climber: scan the genes in a fresh uniformly random
// order, flipping one at a time; keep the first strictly improving flip and
// restart with a new permutation; stop when a full scan yields no
// improvement. `start` must carry its already-evaluated fitness.
NahcResult nahc(Genome start, Fitness start_fitness, EvaluationLedger& ledger, Rng& rng);

struct IlsState {
    bool initialized = false;
    Genome current;           // s*, the last accepted local optimum
    Fitness current_fitness;
    PerturbState perturbation;
    std::ostream* trace = nullptr;
};

// Iterate {perturb, NAHC, update alpha, accept always} until at least
// slice_budget evaluations were consumed within this slice (the NAHC in
// progress always completes) or the ledger reports target hit /
// exhaustion. The first call generates, evaluates and NAHC-refines a
// random initial solution. Returns the evaluations consumed.
std::uint64_t ils_run_slice(IlsState& state, EvaluationLedger& ledger,
                            std::uint64_t slice_budget, Rng& rng);

} // namespace plopt
