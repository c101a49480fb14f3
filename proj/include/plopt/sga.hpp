#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "plopt/interleave.hpp" // RunOutcome
#include "plopt/ledger.hpp"
#include "plopt/problems.hpp"
#include "plopt/rng.hpp"

namespace plopt {

struct SgaConfig {
    std::string name;
    std::uint64_t population_size; // N, even
    double crossover_probability;  // pc
    double mutation_probability;   // pm, per bit
    int selection_pressure;        // s
};

// Named presets: sga1, sga2-onemax, sga2-himmelblau-uni,
// sga2-himmelblau-4peak, sga2-rastrigin, sga2-trap. pm given as 1/l is
// resolved against the problem length.
SgaConfig sga_preset(std::string_view name, const ProblemSpec& problem);

// Per position, with probability 0.5 the children swap the parents'
// alleles; the pair conserves the parents' alleles per position.
std::pair<Genome, Genome> uniform_crossover(const Genome& a, const Genome& b, Rng& rng);

// Each bit independently flipped with probability pm.
Genome mutate(const Genome& g, double pm, Rng& rng);

// Generational SGA: tournament selection, pairwise uniform crossover with
// probability pc, per-bit mutation, full replacement, every offspring
// re-evaluated. With pm == 0 a fully converged population short of the
// target ends the run immediately (it cannot improve).
RunOutcome sga_run(const ProblemSpec& problem, const SgaConfig& config,
                   EvaluationLedger& ledger, std::uint64_t run_seed);

} // namespace plopt
