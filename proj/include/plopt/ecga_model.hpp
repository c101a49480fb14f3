#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "plopt/problems.hpp"
#include "plopt/rng.hpp"

namespace plopt {

// Disjoint, exhaustive partition of gene indices {0..l-1}.
struct GenePartition {
    std::vector<std::vector<std::uint32_t>> groups;
};

// Outcome frequency table of one gene group over a reference population.
// counts is indexed by the outcome code: the group's alleles read as a
// big-endian unsigned integer in the order listed in `genes`.
struct MarginalTable {
    std::vector<std::uint32_t> genes;
    std::vector<std::uint64_t> counts; // size 2^genes.size()
    std::uint64_t total = 0;           // population size N
};

// Marginal product model: a partition plus one marginal table per group.
struct MpmModel {
    GenePartition partition;
    std::vector<MarginalTable> tables;
    std::uint64_t population_size = 0;
};

struct MdlScore {
    double model_bits = 0.0;      // Cm
    double data_bits = 0.0;       // Cp
    double combined() const { return model_bits + data_bits; }
};

// Shannon entropy of the table's outcome distribution in bits,
// with the convention 0 * log2(0) = 0.
double entropy_of_group(const MarginalTable& table);

// Cm = log2(N+1) * sum_i (2^Si - 1)
double model_complexity(const GenePartition& partition, std::uint64_t n);

// Cp = N * sum_i E(Mi), with the marginals built from `population`.
double compressed_complexity(const GenePartition& partition,
                             const std::vector<Genome>& population);

MarginalTable build_table(const std::vector<std::uint32_t>& genes,
                          const std::vector<Genome>& population);

MdlScore score_partition(const GenePartition& partition,
                         const std::vector<Genome>& population);

// Greedy MPM search: start from all singletons, repeatedly apply the
// pairwise group merge with the largest decrease of Cm + Cp, stop when no
// merge strictly decreases it (absolute tolerance 1e-9). Ties go to the
// lexicographically smallest pair of group indices.
MpmModel greedy_mpm_search(const std::vector<Genome>& population);

// Draw one outcome per group with its table probabilities and write the
// alleles into the group's gene positions.
Genome sample_individual(const MpmModel& model, Rng& rng);

// One line per group: gene indices and outcome probabilities.
std::string dump_model(const MpmModel& model);

} // namespace plopt
