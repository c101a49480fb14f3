#include "plopt/ecga_model.hpp"

#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace plopt {

namespace {

constexpr double kMergeTolerance = 1e-9;
// Joint tables beyond this many genes are never worth their Cm cost for
// any population this framework produces; skipping them bounds memory.
constexpr std::uint32_t kMaxGroupBits = 25;

double entropy_from_counts(const std::vector<std::uint64_t>& counts, std::uint64_t total)
{
    double e = 0.0;
    const double n = static_cast<double>(total);
    for (std::uint64_t c : counts) {
        if (c == 0)
            continue;
        const double p = static_cast<double>(c) / n;
        e -= p * std::log2(p);
    }
    return e;
}

} // namespace

double entropy_of_group(const MarginalTable& table)
{
    return entropy_from_counts(table.counts, table.total);
}

double model_complexity(const GenePartition& partition, std::uint64_t n)
{
    double subsets = 0.0;
    for (const auto& group : partition.groups)
        subsets += std::ldexp(1.0, static_cast<int>(group.size())) - 1.0;
    return std::log2(static_cast<double>(n) + 1.0) * subsets;
}

MarginalTable build_table(const std::vector<std::uint32_t>& genes,
                          const std::vector<Genome>& population)
{
    MarginalTable table;
    table.genes = genes;
    table.total = population.size();
    table.counts.assign(std::size_t{1} << genes.size(), 0);
    for (const auto& g : population) {
        std::size_t code = 0;
        for (auto idx : genes)
            code = (code << 1) | (g[idx] & 1u);
        ++table.counts[code];
    }
    return table;
}

double compressed_complexity(const GenePartition& partition,
                             const std::vector<Genome>& population)
{
    if (population.empty())
        throw std::invalid_argument("compressed_complexity: empty population");
    double entropy_sum = 0.0;
    for (const auto& group : partition.groups)
        entropy_sum += entropy_of_group(build_table(group, population));
    return static_cast<double>(population.size()) * entropy_sum;
}

MdlScore score_partition(const GenePartition& partition,
                         const std::vector<Genome>& population)
{
    return {model_complexity(partition, population.size()),
            compressed_complexity(partition, population)};
}

namespace {

// Working state of the greedy search: per group, its genes, the outcome
// code of every individual, and the cached entropy.
struct Group {
    std::vector<std::uint32_t> genes;
    std::vector<std::uint32_t> codes; // one per individual
    double entropy = 0.0;
};

double group_entropy(const Group& g, std::uint64_t n)
{
    std::vector<std::uint64_t> counts(std::size_t{1} << g.genes.size(), 0);
    for (auto code : g.codes)
        ++counts[code];
    return entropy_from_counts(counts, n);
}

// Score change of merging groups a and b: Cm grows by the joint subset
// term, Cp shrinks by N times the mutual information.
double merge_delta(const Group& a, const Group& b, std::uint64_t n, double log_n1)
{
    const auto sa = static_cast<std::uint32_t>(a.genes.size());
    const auto sb = static_cast<std::uint32_t>(b.genes.size());
    if (sa + sb > kMaxGroupBits)
        return std::numeric_limits<double>::infinity();

    std::vector<std::uint64_t> counts(std::size_t{1} << (sa + sb), 0);
    for (std::size_t i = 0; i < a.codes.size(); ++i)
        ++counts[(static_cast<std::size_t>(a.codes[i]) << sb) | b.codes[i]];
    const double joint_entropy = entropy_from_counts(counts, n);

    const double dm = log_n1 * (std::ldexp(1.0, static_cast<int>(sa + sb)) -
                                std::ldexp(1.0, static_cast<int>(sa)) -
                                std::ldexp(1.0, static_cast<int>(sb)) + 1.0);
    const double dp = static_cast<double>(n) * (joint_entropy - a.entropy - b.entropy);
    return dm + dp;
}

} // namespace

MpmModel greedy_mpm_search(const std::vector<Genome>& population)
{
    if (population.empty())
        throw std::invalid_argument("greedy_mpm_search: empty population");

    const std::uint64_t n = population.size();
    const std::size_t l = population.front().size();
    const double log_n1 = std::log2(static_cast<double>(n) + 1.0);

    std::vector<Group> groups(l);
    for (std::size_t i = 0; i < l; ++i) {
        groups[i].genes = {static_cast<std::uint32_t>(i)};
        groups[i].codes.resize(n);
        for (std::size_t j = 0; j < n; ++j)
            groups[i].codes[j] = population[j][i] & 1u;
        groups[i].entropy = group_entropy(groups[i], n);
    }

    // Cached pairwise deltas; only rows touching the last merged group are
    // recomputed after a merge.
    std::vector<std::vector<double>> delta(l, std::vector<double>(l, 0.0));
    for (std::size_t i = 0; i + 1 < groups.size(); ++i)
        for (std::size_t j = i + 1; j < groups.size(); ++j)
            delta[i][j] = merge_delta(groups[i], groups[j], n, log_n1);

    while (groups.size() > 1) {
        std::size_t best_i = 0, best_j = 0;
        double best = -kMergeTolerance;
        for (std::size_t i = 0; i + 1 < groups.size(); ++i) {
            for (std::size_t j = i + 1; j < groups.size(); ++j) {
                if (delta[i][j] < best) {
                    best = delta[i][j];
                    best_i = i;
                    best_j = j;
                }
            }
        }
        if (best_i == best_j)
            break; // no merge strictly decreases the score

        Group& a = groups[best_i];
        const Group& b = groups[best_j];
        const auto sb = static_cast<std::uint32_t>(b.genes.size());
        a.genes.insert(a.genes.end(), b.genes.begin(), b.genes.end());
        for (std::size_t k = 0; k < a.codes.size(); ++k)
            a.codes[k] = (a.codes[k] << sb) | b.codes[k];
        a.entropy = group_entropy(a, n);

        groups.erase(groups.begin() + static_cast<std::ptrdiff_t>(best_j));
        for (auto& row : delta)
            row.erase(row.begin() + static_cast<std::ptrdiff_t>(best_j));
        delta.erase(delta.begin() + static_cast<std::ptrdiff_t>(best_j));

        for (std::size_t k = 0; k < groups.size(); ++k) {
            if (k == best_i)
                continue;
            const double d = merge_delta(groups[std::min(k, best_i)],
                                         groups[std::max(k, best_i)], n, log_n1);
            delta[std::min(k, best_i)][std::max(k, best_i)] = d;
        }
    }

    MpmModel model;
    model.population_size = n;
    for (auto& group : groups) {
        model.partition.groups.push_back(group.genes);
        MarginalTable table;
        table.genes = group.genes;
        table.total = n;
        table.counts.assign(std::size_t{1} << group.genes.size(), 0);
        for (auto code : group.codes)
            ++table.counts[code];
        model.tables.push_back(std::move(table));
    }
    return model;
}

Genome sample_individual(const MpmModel& model, Rng& rng)
{
    std::size_t length = 0;
    for (const auto& group : model.partition.groups)
        length += group.size();

    Genome g(length, 0);
    for (const auto& table : model.tables) {
        // inverse-CDF draw over the outcome counts
        std::uint64_t pick = rng.below(table.total);
        std::size_t outcome = 0;
        for (; outcome < table.counts.size(); ++outcome) {
            if (pick < table.counts[outcome])
                break;
            pick -= table.counts[outcome];
        }
        const std::size_t width = table.genes.size();
        for (std::size_t k = 0; k < width; ++k)
            g[table.genes[k]] =
                static_cast<std::uint8_t>((outcome >> (width - 1 - k)) & 1u);
    }
    return g;
}

std::string dump_model(const MpmModel& model)
{
    std::ostringstream out;
    for (const auto& table : model.tables) {
        out << "[";
        for (std::size_t k = 0; k < table.genes.size(); ++k)
            out << (k ? " " : "") << table.genes[k];
        out << "]";
        for (std::uint64_t c : table.counts)
            out << " " << static_cast<double>(c) / static_cast<double>(table.total);
        out << "\n";
    }
    return out.str();
}

} // namespace plopt
