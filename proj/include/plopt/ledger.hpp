#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "plopt/problems.hpp"

namespace plopt {

// Counts every fitness evaluation of a run, tracks the best solution seen,
// and records the first target hit together with the method that made it.
// A ledger belongs to exactly one run. Budget exhaustion is a normal
// control signal: evaluate() returns nullopt and performs no evaluation.
class EvaluationLedger {
public:
    static constexpr std::uint64_t kDefaultBudget = 2'000'000;

    EvaluationLedger(const ProblemSpec& problem, std::uint64_t budget = kDefaultBudget)
        : problem_(&problem), budget_(budget)
    {
    }

    std::optional<Fitness> evaluate(const Genome& g, std::string_view method_tag);

    const ProblemSpec& problem() const { return *problem_; }
    std::uint64_t used() const { return used_; }
    std::uint64_t budget() const { return budget_; }
    std::uint64_t remaining() const { return budget_ - used_; }
    bool exhausted() const { return used_ >= budget_; }
    bool target_hit() const { return target_hit_at_.has_value(); }
    bool done() const { return exhausted() || target_hit(); }

    std::optional<std::uint64_t> target_hit_at() const { return target_hit_at_; }
    const std::string& attribution() const { return attribution_; }
    double best_objective() const { return best_.raw; }
    double best_key() const { return best_.key; }
    const Genome& best_genome() const { return best_genome_; }

private:
    const ProblemSpec* problem_;
    std::uint64_t budget_;
    std::uint64_t used_ = 0;
    Fitness best_{0.0, -1e300};
    Genome best_genome_;
    std::optional<std::uint64_t> target_hit_at_;
    std::string attribution_;
};

} // namespace plopt
