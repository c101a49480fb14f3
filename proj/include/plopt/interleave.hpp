#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "plopt/ledger.hpp"
#include "plopt/problems.hpp"

namespace plopt {

struct InterleaveConfig {
    std::uint64_t fe_elapsed = 500; // per-turn evaluation quantum
};

struct RunOutcome {
    bool success = false;
    std::optional<std::uint64_t> evaluations_to_target;
    std::string attributed_method; // method tag of the first target hit
    std::uint64_t ils_evaluations = 0;
    std::uint64_t ecga_evaluations = 0;
    double best_objective = 0.0;
};

// ILS+ECGA driver: strictly alternate ILS and parameter-less ECGA slices
// on a shared ledger, ILS first. Each slice runs at least fe_elapsed
// evaluations and ends only at a unit boundary (completed NAHC or
// completed generation). The two methods own independent random streams
// derived from the run seed (labels "ils" and "ecga") and share nothing
// but the ledger. If ECGA stalls (no alive population and spawning would
// exceed the remaining budget), the rest of the budget goes to ILS.
RunOutcome run_combined(const ProblemSpec& problem, EvaluationLedger& ledger,
                        const InterleaveConfig& config, std::uint64_t run_seed,
                        std::ostream* trace = nullptr);

} // namespace plopt
