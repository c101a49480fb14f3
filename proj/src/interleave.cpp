#include "plopt/interleave.hpp"

#include <ostream>
#include <stdexcept>

#include "plopt/ils.hpp"
#include "plopt/paramless_ecga.hpp"

namespace plopt {

RunOutcome run_combined(const ProblemSpec& problem, EvaluationLedger& ledger,
                        const InterleaveConfig& config, std::uint64_t run_seed,
                        std::ostream* trace)
{
    if (&ledger.problem() != &problem)
        throw std::invalid_argument("run_combined: ledger bound to a different problem");

    Rng ils_rng = Rng::derive(run_seed, "ils");
    Rng ecga_rng = Rng::derive(run_seed, "ecga");

    IlsState ils_state;
    ils_state.trace = trace;
    SchedulerState ecga_state;
    ecga_state.trace = trace;

    std::uint64_t ils_total = 0;
    std::uint64_t ecga_total = 0;
    bool ils_turn = true; // ILS runs first
    bool ecga_stalled = false;

    while (!ledger.done()) {
        if (ils_turn || ecga_stalled) {
            // a stalled ECGA hands its share of the budget to ILS
            const std::uint64_t slice =
                ecga_stalled ? ledger.remaining() : config.fe_elapsed;
            const std::uint64_t consumed = ils_run_slice(ils_state, ledger, slice, ils_rng);
            ils_total += consumed;
            if (consumed == 0)
                break;
        } else {
            const SliceResult result =
                paramless_run_slice(ecga_state, ledger, config.fe_elapsed, ecga_rng);
            ecga_total += result.consumed;
            if (result.stalled)
                ecga_stalled = true;
        }
        ils_turn = !ils_turn;
    }

    RunOutcome outcome;
    outcome.success = ledger.target_hit();
    outcome.evaluations_to_target = ledger.target_hit_at();
    outcome.attributed_method = ledger.attribution();
    outcome.ils_evaluations = ils_total;
    outcome.ecga_evaluations = ecga_total;
    outcome.best_objective = ledger.best_objective();
    return outcome;
}

} // namespace plopt
