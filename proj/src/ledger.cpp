#include "plopt/ledger.hpp"

namespace plopt {

std::optional<Fitness> EvaluationLedger::evaluate(const Genome& g, std::string_view method_tag)
{
    if (used_ >= budget_)
        return std::nullopt;

    const Fitness f = plopt::evaluate(*problem_, g);
    ++used_;

    if (f.key > best_.key) {
        best_ = f;
        best_genome_ = g;
    }
    if (!target_hit_at_ && is_target(*problem_, f.raw)) {
        target_hit_at_ = used_;
        attribution_ = std::string(method_tag);
    }
    return f;
}

} // namespace plopt
