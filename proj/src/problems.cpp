#include "plopt/problems.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace plopt {

namespace {

const std::vector<ProblemSpec>& catalog()
{
    static const std::vector<ProblemSpec> specs = {
        {ProblemKind::onemax, "onemax100", 100, 0, 0, 0.0, 0.0, 100.0, true},
        {ProblemKind::himmelblau_unimodal, "himmelblau-uni", 24, 2, 12, 0.0, 6.0, 0.001, false},
        {ProblemKind::himmelblau_fourpeak, "himmelblau-4peak", 26, 2, 13, -6.0, 6.0, 0.001, false},
        {ProblemKind::rastrigin10, "rastrigin10", 130, 10, 13, -6.0, 6.0, 0.01, false},
        {ProblemKind::trap4x10, "trap4x10", 40, 0, 0, 0.0, 0.0, 40.0, true},
    };
    return specs;
}

double trap4(unsigned u)
{
    return u == 4 ? 4.0 : 3.0 - static_cast<double>(u);
}

} // namespace

Genome random_genome(std::size_t length, Rng& rng)
{
    Genome g(length);
    for (auto& bit : g)
        bit = static_cast<std::uint8_t>(rng.next_u64() & 1u);
    return g;
}

const ProblemSpec& ProblemSpec::by_name(std::string_view name)
{
    for (const auto& spec : catalog())
        if (spec.name == name)
            return spec;
    throw std::invalid_argument("unknown problem: " + std::string(name));
}

const std::vector<std::string>& ProblemSpec::names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& spec : catalog())
            out.push_back(spec.name);
        return out;
    }();
    return names;
}

double decode_variable(std::span<const std::uint8_t> bits, double lo, double hi)
{
    if (bits.empty())
        throw std::invalid_argument("decode_variable: zero-width bit string");
    std::uint64_t value = 0;
    for (auto bit : bits)
        value = (value << 1) | (bit & 1u);
    const double denom = std::ldexp(1.0, static_cast<int>(bits.size())) - 1.0;
    return lo + static_cast<double>(value) * (hi - lo) / denom;
}

double himmelblau(double x1, double x2)
{
    const double a = x1 * x1 + x2 - 11.0;
    const double b = x1 + x2 * x2 - 7.0;
    return a * a + b * b;
}

double himmelblau_fourpeak(double x1, double x2)
{
    const double d1 = x1 - 3.0;
    const double d2 = x2 - 2.0;
    return himmelblau(x1, x2) + 0.1 * d1 * d1 * d2 * d2;
}

double rastrigin(std::span<const double> xs)
{
    double sum = 100.0;
    for (double x : xs)
        sum += x * x - 10.0 * std::cos(2.0 * std::numbers::pi * x);
    return sum;
}

namespace {

std::vector<double> decode_all(const ProblemSpec& p, const Genome& g)
{
    std::vector<double> xs(p.num_vars);
    for (std::size_t i = 0; i < p.num_vars; ++i) {
        const auto* first = g.data() + i * p.bits_per_var;
        xs[i] = decode_variable({first, p.bits_per_var}, p.lower_bound, p.upper_bound);
    }
    return xs;
}

} // namespace

Fitness evaluate(const ProblemSpec& problem, const Genome& g)
{
    if (g.size() != problem.length)
        throw std::invalid_argument("evaluate: genome length mismatch");

    double raw = 0.0;
    switch (problem.kind) {
    case ProblemKind::onemax: {
        unsigned ones = 0;
        for (auto bit : g)
            ones += bit;
        raw = static_cast<double>(ones);
        break;
    }
    case ProblemKind::himmelblau_unimodal: {
        const auto xs = decode_all(problem, g);
        raw = himmelblau(xs[0], xs[1]);
        break;
    }
    case ProblemKind::himmelblau_fourpeak: {
        const auto xs = decode_all(problem, g);
        raw = himmelblau_fourpeak(xs[0], xs[1]);
        break;
    }
    case ProblemKind::rastrigin10: {
        const auto xs = decode_all(problem, g);
        raw = rastrigin(xs);
        break;
    }
    case ProblemKind::trap4x10: {
        for (std::size_t block = 0; block < 10; ++block) {
            unsigned u = 0;
            for (std::size_t i = 0; i < 4; ++i)
                u += g[block * 4 + i];
            raw += trap4(u);
        }
        break;
    }
    }
    return {raw, problem.maximize ? raw : -raw};
}

bool is_target(const ProblemSpec& problem, double raw_objective)
{
    return problem.maximize ? raw_objective >= problem.target_threshold
                            : raw_objective <= problem.target_threshold;
}

} // namespace plopt
