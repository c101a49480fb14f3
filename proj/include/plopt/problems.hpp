#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "plopt/rng.hpp"

namespace plopt {

// Fixed-length bit string; the universal solution representation.
using Genome = std::vector<std::uint8_t>;

Genome random_genome(std::size_t length, Rng& rng);

// Raw objective in problem units plus a sign-normalized comparison key:
// key == raw for maximization problems, key == -raw for minimization,
// so "larger key is better" holds everywhere.
struct Fitness {
    double raw = 0.0;
    double key = 0.0;
};

enum class ProblemKind {
    onemax,
    himmelblau_unimodal,
    himmelblau_fourpeak,
    rastrigin10,
    trap4x10,
};

struct ProblemSpec {
    ProblemKind kind;
    std::string name;          // stable string identifier
    std::size_t length;        // genes
    std::size_t num_vars;      // 0 for purely combinatorial problems
    std::size_t bits_per_var;
    double lower_bound;
    double upper_bound;
    double target_threshold;   // objective units
    bool maximize;

    static const ProblemSpec& by_name(std::string_view name);
    static const std::vector<std::string>& names();
};

// Standard binary-coded real decoding: the bit string is read as an
// unsigned big-endian integer v and mapped to lo + v * (hi - lo) / (2^b - 1),
// so both interval endpoints are exactly representable.
double decode_variable(std::span<const std::uint8_t> bits, double lo, double hi);

// Real-valued objectives, exposed for direct checks on analytic points.
double himmelblau(double x1, double x2);
double himmelblau_fourpeak(double x1, double x2);
double rastrigin(std::span<const double> xs);

// Pure fitness evaluation; no counting, no side effects.
Fitness evaluate(const ProblemSpec& problem, const Genome& g);

// Exact optimum for onemax/trap, neighborhood threshold for the
// continuous problems.
bool is_target(const ProblemSpec& problem, double raw_objective);

} // namespace plopt
