#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace plopt {

// Seedable random stream used by every algorithm. All draws go through
// mt19937_64, whose output is fully specified by the standard, with
// hand-rolled mappings instead of std distributions (those are
// implementation-defined and would break cross-platform reproducibility).
//
// Independent streams are derived from a base seed by mixing in salts
// (run index, method label) with a splitmix64 finalizer.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    static std::uint64_t mix(std::uint64_t seed, std::uint64_t salt);
    static std::uint64_t label_hash(std::string_view label);

    static Rng derive(std::uint64_t seed, std::string_view label)
    {
        return Rng(mix(seed, label_hash(label)));
    }
    static Rng derive(std::uint64_t seed, std::uint64_t index, std::string_view label)
    {
        return Rng(mix(mix(seed, index), label_hash(label)));
    }

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1), 53-bit resolution
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_double() < p; }

    // uniform in [0, n), unbiased via rejection
    std::uint64_t below(std::uint64_t n);

    // Fisher-Yates shuffle of 0..n-1
    std::vector<std::uint32_t> permutation(std::uint32_t n);

private:
    std::mt19937_64 gen_;
};

} // namespace plopt
