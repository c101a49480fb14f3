#include "plopt/rng.hpp"

#include <numeric>

namespace plopt {

// splitmix64 finalizer
std::uint64_t Rng::mix(std::uint64_t seed, std::uint64_t salt)
{
    std::uint64_t z = seed + salt + 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// FNV-1a
std::uint64_t Rng::label_hash(std::string_view label)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : label) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::uint64_t Rng::below(std::uint64_t n)
{
    // rejection sampling over the top part of the range
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
        const std::uint64_t r = next_u64();
        if (r >= threshold)
            return r % n;
    }
}

std::vector<std::uint32_t> Rng::permutation(std::uint32_t n)
{
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    for (std::uint32_t i = n; i > 1; --i) {
        const auto j = static_cast<std::uint32_t>(below(i));
        std::swap(perm[i - 1], perm[j]);
    }
    return perm;
}

} // namespace plopt
