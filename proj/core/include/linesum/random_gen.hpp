#pragma once

#include <cstdint>
#include <vector>

#include "linesum/instance.hpp"

namespace linesum {

/// splitmix64 (Steele, Lea, Vigna): a tiny 64-bit mixing generator with a
/// fixed published constant set, so seeded corpora are reproducible across
/// platforms and reimplementations.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, bound) by rejection. bound > 0.
    std::uint64_t next_below(std::uint64_t bound);

    /// Unbiased draw from [lo, hi], inclusive.
    std::int64_t next_in(std::int64_t lo, std::int64_t hi);

  private:
    std::uint64_t state_;
};

/// Cost table of `length` values drawn uniformly from [lo, hi].
std::vector<std::int32_t> random_table(SplitMix64& rng, int length, std::int32_t lo,
                                       std::int32_t hi);

/// Instance with all m + n tables drawn from [lo, hi]: the m row tables in
/// order, then the n column tables.
Instance random_instance(int m, int n, std::int32_t lo, std::int32_t hi,
                         std::uint64_t seed);

/// Uniform instance: one shared row table then one shared column table.
Instance random_uniform_instance(int m, int n, std::int32_t lo, std::int32_t hi,
                                 std::uint64_t seed);

}  // namespace linesum
