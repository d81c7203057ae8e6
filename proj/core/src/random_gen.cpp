#include "linesum/random_gen.hpp"

#include <limits>
#include <stdexcept>

namespace linesum {

std::uint64_t SplitMix64::next_below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("next_below: bound must be positive");
    const std::uint64_t limit =
        std::numeric_limits<std::uint64_t>::max() -
        std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t draw = next();
    while (draw >= limit) draw = next();
    return draw % bound;
}

std::int64_t SplitMix64::next_in(std::int64_t lo, std::int64_t hi) {
    if (lo > hi) throw std::invalid_argument("next_in: empty range");
    const std::uint64_t span = std::uint64_t(hi) - std::uint64_t(lo) + 1;
    return lo + std::int64_t(next_below(span));
}

std::vector<std::int32_t> random_table(SplitMix64& rng, int length, std::int32_t lo,
                                       std::int32_t hi) {
    std::vector<std::int32_t> table(length);
    for (auto& value : table) value = std::int32_t(rng.next_in(lo, hi));
    return table;
}

Instance random_instance(int m, int n, std::int32_t lo, std::int32_t hi,
                         std::uint64_t seed) {
    SplitMix64 rng(seed);
    std::vector<std::vector<std::int32_t>> f, g;
    f.reserve(m);
    g.reserve(n);
    for (int i = 0; i < m; ++i) f.push_back(random_table(rng, n + 1, lo, hi));
    for (int j = 0; j < n; ++j) g.push_back(random_table(rng, m + 1, lo, hi));
    return Instance(m, n, std::move(f), std::move(g));
}

Instance random_uniform_instance(int m, int n, std::int32_t lo, std::int32_t hi,
                                 std::uint64_t seed) {
    SplitMix64 rng(seed);
    const auto f = random_table(rng, n + 1, lo, hi);
    const auto g = random_table(rng, m + 1, lo, hi);
    return Instance::uniform(m, n, f, g);
}

}  // namespace linesum
