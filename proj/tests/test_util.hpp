#pragma once

#include <functional>
#include <vector>

#include "linesum/instance.hpp"
#include "linesum/sequences.hpp"

namespace testutil {

/// Every nonincreasing tuple of the given length with entries in [0, bound],
/// in lexicographically decreasing order.
inline std::vector<std::vector<int>> all_nonincreasing(int length, int bound) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(length);
    std::function<void(int, int)> descend = [&](int pos, int limit) {
        if (pos == length) {
            out.push_back(cur);
            return;
        }
        for (int v = limit; v >= 0; --v) {
            cur[pos] = v;
            descend(pos + 1, v);
        }
    };
    descend(0, bound);
    return out;
}

inline linesum::NonincreasingTuple tuple(std::vector<int> entries, int bound) {
    return linesum::NonincreasingTuple(std::move(entries), bound);
}

/// f_i(x) = (x - row_targets[i])^2, g_j(y) = (y - col_targets[j])^2: a
/// nonnegative instance whose unique zero is the target sum pair.
inline linesum::Instance squared_deviation_instance(const std::vector<int>& row_targets,
                                                    const std::vector<int>& col_targets) {
    const int m = static_cast<int>(row_targets.size());
    const int n = static_cast<int>(col_targets.size());
    std::vector<std::vector<std::int32_t>> f, g;
    for (int i = 0; i < m; ++i) {
        std::vector<std::int32_t> table(n + 1);
        for (int x = 0; x <= n; ++x) table[x] = (x - row_targets[i]) * (x - row_targets[i]);
        f.push_back(std::move(table));
    }
    for (int j = 0; j < n; ++j) {
        std::vector<std::int32_t> table(m + 1);
        for (int y = 0; y <= m; ++y) table[y] = (y - col_targets[j]) * (y - col_targets[j]);
        g.push_back(std::move(table));
    }
    return linesum::Instance(m, n, std::move(f), std::move(g));
}

/// The 4x4 uniform instance with f(x) = (x-1)^2 (x-3)^2 and
/// g(y) = (y-2)^2 (y-3)^2, tabulated.
inline linesum::Instance golden_4x4() {
    return linesum::Instance::uniform(4, 4, {9, 0, 1, 0, 9}, {36, 4, 0, 0, 4});
}

}  // namespace testutil
