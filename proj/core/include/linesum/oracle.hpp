#pragma once

#include <cstdint>

#include "linesum/instance.hpp"
#include "linesum/matrix.hpp"
#include "linesum/sequences.hpp"

namespace linesum {

struct MatrixOracleResult {
    std::int64_t objective = 0;
    BinaryMatrix witness;  // lexicographically smallest minimizer, row-major
};

/// Exhaustive minimum over all 2^(m*n) matrices, optionally restricted to
/// those with nonincreasing row and column sums. Refuses m*n > 20.
MatrixOracleResult brute_force_matrix(const Instance& inst, bool monotone_only);

struct SequenceOracleResult {
    std::int64_t objective = 0;
    NonincreasingTuple r;
    NonincreasingTuple c;
};

/// Exhaustive minimum over all nonincreasing column tuples c and all
/// nonincreasing row tuples majorized by the conjugate of c — the exact
/// search space of realizable monotone line sums. Refuses m > 8 or n > 8.
SequenceOracleResult brute_force_sequences(const Instance& inst);

}  // namespace linesum
