#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linesum/instance.hpp"
#include "linesum/matrix.hpp"
#include "linesum/strips.hpp"

namespace linesum {

/// Vertex label of the layered search graph for column tuples of type k.
/// A u-v path visits one such vertex per row, reading off a nonincreasing
/// row tuple r together with the strips of a type-k column tuple c, and the
/// path length equals the objective of (r, c).
struct DpState {
    int strip;        // h: index of the strip covering this row, 1..k+1
    int strip_len;    // t_h: number of columns with value >= d_h
    int strip_depth;  // d_h: the column value shared by strip h (m for h=k+1)
    int row;          // i: 1-based row index
    int row_sum;      // r_i
    int conj_prefix;  // S_i = s_1 + ... + s_i, prefix sum of the conjugate
    int row_prefix;   // R_i = r_1 + ... + r_i

    friend bool operator==(const DpState&, const DpState&) = default;
    friend auto operator<=>(const DpState&, const DpState&) = default;
};

/// The u-v walk determined by a concrete strip encoding and row tuple:
/// the m internal vertices plus the m+1 edge lengths between u, them, and v.
struct PathTrace {
    std::vector<DpState> vertices;
    std::vector<std::int64_t> edge_lengths;

    std::int64_t total() const;
};

/// Walks the graph edges for the (c, r) pair described by `enc` and `r`.
/// Requires r majorized by the conjugate of the decoded c; throws
/// std::invalid_argument otherwise. The trace total always equals
/// objective_eval(inst, r, c).
PathTrace trace_strip_path(const Instance& inst, const StripEncoding& enc,
                           const NonincreasingTuple& r);

struct TypeKResult {
    std::int64_t objective = 0;
    NonincreasingTuple r;
    NonincreasingTuple c;
    std::vector<DpState> path;  // internal vertices of the optimal path
    std::uint64_t explored_states = 0;
};

/// Best (r, c) with c of type exactly k, or std::nullopt when no u-v path
/// exists (degenerate dimensions only). Requires 1 <= k <= min(m, n).
std::optional<TypeKResult> solve_type_k(const Instance& inst, int k);

struct SolverOptions {
    bool parallel = true;  // search the per-type graphs concurrently
};

struct SolveStats {
    std::vector<std::uint64_t> explored_states;  // indexed by type k, [0] = 0
    std::int64_t elapsed_us = 0;
};

struct Solution {
    std::int64_t objective = 0;
    NonincreasingTuple r;
    NonincreasingTuple c;
    int k = 0;  // type of c
    BinaryMatrix matrix;
    SolveStats stats;
};

/// Optimum over monotone (0,1)-matrices. Deterministic: ties prefer the
/// smaller type, then the lexicographically smaller terminal state.
Solution solve_monotone(const Instance& inst, const SolverOptions& options = {});

/// Optimum over ALL (0,1)-matrices when every row shares the cost table f
/// and every column shares g; permutation invariance reduces this to the
/// monotone problem.
Solution solve_uniform(int m, int n, const std::vector<std::int32_t>& f,
                       const std::vector<std::int32_t>& g,
                       const SolverOptions& options = {});

}  // namespace linesum
