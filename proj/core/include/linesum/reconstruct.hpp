#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "linesum/matrix.hpp"
#include "linesum/sequences.hpp"

namespace linesum {

/// Bipartite realization network: source -> row node i with capacity r_i,
/// row i -> column j with capacity 1, column j -> sink with capacity c_j.
struct FlowNetwork {
    struct Arc {
        int from;
        int to;
        int capacity;
    };
    int vertex_count = 0;
    int source = 0;
    int sink = 0;
    std::vector<Arc> arcs;
};

/// Builds the realization network for (r, c). Vertices are numbered
/// source, rows 1..m, columns m+1..m+n, sink m+n+1; arcs are listed
/// source arcs first, then the m*n unit arcs in row-major order, then
/// the sink arcs.
FlowNetwork build_flow_network(const NonincreasingTuple& r, const NonincreasingTuple& c);

struct MaxFlowResult {
    std::int64_t value = 0;
    std::vector<int> arc_flow;  // parallel to FlowNetwork::arcs
};

/// Exact integral maximum flow (Dinic). Deterministic for a fixed arc order.
MaxFlowResult max_flow(const FlowNetwork& net);

/// True iff a (0,1)-matrix with row sums r and column sums c exists,
/// i.e. r is majorized by the conjugate of c.
bool ryser_feasible(const NonincreasingTuple& r, const NonincreasingTuple& c);

/// Greedy realization: rows in order, each row filling the columns with the
/// largest remaining demand (ties to the smallest index). Requires
/// ryser_feasible(r, c); throws std::logic_error otherwise.
BinaryMatrix gale_ryser(const NonincreasingTuple& r, const NonincreasingTuple& c);

/// Flow-based realization. Accepts any valid tuple pair and reports
/// infeasibility as std::nullopt, so it doubles as a criterion-free
/// feasibility probe.
std::optional<BinaryMatrix> maxflow_construct(const NonincreasingTuple& r,
                                              const NonincreasingTuple& c);

}  // namespace linesum
