#include "linesum/reconstruct.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace linesum {

namespace {

void check_compatible(const NonincreasingTuple& r, const NonincreasingTuple& c) {
    if (r.bound() != c.size() || c.bound() != r.size())
        throw std::invalid_argument(
            "row and column tuples disagree on the matrix dimensions");
}

}  // namespace

FlowNetwork build_flow_network(const NonincreasingTuple& r, const NonincreasingTuple& c) {
    check_compatible(r, c);
    const int m = r.size();
    const int n = c.size();
    FlowNetwork net;
    net.vertex_count = m + n + 2;
    net.source = 0;
    net.sink = m + n + 1;
    net.arcs.reserve(std::size_t(m) * n + m + n);
    for (int i = 0; i < m; ++i) net.arcs.push_back({net.source, 1 + i, r[i]});
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) net.arcs.push_back({1 + i, 1 + m + j, 1});
    for (int j = 0; j < n; ++j) net.arcs.push_back({1 + m + j, net.sink, c[j]});
    return net;
}

namespace {

// Dinic on the residual graph; edge 2a is the forward copy of arc a,
// edge 2a+1 its reverse.
class Dinic {
  public:
    explicit Dinic(const FlowNetwork& net) : n_(net.vertex_count), head_(n_) {
        edges_.reserve(net.arcs.size() * 2);
        for (const auto& arc : net.arcs) {
            head_[arc.from].push_back((int)edges_.size());
            edges_.push_back({arc.to, arc.capacity});
            head_[arc.to].push_back((int)edges_.size());
            edges_.push_back({arc.from, 0});
        }
    }

    std::int64_t run(int s, int t) {
        std::int64_t total = 0;
        while (bfs(s, t)) {
            it_.assign(n_, 0);
            while (int pushed = dfs(s, t, kInf)) total += pushed;
        }
        return total;
    }

    // Flow on original arc a == residual capacity of its reverse edge.
    int flow_on(std::size_t a) const { return edges_[2 * a + 1].cap; }

  private:
    struct Edge {
        int to;
        int cap;
    };
    static constexpr int kInf = 1 << 30;

    bool bfs(int s, int t) {
        level_.assign(n_, -1);
        std::queue<int> q;
        level_[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int id : head_[v]) {
                const Edge& e = edges_[id];
                if (e.cap > 0 && level_[e.to] < 0) {
                    level_[e.to] = level_[v] + 1;
                    q.push(e.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    int dfs(int v, int t, int limit) {
        if (v == t) return limit;
        for (int& idx = it_[v]; idx < (int)head_[v].size(); ++idx) {
            const int id = head_[v][idx];
            Edge& e = edges_[id];
            if (e.cap <= 0 || level_[e.to] != level_[v] + 1) continue;
            const int pushed = dfs(e.to, t, std::min(limit, e.cap));
            if (pushed > 0) {
                e.cap -= pushed;
                edges_[id ^ 1].cap += pushed;
                return pushed;
            }
        }
        return 0;
    }

    int n_;
    std::vector<std::vector<int>> head_;
    std::vector<Edge> edges_;
    std::vector<int> level_;
    std::vector<int> it_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& net) {
    Dinic dinic(net);
    MaxFlowResult result;
    result.value = dinic.run(net.source, net.sink);
    result.arc_flow.reserve(net.arcs.size());
    for (std::size_t a = 0; a < net.arcs.size(); ++a)
        result.arc_flow.push_back(dinic.flow_on(a));
    return result;
}

bool ryser_feasible(const NonincreasingTuple& r, const NonincreasingTuple& c) {
    check_compatible(r, c);
    return is_majorized(r, conjugate(c));
}

BinaryMatrix gale_ryser(const NonincreasingTuple& r, const NonincreasingTuple& c) {
    if (!ryser_feasible(r, c))
        throw std::logic_error("gale_ryser: (r, c) fails the Ryser criterion");
    const int m = r.size();
    const int n = c.size();
    BinaryMatrix a(m, std::vector<int>(n, 0));
    std::vector<int> remaining(c.begin(), c.end());
    std::vector<int> order(n);
    for (int i = 0; i < m; ++i) {
        // Columns by remaining demand, largest first, ties to smaller index.
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int x, int y) { return remaining[x] > remaining[y]; });
        for (int p = 0; p < r[i]; ++p) {
            const int j = order[p];
            if (remaining[j] <= 0)
                throw std::logic_error("gale_ryser: column demand exhausted");
            --remaining[j];
            a[i][j] = 1;
        }
    }
    for (int rem : remaining)
        if (rem != 0) throw std::logic_error("gale_ryser: unmet column demand");
    return a;
}

std::optional<BinaryMatrix> maxflow_construct(const NonincreasingTuple& r,
                                              const NonincreasingTuple& c) {
    check_compatible(r, c);
    if (r.sum() != c.sum()) return std::nullopt;
    const int m = r.size();
    const int n = c.size();
    const FlowNetwork net = build_flow_network(r, c);
    const MaxFlowResult flow = max_flow(net);
    if (flow.value != r.sum()) return std::nullopt;
    BinaryMatrix a(m, std::vector<int>(n, 0));
    // Unit arcs sit after the m source arcs, in row-major order.
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = flow.arc_flow[m + std::size_t(i) * n + j];
    return a;
}

}  // namespace linesum
