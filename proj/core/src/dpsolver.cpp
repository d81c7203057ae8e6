#include "linesum/dpsolver.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <thread>
#include <vector>

#include "linesum/reconstruct.hpp"

namespace linesum {

std::int64_t PathTrace::total() const {
    return std::accumulate(edge_lengths.begin(), edge_lengths.end(), std::int64_t{0});
}

namespace {

// Prefix sums of the column costs: range(v, lo, hi) is the total cost of
// columns lo < j <= hi (1-based) all taking the value v. Precomputed once so
// every edge length is O(1).
class ColumnPrefix {
  public:
    explicit ColumnPrefix(const Instance& inst) : n_(inst.cols()) {
        table_.assign(std::size_t(inst.rows() + 1) * (n_ + 1), 0);
        for (int v = 0; v <= inst.rows(); ++v) {
            std::int64_t acc = 0;
            for (int j = 1; j <= n_; ++j) {
                acc += inst.col_cost(j - 1, v);
                table_[std::size_t(v) * (n_ + 1) + j] = acc;
            }
        }
    }

    std::int64_t range(int value, int lo, int hi) const {
        return table_[std::size_t(value) * (n_ + 1) + hi] -
               table_[std::size_t(value) * (n_ + 1) + lo];
    }

  private:
    int n_;
    std::vector<std::int64_t> table_;
};

std::uint64_t state_hash(const DpState& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (int v : {s.strip, s.strip_len, s.strip_depth, s.row, s.row_sum, s.conj_prefix,
                  s.row_prefix}) {
        h ^= std::uint64_t(std::uint32_t(v));
        h *= 1099511628211ull;
    }
    // final avalanche keeps linear probing short
    h = (h ^ (h >> 30)) * 0xbf58476d1ce4e5b9ull;
    h = (h ^ (h >> 27)) * 0x94d049bb133111ebull;
    return h ^ (h >> 31);
}

// One row layer of the search: an append-only record store with an
// open-addressing index. Records keep the best known distance and the index
// of the predecessor record in the previous layer (-1 for the source), so
// path recovery is a chain of array lookups.
class Layer {
  public:
    struct Record {
        DpState state;
        std::int64_t dist;
        std::int32_t pred;
    };

    Layer() { rehash(64); }

    std::size_t size() const { return records_.size(); }
    const std::vector<Record>& records() const { return records_; }

    // Keep the smaller distance; on ties keep the lexicographically smaller
    // predecessor state, which makes the recovered path independent of the
    // order edges are relaxed in.
    void relax(const DpState& state, std::int64_t dist, std::int32_t pred,
               const Layer* prev) {
        if (2 * (records_.size() + 1) > slots_.size()) rehash(slots_.size() * 2);
        std::size_t pos = state_hash(state) & mask_;
        while (true) {
            const std::int32_t idx = slots_[pos];
            if (idx < 0) {
                slots_[pos] = std::int32_t(records_.size());
                records_.push_back({state, dist, pred});
                return;
            }
            Record& rec = records_[idx];
            if (rec.state == state) {
                if (dist < rec.dist) {
                    rec.dist = dist;
                    rec.pred = pred;
                } else if (dist == rec.dist && pred != rec.pred && prev &&
                           prev->records()[pred].state < prev->records()[rec.pred].state) {
                    rec.pred = pred;
                }
                return;
            }
            pos = (pos + 1) & mask_;
        }
    }

  private:
    void rehash(std::size_t slot_count) {
        slots_.assign(slot_count, -1);
        mask_ = slot_count - 1;
        for (std::size_t i = 0; i < records_.size(); ++i) {
            std::size_t pos = state_hash(records_[i].state) & mask_;
            while (slots_[pos] >= 0) pos = (pos + 1) & mask_;
            slots_[pos] = std::int32_t(i);
        }
    }

    std::vector<Record> records_;
    std::vector<std::int32_t> slots_;  // power-of-two probe table
    std::size_t mask_ = 0;
};

}  // namespace

std::optional<TypeKResult> solve_type_k(const Instance& inst, int k) {
    const int m = inst.rows();
    const int n = inst.cols();
    if (k < 1 || k > std::min(m, n))
        throw std::invalid_argument("solve_type_k: k must be in 1..min(m, n)");
    const ColumnPrefix gpre(inst);

    // layers[i] holds the best known distance to each vertex with row == i.
    // Every edge advances the row by one, so a single sweep in row order
    // relaxes each edge exactly once; negative lengths are fine.
    std::vector<Layer> layers(m + 1);

    // Source edges choose the first strip (t1, d1) and the first row sum
    // r1 <= t1. Later strips need strictly smaller t and strictly larger d,
    // which bounds the usable range here. The edge pays for the t1 < j <= n
    // columns of value 0.
    for (int t1 = k; t1 <= n; ++t1) {
        const std::int64_t len = gpre.range(0, t1, n);
        for (int d1 = 1; d1 <= m - k + 1; ++d1)
            for (int r1 = 0; r1 <= t1; ++r1)
                layers[1].relax(DpState{1, t1, d1, 1, r1, t1, r1}, len, -1, nullptr);
    }

    for (int i = 1; i < m; ++i) {
        const Layer& layer = layers[i];
        Layer& next = layers[i + 1];
        for (std::int32_t idx = 0; idx < std::int32_t(layer.size()); ++idx) {
            const Layer::Record& rec = layer.records()[idx];
            const DpState& s = rec.state;
            // Every outgoing edge pays f_i(r_i) for the row it leaves.
            const std::int64_t base = rec.dist + inst.row_cost(i - 1, s.row_sum);
            if (s.strip <= k && s.row < s.strip_depth) {
                // Interior of a positive strip: the conjugate entry is t_h.
                const int next_S = s.conj_prefix + s.strip_len;
                const int rmax = std::min(s.row_sum, next_S - s.row_prefix);
                for (int r2 = 0; r2 <= rmax; ++r2)
                    next.relax(DpState{s.strip, s.strip_len, s.strip_depth, i + 1, r2,
                                       next_S, s.row_prefix + r2},
                               base, idx, &layer);
            } else if (s.strip < k) {
                // Row i closes strip h < k: pick the next strip and pay for
                // the t_{h+1} < j <= t_h columns of value d_h.
                for (int t2 = std::max(1, k - s.strip); t2 < s.strip_len; ++t2) {
                    const std::int64_t len =
                        base + gpre.range(s.strip_depth, t2, s.strip_len);
                    const int next_S = s.conj_prefix + t2;
                    const int rmax = std::min(s.row_sum, next_S - s.row_prefix);
                    const int dmax = m - (k - s.strip - 1);
                    for (int d2 = s.strip_depth + 1; d2 <= dmax; ++d2)
                        for (int r2 = 0; r2 <= rmax; ++r2)
                            next.relax(DpState{s.strip + 1, t2, d2, i + 1, r2, next_S,
                                               s.row_prefix + r2},
                                       len, idx, &layer);
                }
            } else if (s.strip == k) {
                // Row i == d_k < m closes the last positive strip: pay for
                // the 0 < j <= t_k columns of value d_k, then continue in
                // the zero strip where S stays fixed.
                const std::int64_t len = base + gpre.range(s.strip_depth, 0, s.strip_len);
                const int rmax = std::min(s.row_sum, s.conj_prefix - s.row_prefix);
                for (int r2 = 0; r2 <= rmax; ++r2)
                    next.relax(
                        DpState{k + 1, 0, m, i + 1, r2, s.conj_prefix, s.row_prefix + r2},
                        len, idx, &layer);
            } else {
                // Zero strip interior.
                const int rmax = std::min(s.row_sum, s.conj_prefix - s.row_prefix);
                for (int r2 = 0; r2 <= rmax; ++r2)
                    next.relax(
                        DpState{k + 1, 0, m, i + 1, r2, s.conj_prefix, s.row_prefix + r2},
                        base, idx, &layer);
            }
        }
    }

    // Terminal edges require the majorization totals to close (R_m == S_m).
    // A path still inside strip k must have d_k == m and also pays for the
    // 0 < j <= t_k columns of value m.
    std::optional<std::int64_t> best_total;
    std::int32_t best_index = -1;
    for (std::int32_t idx = 0; idx < std::int32_t(layers[m].size()); ++idx) {
        const Layer::Record& rec = layers[m].records()[idx];
        const DpState& s = rec.state;
        if (s.row_prefix != s.conj_prefix) continue;
        std::int64_t total = rec.dist + inst.row_cost(m - 1, s.row_sum);
        if (s.strip <= k) {
            if (s.strip != k || s.strip_depth != m) continue;
            total += gpre.range(m, 0, s.strip_len);
        }
        if (!best_total || total < *best_total ||
            (total == *best_total && s < layers[m].records()[best_index].state)) {
            best_total = total;
            best_index = idx;
        }
    }

    std::uint64_t explored = 0;
    for (const auto& layer : layers) explored += layer.size();
    if (!best_total) return std::nullopt;

    std::vector<DpState> path(m);
    std::int32_t cursor = best_index;
    for (int i = m; i >= 1; --i) {
        const Layer::Record& rec = layers[i].records()[cursor];
        path[i - 1] = rec.state;
        cursor = rec.pred;
    }

    std::vector<int> rvec(m);
    for (int i = 0; i < m; ++i) rvec[i] = path[i].row_sum;
    StripEncoding enc;
    enc.k = k;
    enc.t.assign(k + 2, 0);
    enc.d.assign(k + 2, 0);
    enc.t[0] = n;
    enc.d[k + 1] = m;
    for (const auto& s : path)
        if (s.strip <= k) {
            enc.t[s.strip] = s.strip_len;
            enc.d[s.strip] = s.strip_depth;
        }

    TypeKResult result;
    result.objective = *best_total;
    result.r = NonincreasingTuple(std::move(rvec), n);
    result.c = decode_strips(enc, m, n).c;
    result.path = std::move(path);
    result.explored_states = explored;
    return result;
}

PathTrace trace_strip_path(const Instance& inst, const StripEncoding& enc,
                           const NonincreasingTuple& r) {
    const int m = inst.rows();
    const int n = inst.cols();
    validate_strips(enc, m, n);
    const int k = enc.k;
    if (k < 1)
        throw std::invalid_argument("trace_strip_path: the type-0 tuple has no path graph");
    if (r.size() != m || r.bound() > n)
        throw std::invalid_argument("trace_strip_path: r does not fit the instance");
    const DecodedStrips decoded = decode_strips(enc, m, n);
    if (!is_majorized(r, decoded.s))
        throw std::invalid_argument("trace_strip_path: r is not majorized by the conjugate");

    const ColumnPrefix gpre(inst);
    PathTrace trace;
    trace.vertices.reserve(m);
    trace.edge_lengths.reserve(m + 1);
    trace.edge_lengths.push_back(gpre.range(0, enc.t[1], n));

    int strip = 1;
    int S = 0, R = 0;
    for (int i = 1; i <= m; ++i) {
        while (i > enc.d[strip]) ++strip;  // d_{h-1} < i <= d_h
        S += enc.t[strip];                 // t[k+1] == 0 covers the zero strip
        R += r[i - 1];
        trace.vertices.push_back({strip, enc.t[strip], enc.d[strip], i, r[i - 1], S, R});

        std::int64_t len = inst.row_cost(i - 1, r[i - 1]);
        if (i == m) {
            if (strip <= k) len += gpre.range(m, 0, enc.t[k]);
        } else if (i == enc.d[strip] && strip < k) {
            len += gpre.range(enc.d[strip], enc.t[strip + 1], enc.t[strip]);
        } else if (i == enc.d[strip] && strip == k) {
            len += gpre.range(enc.d[strip], 0, enc.t[k]);
        }
        trace.edge_lengths.push_back(len);
    }
    return trace;
}

Solution solve_monotone(const Instance& inst, const SolverOptions& options) {
    const auto start = std::chrono::steady_clock::now();
    const int m = inst.rows();
    const int n = inst.cols();
    const int kmax = std::min(m, n);

    // Type-0 baseline: every line sum is zero.
    Solution best;
    best.k = 0;
    best.r = NonincreasingTuple::zeros(m, n);
    best.c = NonincreasingTuple::zeros(n, m);
    best.objective = objective_eval(inst, best.r, best.c);
    best.stats.explored_states.assign(kmax + 1, 0);

    std::vector<std::optional<TypeKResult>> results(kmax + 1);
    const unsigned hardware = std::thread::hardware_concurrency();
    const bool pooled = options.parallel && kmax >= 2 && hardware > 1 &&
                        std::int64_t(m) * n >= 32;
    if (pooled) {
        std::atomic<int> next{1};
        std::atomic<bool> failed{false};
        std::exception_ptr error;
        std::mutex error_mutex;
        const unsigned workers = std::min<unsigned>(hardware, unsigned(kmax));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&] {
                for (int k = next.fetch_add(1); k <= kmax; k = next.fetch_add(1)) {
                    if (failed.load()) return;
                    try {
                        results[k] = solve_type_k(inst, k);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!error) error = std::current_exception();
                        failed.store(true);
                        return;
                    }
                }
            });
        for (auto& worker : pool) worker.join();
        if (error) std::rethrow_exception(error);
    } else {
        for (int k = 1; k <= kmax; ++k) results[k] = solve_type_k(inst, k);
    }

    // Ascending scan with strict improvement: ties keep the smaller type.
    for (int k = 1; k <= kmax; ++k) {
        if (!results[k]) continue;
        best.stats.explored_states[k] = results[k]->explored_states;
        if (results[k]->objective < best.objective) {
            best.objective = results[k]->objective;
            best.r = results[k]->r;
            best.c = results[k]->c;
            best.k = k;
        }
    }

    best.matrix = gale_ryser(best.r, best.c);
    if (row_sums(best.matrix) != best.r.entries() ||
        col_sums(best.matrix, n) != best.c.entries() ||
        objective_eval(inst, best.r, best.c) != best.objective)
        throw std::logic_error("solve_monotone: solution failed self-check");

    best.stats.elapsed_us = std::chrono::duration_cast<std::chrono::microseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
    return best;
}

Solution solve_uniform(int m, int n, const std::vector<std::int32_t>& f,
                       const std::vector<std::int32_t>& g, const SolverOptions& options) {
    return solve_monotone(Instance::uniform(m, n, f, g), options);
}

}  // namespace linesum
