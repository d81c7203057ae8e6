#pragma once

#include <cstdint>
#include <vector>

#include "linesum/sequences.hpp"

namespace linesum {

/// Problem data: m-by-n grid with per-row cost tables f[i] over 0..n and
/// per-column cost tables g[j] over 0..m. Costs are 32-bit signed so any
/// objective sum of m+n terms fits comfortably in 64 bits.
class Instance {
  public:
    Instance(int m, int n,
             std::vector<std::vector<std::int32_t>> f,
             std::vector<std::vector<std::int32_t>> g);

    /// All rows share the table f and all columns share g.
    static Instance uniform(int m, int n,
                            const std::vector<std::int32_t>& f,
                            const std::vector<std::int32_t>& g);

    int rows() const { return m_; }
    int cols() const { return n_; }

    /// Cost of row i (0-based) having sum x, x in 0..n.
    std::int32_t row_cost(int i, int x) const {
        return f_[static_cast<std::size_t>(i)][static_cast<std::size_t>(x)];
    }
    /// Cost of column j (0-based) having sum y, y in 0..m.
    std::int32_t col_cost(int j, int y) const {
        return g_[static_cast<std::size_t>(j)][static_cast<std::size_t>(y)];
    }

    const std::vector<std::vector<std::int32_t>>& row_tables() const { return f_; }
    const std::vector<std::vector<std::int32_t>>& col_tables() const { return g_; }

  private:
    int m_ = 0, n_ = 0;
    std::vector<std::vector<std::int32_t>> f_, g_;
};

/// sum_i f_i(r_i) + sum_j g_j(c_j). Requires r of length m with entries <= n
/// and c of length n with entries <= m.
std::int64_t objective_eval(const Instance& inst,
                            const NonincreasingTuple& r,
                            const NonincreasingTuple& c);

}  // namespace linesum
