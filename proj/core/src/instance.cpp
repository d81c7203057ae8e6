#include "linesum/instance.hpp"

#include <stdexcept>
#include <string>

namespace linesum {

Instance::Instance(int m, int n,
                   std::vector<std::vector<std::int32_t>> f,
                   std::vector<std::vector<std::int32_t>> g)
    : m_(m), n_(n), f_(std::move(f)), g_(std::move(g)) {
    if (m_ < 0 || n_ < 0)
        throw std::invalid_argument("Instance: negative dimensions");
    if (static_cast<int>(f_.size()) != m_)
        throw std::invalid_argument("Instance: expected " + std::to_string(m_) +
                                    " row cost tables, got " + std::to_string(f_.size()));
    if (static_cast<int>(g_.size()) != n_)
        throw std::invalid_argument("Instance: expected " + std::to_string(n_) +
                                    " column cost tables, got " + std::to_string(g_.size()));
    for (const auto& table : f_)
        if (static_cast<int>(table.size()) != n_ + 1)
            throw std::invalid_argument("Instance: every f table needs n+1 entries");
    for (const auto& table : g_)
        if (static_cast<int>(table.size()) != m_ + 1)
            throw std::invalid_argument("Instance: every g table needs m+1 entries");
}

Instance Instance::uniform(int m, int n,
                           const std::vector<std::int32_t>& f,
                           const std::vector<std::int32_t>& g) {
    if (static_cast<int>(f.size()) != n + 1)
        throw std::invalid_argument("Instance::uniform: f table needs n+1 entries");
    if (static_cast<int>(g.size()) != m + 1)
        throw std::invalid_argument("Instance::uniform: g table needs m+1 entries");
    return Instance(m, n,
                    std::vector<std::vector<std::int32_t>>(static_cast<std::size_t>(m), f),
                    std::vector<std::vector<std::int32_t>>(static_cast<std::size_t>(n), g));
}

std::int64_t objective_eval(const Instance& inst,
                            const NonincreasingTuple& r,
                            const NonincreasingTuple& c) {
    if (r.size() != inst.rows() || r.bound() > inst.cols())
        throw std::invalid_argument("objective_eval: r does not fit the instance");
    if (c.size() != inst.cols() || c.bound() > inst.rows())
        throw std::invalid_argument("objective_eval: c does not fit the instance");
    std::int64_t total = 0;
    for (int i = 0; i < inst.rows(); ++i) total += inst.row_cost(i, r[i]);
    for (int j = 0; j < inst.cols(); ++j) total += inst.col_cost(j, c[j]);
    return total;
}

}  // namespace linesum
