#include "linesum/matrix.hpp"

#include <numeric>

namespace linesum {

std::vector<int> row_sums(const BinaryMatrix& a) {
    std::vector<int> r;
    r.reserve(a.size());
    for (const auto& row : a)
        r.push_back(std::accumulate(row.begin(), row.end(), 0));
    return r;
}

std::vector<int> col_sums(const BinaryMatrix& a, int cols) {
    std::vector<int> c(static_cast<std::size_t>(cols), 0);
    for (const auto& row : a)
        for (std::size_t j = 0; j < row.size(); ++j) c[j] += row[j];
    return c;
}

}  // namespace linesum
