#pragma once

#include <vector>

namespace linesum {

/// m rows of n entries, each 0 or 1.
using BinaryMatrix = std::vector<std::vector<int>>;

std::vector<int> row_sums(const BinaryMatrix& a);

/// Column sums; `cols` disambiguates the width when the matrix has no rows.
std::vector<int> col_sums(const BinaryMatrix& a, int cols);

}  // namespace linesum
