#include "linesum/oracle.hpp"

#include <limits>
#include <stdexcept>

namespace linesum {

MatrixOracleResult brute_force_matrix(const Instance& inst, bool monotone_only) {
    const int m = inst.rows();
    const int n = inst.cols();
    const int bits = m * n;
    if (bits > 20)
        throw std::invalid_argument("brute_force_matrix: refusing m*n > 20");

    MatrixOracleResult best;
    best.objective = std::numeric_limits<std::int64_t>::max();
    std::vector<int> rsum(m), csum(n);

    // Ascending masks with bit 0 of the mask holding the LAST matrix entry,
    // so mask order is lexicographic order of row-major matrices and the
    // first strict improvement is the lexicographically smallest witness.
    for (std::uint32_t mask = 0; mask < (1u << bits); ++mask) {
        std::fill(rsum.begin(), rsum.end(), 0);
        std::fill(csum.begin(), csum.end(), 0);
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                if (mask >> (bits - 1 - (i * n + j)) & 1u) {
                    ++rsum[i];
                    ++csum[j];
                }
        if (monotone_only && (!is_nonincreasing(rsum) || !is_nonincreasing(csum)))
            continue;
        std::int64_t value = 0;
        for (int i = 0; i < m; ++i) value += inst.row_cost(i, rsum[i]);
        for (int j = 0; j < n; ++j) value += inst.col_cost(j, csum[j]);
        if (value < best.objective) {
            best.objective = value;
            best.witness.assign(m, std::vector<int>(n, 0));
            for (int i = 0; i < m; ++i)
                for (int j = 0; j < n; ++j)
                    best.witness[i][j] = mask >> (bits - 1 - (i * n + j)) & 1u;
        }
    }
    return best;
}

namespace {

class SequenceSearch {
  public:
    explicit SequenceSearch(const Instance& inst) : inst_(inst) {}

    SequenceOracleResult run() {
        best_.objective = std::numeric_limits<std::int64_t>::max();
        col_.assign(inst_.cols(), 0);
        descend_columns(0, inst_.rows());
        return std::move(best_);
    }

  private:
    // Enumerate nonincreasing c; entries tried largest-first so the search
    // order is fixed and the first strict improvement wins.
    void descend_columns(int pos, int limit) {
        if (pos == inst_.cols()) {
            try_column_tuple();
            return;
        }
        for (int v = limit; v >= 0; --v) {
            col_[pos] = v;
            descend_columns(pos + 1, v);
        }
    }

    void try_column_tuple() {
        const NonincreasingTuple c(col_, inst_.rows());
        std::int64_t gval = 0;
        for (int j = 0; j < inst_.cols(); ++j) gval += inst_.col_cost(j, c[j]);
        conj_ = conjugate(c).entries();
        sprefix_.assign(conj_.size() + 1, 0);
        for (std::size_t i = 0; i < conj_.size(); ++i)
            sprefix_[i + 1] = sprefix_[i] + conj_[i];
        row_.assign(inst_.rows(), 0);
        descend_rows(0, inst_.cols(), 0, gval, c);
    }

    // Enumerate nonincreasing r with every prefix dominated by the conjugate
    // prefix; equality of the totals is forced at the last position.
    void descend_rows(int pos, int limit, std::int64_t prefix, std::int64_t gval,
                      const NonincreasingTuple& c) {
        const int m = inst_.rows();
        if (pos == m) {
            if (prefix != sprefix_[m]) return;
            std::int64_t value = gval;
            for (int i = 0; i < m; ++i) value += inst_.row_cost(i, row_[i]);
            if (value < best_.objective) {
                best_.objective = value;
                best_.r = NonincreasingTuple(row_, inst_.cols());
                best_.c = c;
            }
            return;
        }
        const std::int64_t deficit = sprefix_[m] - prefix;
        for (int v = std::min<std::int64_t>(limit, sprefix_[pos + 1] - prefix); v >= 0; --v) {
            // Even taking v for all remaining rows must reach the total.
            if (std::int64_t(v) * (m - pos) < deficit) break;
            row_[pos] = v;
            descend_rows(pos + 1, v, prefix + v, gval, c);
        }
    }

    const Instance& inst_;
    SequenceOracleResult best_;
    std::vector<int> col_, row_, conj_;
    std::vector<std::int64_t> sprefix_;
};

}  // namespace

SequenceOracleResult brute_force_sequences(const Instance& inst) {
    if (inst.rows() > 8 || inst.cols() > 8)
        throw std::invalid_argument("brute_force_sequences: refusing m > 8 or n > 8");
    SequenceSearch search(inst);
    SequenceOracleResult result = search.run();
    if (result.objective == std::numeric_limits<std::int64_t>::max())
        throw std::logic_error("brute_force_sequences: empty search space");
    return result;
}

}  // namespace linesum
