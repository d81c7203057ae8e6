#include "linesum/sequences.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace linesum {

NonincreasingTuple::NonincreasingTuple(std::vector<int> entries, int bound)
    : entries_(std::move(entries)), bound_(bound) {
    if (bound_ < 0)
        throw std::invalid_argument("NonincreasingTuple: negative bound");
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] < 0 || entries_[i] > bound_)
            throw std::invalid_argument(
                "NonincreasingTuple: entry " + std::to_string(entries_[i]) +
                " outside [0, " + std::to_string(bound_) + "]");
        if (i > 0 && entries_[i - 1] < entries_[i])
            throw std::invalid_argument("NonincreasingTuple: entries increase at index " +
                                        std::to_string(i));
    }
}

NonincreasingTuple NonincreasingTuple::zeros(int length, int bound) {
    if (length < 0)
        throw std::invalid_argument("NonincreasingTuple::zeros: negative length");
    return NonincreasingTuple(std::vector<int>(static_cast<std::size_t>(length), 0), bound);
}

std::int64_t NonincreasingTuple::sum() const {
    return std::accumulate(entries_.begin(), entries_.end(), std::int64_t{0});
}

bool is_nonincreasing(const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i - 1] < v[i]) return false;
    return true;
}

NonincreasingTuple conjugate(const NonincreasingTuple& c) {
    const int m = c.bound();
    std::vector<int> s(static_cast<std::size_t>(m), 0);
    // c is nonincreasing, so |{j : c_j >= i}| only shrinks as i grows; one
    // backward sweep over c fills all of s.
    int count = c.size();
    for (int i = 1; i <= m; ++i) {
        while (count > 0 && c[count - 1] < i) --count;
        s[static_cast<std::size_t>(i - 1)] = count;
    }
    return NonincreasingTuple(std::move(s), c.size());
}

bool is_majorized(const NonincreasingTuple& r, const NonincreasingTuple& s) {
    if (r.size() != s.size())
        throw std::invalid_argument("is_majorized: length mismatch");
    std::int64_t pr = 0, ps = 0;
    for (int i = 0; i < r.size(); ++i) {
        pr += r[i];
        ps += s[i];
        if (pr > ps) return false;
    }
    return pr == ps;
}

int type_of(const NonincreasingTuple& c) {
    int k = 0;
    for (int i = 0; i < c.size(); ++i)
        if (c[i] != 0 && (i == 0 || c[i] != c[i - 1])) ++k;
    return k;
}

}  // namespace linesum
