#include "linesum/strips.hpp"

#include <stdexcept>
#include <string>

namespace linesum {

void validate_strips(const StripEncoding& e, int m, int n) {
    const int k = e.k;
    if (m < 0 || n < 0)
        throw std::invalid_argument("StripEncoding: negative dimensions");
    if (k < 0) throw std::invalid_argument("StripEncoding: negative type");
    if (static_cast<int>(e.t.size()) != k + 2 || static_cast<int>(e.d.size()) != k + 2)
        throw std::invalid_argument("StripEncoding: t and d must have k+2 entries");
    if (e.t.front() != n || e.t.back() != 0)
        throw std::invalid_argument("StripEncoding: t boundary values must be (n, ..., 0)");
    if (e.d.front() != 0 || e.d.back() != m)
        throw std::invalid_argument("StripEncoding: d boundary values must be (0, ..., m)");
    if (e.t[0] < e.t[1])
        throw std::invalid_argument("StripEncoding: t[1] exceeds t[0]");
    for (int h = 1; h <= k; ++h)
        if (e.t[h] <= e.t[h + 1])
            throw std::invalid_argument("StripEncoding: t must strictly decrease from t[1]");
    for (int h = 0; h < k; ++h)
        if (e.d[h] >= e.d[h + 1])
            throw std::invalid_argument("StripEncoding: d must strictly increase up to d[k]");
    if (k > 0 && e.d[k] > m)
        throw std::invalid_argument("StripEncoding: d[k] exceeds m");
}

StripEncoding encode_strips(const NonincreasingTuple& c) {
    const int n = c.size();
    const int m = c.bound();
    StripEncoding e;
    e.k = type_of(c);
    e.t.assign(static_cast<std::size_t>(e.k) + 2, 0);
    e.d.assign(static_cast<std::size_t>(e.k) + 2, 0);
    e.t[0] = n;
    e.d[static_cast<std::size_t>(e.k) + 1] = m;
    // c lists its distinct nonzero values as runs in decreasing order. The
    // run of value d[h] ends where entries drop below it, so t[h] (count of
    // entries >= d[h]) is the run's end position.
    int h = e.k;
    int j = 0;
    while (j < n && c[j] > 0) {
        int end = j;
        while (end < n && c[end] == c[j]) ++end;
        e.d[static_cast<std::size_t>(h)] = c[j];
        e.t[static_cast<std::size_t>(h)] = end;
        --h;
        j = end;
    }
    return e;
}

DecodedStrips decode_strips(const StripEncoding& e, int m, int n) {
    validate_strips(e, m, n);
    std::vector<int> c;
    c.reserve(static_cast<std::size_t>(n));
    for (int h = e.k; h >= 0; --h)
        c.insert(c.end(), static_cast<std::size_t>(e.t[h] - e.t[h + 1]), e.d[h]);
    std::vector<int> s;
    s.reserve(static_cast<std::size_t>(m));
    for (int h = 0; h <= e.k; ++h)
        s.insert(s.end(), static_cast<std::size_t>(e.d[h + 1] - e.d[h]), e.t[h + 1]);
    return {NonincreasingTuple(std::move(c), m), NonincreasingTuple(std::move(s), n)};
}

}  // namespace linesum
