#pragma once

#include <vector>

#include "linesum/sequences.hpp"

namespace linesum {

/// Boundary description of a nonincreasing tuple c with entries <= m, viewed
/// as one left-aligned strip per distinct nonzero value. d lists 0, then the
/// distinct values in increasing order, then m; t[h] counts the components of
/// c that are >= d[h]. A tuple of type k and its conjugate s satisfy
///   c = (d[k]^{t[k]-t[k+1]}, ..., d[0]^{t[0]-t[1]})
///   s = (t[1]^{d[1]-d[0]}, ..., t[k+1]^{d[k+1]-d[k]})
struct StripEncoding {
    int k = 0;           // number of distinct nonzero values of c
    std::vector<int> t;  // t[0..k+1]: n = t[0] >= t[1] > ... > t[k] > t[k+1] = 0
    std::vector<int> d;  // d[0..k+1]: 0 = d[0] < d[1] < ... < d[k] <= d[k+1] = m

    friend bool operator==(const StripEncoding&, const StripEncoding&) = default;
};

/// Throws std::invalid_argument unless e is a valid encoding of some
/// m-bounded nonincreasing tuple of length n.
void validate_strips(const StripEncoding& e, int m, int n);

/// The unique encoding whose decode reproduces c.
StripEncoding encode_strips(const NonincreasingTuple& c);

struct DecodedStrips {
    NonincreasingTuple c;  // length n, entries <= m
    NonincreasingTuple s;  // conjugate of c: length m, entries <= n
};

DecodedStrips decode_strips(const StripEncoding& e, int m, int n);

}  // namespace linesum
