#pragma once

#include <cstdint>
#include <vector>

namespace linesum {

/// A nonincreasing sequence of nonnegative integers with a per-entry upper
/// bound. Row sum tuples have length m and bound n; column sum tuples have
/// length n and bound m. Invariants are checked at construction, so
/// downstream code may assume them.
class NonincreasingTuple {
  public:
    NonincreasingTuple() = default;
    NonincreasingTuple(std::vector<int> entries, int bound);

    static NonincreasingTuple zeros(int length, int bound);

    int size() const { return static_cast<int>(entries_.size()); }
    int bound() const { return bound_; }
    int operator[](int i) const { return entries_[i]; }
    const std::vector<int>& entries() const { return entries_; }
    std::int64_t sum() const;

    auto begin() const { return entries_.begin(); }
    auto end() const { return entries_.end(); }

    friend bool operator==(const NonincreasingTuple&,
                           const NonincreasingTuple&) = default;

  private:
    std::vector<int> entries_;
    int bound_ = 0;
};

bool is_nonincreasing(const std::vector<int>& v);

/// Conjugate of c: s_i = |{j : c_j >= i}| for i = 1..c.bound(). The result
/// has length c.bound() and bound c.size(); conjugation preserves the sum
/// and is an involution.
NonincreasingTuple conjugate(const NonincreasingTuple& c);

/// True iff every prefix sum of r is at most the corresponding prefix sum
/// of s and the totals are equal. Lengths must match.
bool is_majorized(const NonincreasingTuple& r, const NonincreasingTuple& s);

/// Number of distinct nonzero values; preserved under conjugation.
int type_of(const NonincreasingTuple& c);

}  // namespace linesum
