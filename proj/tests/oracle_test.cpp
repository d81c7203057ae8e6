#include <stdexcept>

#include "doctest.h"
#include "linesum/oracle.hpp"
#include "linesum/random_gen.hpp"
#include "test_util.hpp"

using namespace linesum;
using testutil::tuple;

TEST_CASE("both oracles find zero on the golden instance") {
    const Instance inst = testutil::golden_4x4();
    CHECK(brute_force_matrix(inst, true).objective == 0);
    CHECK(brute_force_matrix(inst, false).objective == 0);
    const SequenceOracleResult seq = brute_force_sequences(inst);
    CHECK(seq.objective == 0);
    CHECK(objective_eval(inst, seq.r, seq.c) == 0);
    // the golden sums are among the optima
    CHECK(objective_eval(inst, tuple({3, 3, 3, 1}, 4), tuple({3, 3, 2, 2}, 4)) == 0);
}

TEST_CASE("zero costs give the all-zero lexicographic witness") {
    const Instance inst = Instance::uniform(2, 3, {0, 0, 0, 0}, {0, 0, 0});
    const MatrixOracleResult res = brute_force_matrix(inst, true);
    CHECK(res.objective == 0);
    CHECK(res.witness == BinaryMatrix(2, std::vector<int>(3, 0)));
    CHECK(brute_force_sequences(inst).objective == 0);
}

TEST_CASE("the witness realizes the reported objective") {
    for (int seed = 1; seed <= 10; ++seed) {
        SplitMix64 rng(std::uint64_t(seed) * 29);
        const int m = 1 + int(rng.next_below(3));
        const int n = 1 + int(rng.next_below(4));
        const Instance inst = random_instance(m, n, -15, 15, rng.next());
        const MatrixOracleResult res = brute_force_matrix(inst, true);
        std::int64_t value = 0;
        const auto rs = row_sums(res.witness);
        const auto cs = col_sums(res.witness, n);
        for (int i = 0; i < m; ++i) value += inst.row_cost(i, rs[i]);
        for (int j = 0; j < n; ++j) value += inst.col_cost(j, cs[j]);
        CHECK(value == res.objective);
        CHECK(is_nonincreasing(rs));
        CHECK(is_nonincreasing(cs));
    }
}

TEST_CASE("monotone and unrestricted enumeration agree when uniform") {
    for (int seed = 1; seed <= 15; ++seed) {
        SplitMix64 rng(std::uint64_t(seed) * 31);
        const int m = 1 + int(rng.next_below(3));
        const int n = 1 + int(rng.next_below(4));
        const Instance inst = random_uniform_instance(m, n, -20, 20, rng.next());
        CHECK(brute_force_matrix(inst, true).objective ==
              brute_force_matrix(inst, false).objective);
    }
}

TEST_CASE("the two oracles agree on seeded instances") {
    for (int seed = 1; seed <= 40; ++seed) {
        SplitMix64 rng(std::uint64_t(seed) * 37);
        int m = 1 + int(rng.next_below(5));
        int n = 1 + int(rng.next_below(5));
        if (m * n > 20) n = 20 / m;  // keep the matrix oracle applicable
        const Instance inst = random_instance(m, n, -20, 20, rng.next());
        CHECK(brute_force_sequences(inst).objective ==
              brute_force_matrix(inst, true).objective);
    }
}

TEST_CASE("oracle bounds are enforced") {
    CHECK_THROWS_AS(brute_force_matrix(random_instance(3, 7, 0, 1, 1), true),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_sequences(random_instance(9, 2, 0, 1, 1)),
                    std::invalid_argument);
    CHECK_THROWS_AS(brute_force_sequences(random_instance(2, 9, 0, 1, 1)),
                    std::invalid_argument);
}
