#include <stdexcept>

#include "doctest.h"
#include "linesum/json_io.hpp"
#include "linesum/random_gen.hpp"
#include "test_util.hpp"

using namespace linesum;

TEST_CASE("instance files round trip") {
    const InstanceFile file = make_instance_file(random_instance(3, 4, -9, 9, 5));
    CHECK(parse_instance_file(emit_instance_file(file)) == file);

    const InstanceFile uniform = make_uniform_instance_file(2, 3, {1, 2, 3, 4}, {-1, 0, 2});
    CHECK(parse_instance_file(emit_instance_file(uniform)) == uniform);
    CHECK(to_instance(uniform).rows() == 2);
    CHECK(to_instance(uniform).row_cost(1, 3) == 4);
}

TEST_CASE("emission is deterministic") {
    const InstanceFile file = make_instance_file(random_instance(2, 2, -5, 5, 42));
    CHECK(emit_instance_file(file) == emit_instance_file(file));
}

TEST_CASE("instance parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_instance_file("not json"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance_file("[1, 2]"), std::invalid_argument);
    CHECK_THROWS_AS(parse_instance_file(R"({"m": 1, "n": 1})"), std::invalid_argument);
    // dimensions must be positive
    CHECK_THROWS_AS(parse_instance_file(R"({"m": 0, "n": 1, "f": [], "g": [[0, 0]]})"),
                    std::invalid_argument);
    // table length off by one
    CHECK_THROWS_AS(parse_instance_file(R"({"m": 1, "n": 1, "f": [[0]], "g": [[0, 0]]})"),
                    std::invalid_argument);
    // cost outside the 32-bit range
    CHECK_THROWS_AS(
        parse_instance_file(R"({"m": 1, "n": 1, "f": [[0, 3000000000]], "g": [[0, 0]]})"),
        std::invalid_argument);
    // uniform shape wants flat tables
    CHECK_THROWS_AS(
        parse_instance_file(R"({"m": 1, "n": 1, "uniform": true, "f": [[0, 0]], "g": [0, 0]})"),
        std::invalid_argument);
    // costs must be integers
    CHECK_THROWS_AS(
        parse_instance_file(R"({"m": 1, "n": 1, "f": [[0, 0.5]], "g": [[0, 0]]})"),
        std::invalid_argument);
    // uniform must be a boolean
    CHECK_THROWS_AS(
        parse_instance_file(R"({"m": 1, "n": 1, "uniform": 1, "f": [0, 0], "g": [0, 0]})"),
        std::invalid_argument);
}

TEST_CASE("solution files round trip and self-verify") {
    const Instance inst = testutil::golden_4x4();
    const Solution solution = solve_monotone(inst);
    const SolutionFile file = make_solution_file(inst, solution);
    CHECK(file.objective == 0);
    CHECK(parse_solution_file(emit_solution_file(file)) == file);

    Solution corrupt = solution;
    corrupt.objective += 1;
    CHECK_THROWS_AS(make_solution_file(inst, corrupt), std::logic_error);

    Solution wrong_matrix = solution;
    for (auto& row : wrong_matrix.matrix)
        for (auto& cell : row) cell = 1 - cell;
    CHECK_THROWS_AS(make_solution_file(inst, wrong_matrix), std::logic_error);
}

TEST_CASE("solution parsing rejects malformed input") {
    CHECK_THROWS_AS(parse_solution_file("{"), std::invalid_argument);
    CHECK_THROWS_AS(parse_solution_file(R"({"objective": 1})"), std::invalid_argument);
}
