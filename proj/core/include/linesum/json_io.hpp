#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "linesum/dpsolver.hpp"
#include "linesum/instance.hpp"
#include "linesum/matrix.hpp"

namespace linesum {

/// On-disk problem description. Monotone shape: "f" and "g" are lists of
/// per-line cost tables. Uniform shape ("uniform": true): "f" and "g" are
/// single shared tables of n+1 and m+1 values.
struct InstanceFile {
    int m = 0;
    int n = 0;
    bool uniform = false;
    std::vector<std::vector<std::int32_t>> f;  // uniform shape: one table
    std::vector<std::vector<std::int32_t>> g;

    friend bool operator==(const InstanceFile&, const InstanceFile&) = default;
};

InstanceFile parse_instance_file(const std::string& text);
InstanceFile load_instance_file(const std::string& path);
std::string emit_instance_file(const InstanceFile& file);
void save_instance_file(const InstanceFile& file, const std::string& path);

/// Expands the uniform shape into per-line tables.
Instance to_instance(const InstanceFile& file);

InstanceFile make_instance_file(const Instance& inst);
InstanceFile make_uniform_instance_file(int m, int n,
                                        const std::vector<std::int32_t>& f,
                                        const std::vector<std::int32_t>& g);

/// On-disk result: the optimum, the matrix realizing it, and solver
/// counters. All fields are integers.
struct SolutionFile {
    std::int64_t objective = 0;
    int k = 0;
    std::vector<int> row_sums;
    std::vector<int> col_sums;
    BinaryMatrix matrix;
    std::vector<std::uint64_t> explored_states;  // per type, index 0 = type 0
    std::int64_t elapsed_us = 0;

    friend bool operator==(const SolutionFile&, const SolutionFile&) = default;
};

/// Packages a solver result, re-verifying that the matrix sums and the
/// objective are mutually consistent before anything is written.
SolutionFile make_solution_file(const Instance& inst, const Solution& solution);

std::string emit_solution_file(const SolutionFile& file);
SolutionFile parse_solution_file(const std::string& text);
void save_solution_file(const SolutionFile& file, const std::string& path);

}  // namespace linesum
