// Command line front end: instance generation, solving, and oracle checks.
//
// Exit codes: 0 success, 2 input error, 3 verification mismatch.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "linesum/dpsolver.hpp"
#include "linesum/json_io.hpp"
#include "linesum/oracle.hpp"
#include "linesum/random_gen.hpp"

namespace {

using namespace linesum;

void print_stats(const Solution& solution) {
    std::cerr << "stats: elapsed_us=" << solution.stats.elapsed_us << "\n";
    for (std::size_t k = 0; k < solution.stats.explored_states.size(); ++k)
        std::cerr << "stats: explored_states[k=" << k
                  << "]=" << solution.stats.explored_states[k] << "\n";
}

// Strongest oracle that fits the instance: full matrix enumeration below
// m*n <= 20, sequence enumeration below m, n <= 8, otherwise nothing.
enum class OracleKind { Matrix, Sequences, None };

OracleKind pick_oracle(int m, int n) {
    if (std::int64_t(m) * n <= 20) return OracleKind::Matrix;
    if (m <= 8 && n <= 8) return OracleKind::Sequences;
    return OracleKind::None;
}

int cmd_solve(const std::string& input, const std::string& output, std::string mode,
              bool run_check, bool show_stats) {
    const InstanceFile file = load_instance_file(input);
    if (mode == "auto") mode = file.uniform ? "uniform" : "monotone";
    if (mode == "uniform" && !file.uniform)
        throw std::invalid_argument(
            "--mode uniform requires an instance file with \"uniform\": true");

    const Instance inst = to_instance(file);
    const Solution solution = mode == "uniform"
                                  ? solve_uniform(file.m, file.n, file.f.at(0), file.g.at(0))
                                  : solve_monotone(inst);
    const SolutionFile result = make_solution_file(inst, solution);
    if (output.empty())
        std::cout << emit_solution_file(result);
    else
        save_solution_file(result, output);
    std::cerr << "solved: objective=" << solution.objective << " k=" << solution.k
              << " elapsed_us=" << solution.stats.elapsed_us << "\n";
    if (show_stats) print_stats(solution);

    if (run_check) {
        const bool monotone_only = mode == "monotone";
        std::int64_t expected = 0;
        switch (pick_oracle(file.m, file.n)) {
            case OracleKind::Matrix:
                expected = brute_force_matrix(inst, monotone_only).objective;
                break;
            case OracleKind::Sequences:
                expected = brute_force_sequences(inst).objective;
                break;
            case OracleKind::None:
                std::cerr << "warning: instance exceeds oracle bounds "
                             "(m*n <= 20 or m, n <= 8); check skipped\n";
                return 0;
        }
        if (expected != solution.objective) {
            std::cerr << "verification mismatch: solver=" << solution.objective
                      << " oracle=" << expected << "\n";
            return 3;
        }
        std::cerr << "check ok: oracle agrees at " << expected << "\n";
    }
    return 0;
}

int cmd_gen(int m, int n, std::uint64_t seed, std::int32_t cost_range, bool uniform,
            const std::string& output) {
    SplitMix64 rng(seed);
    InstanceFile file;
    if (uniform) {
        const auto f = random_table(rng, n + 1, -cost_range, cost_range);
        const auto g = random_table(rng, m + 1, -cost_range, cost_range);
        file = make_uniform_instance_file(m, n, f, g);
    } else {
        file = make_instance_file(random_instance(m, n, -cost_range, cost_range, seed));
    }
    save_instance_file(file, output);
    std::cerr << "generated: " << m << "x" << n << " seed=" << seed
              << " cost_range=" << cost_range << (uniform ? " uniform" : "") << "\n";
    return 0;
}

int cmd_check(const std::string& input) {
    const InstanceFile file = load_instance_file(input);
    const Instance inst = to_instance(file);
    const bool matrix_fits = std::int64_t(file.m) * file.n <= 20;
    const bool sequences_fit = file.m <= 8 && file.n <= 8;
    if (!matrix_fits && !sequences_fit) {
        std::cerr << "error: instance exceeds every oracle bound "
                     "(need m*n <= 20 or m, n <= 8)\n";
        return 2;
    }

    const Solution solution = solve_monotone(inst);
    std::printf("%-32s %lld\n", "solver (monotone)",
                static_cast<long long>(solution.objective));
    bool agree = true;
    if (matrix_fits) {
        const auto oracle = brute_force_matrix(inst, true);
        std::printf("%-32s %lld\n", "matrix oracle (monotone)",
                    static_cast<long long>(oracle.objective));
        agree = agree && oracle.objective == solution.objective;
        if (file.uniform) {
            const auto all = brute_force_matrix(inst, false);
            std::printf("%-32s %lld\n", "matrix oracle (all matrices)",
                        static_cast<long long>(all.objective));
            agree = agree && all.objective == solution.objective;
        }
    }
    if (sequences_fit) {
        const auto oracle = brute_force_sequences(inst);
        std::printf("%-32s %lld\n", "sequence oracle",
                    static_cast<long long>(oracle.objective));
        agree = agree && oracle.objective == solution.objective;
    }
    std::printf("agreement: %s\n", agree ? "yes" : "NO");
    return agree ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact line sum optimization over (0,1)-matrices"};
    app.require_subcommand(1);

    auto* solve = app.add_subcommand("solve", "solve an instance file");
    std::string solve_input, solve_output;
    std::string mode = "auto";
    bool run_check = false, show_stats = false;
    solve->add_option("-i,--input", solve_input, "instance file (JSON)")->required();
    solve->add_option("-o,--output", solve_output, "solution file (default: stdout)");
    solve->add_option("--mode", mode, "monotone or uniform (default: match the file)")
        ->check(CLI::IsMember({"auto", "monotone", "uniform"}));
    solve->add_flag("--check", run_check, "verify against a brute-force oracle");
    solve->add_flag("--stats", show_stats, "report per-type explored state counts");

    auto* gen = app.add_subcommand("gen", "generate a seeded random instance");
    int gen_m = 0, gen_n = 0;
    std::uint64_t seed = 1;
    std::int32_t cost_range = 20;
    bool gen_uniform = false;
    std::string gen_output;
    gen->add_option("-m,--rows", gen_m, "row count")->required()->check(CLI::Range(1, 1024));
    gen->add_option("-n,--cols", gen_n, "column count")->required()->check(CLI::Range(1, 1024));
    gen->add_option("--seed", seed, "generator seed (default 1)");
    gen->add_option("--cost-range", cost_range, "costs drawn from [-range, range]")
        ->check(CLI::PositiveNumber);
    gen->add_flag("--uniform", gen_uniform, "emit the uniform file shape");
    gen->add_option("-o,--output", gen_output, "output path")->required();

    auto* check = app.add_subcommand("check", "compare solver and oracles");
    std::string check_input;
    check->add_option("-i,--input", check_input, "instance file (JSON)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (solve->parsed())
            return cmd_solve(solve_input, solve_output, mode, run_check, show_stats);
        if (gen->parsed())
            return cmd_gen(gen_m, gen_n, seed, cost_range, gen_uniform, gen_output);
        if (check->parsed()) return cmd_check(check_input);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
