#include "linesum/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace linesum {

namespace {

using nlohmann::json;

std::int32_t checked_cost(const json& value, const char* where) {
    if (!value.is_number_integer())
        throw std::invalid_argument(std::string(where) + ": costs must be integers");
    const std::int64_t v = value.get<std::int64_t>();
    if (v < std::numeric_limits<std::int32_t>::min() ||
        v > std::numeric_limits<std::int32_t>::max())
        throw std::invalid_argument(std::string(where) +
                                    ": cost outside the signed 32-bit range");
    return std::int32_t(v);
}

std::vector<std::int32_t> parse_table(const json& value, int expected, const char* where) {
    if (!value.is_array() || int(value.size()) != expected)
        throw std::invalid_argument(std::string(where) + ": expected a table of " +
                                    std::to_string(expected) + " integers");
    std::vector<std::int32_t> table;
    table.reserve(expected);
    for (const auto& entry : value) table.push_back(checked_cost(entry, where));
    return table;
}

int parse_dim(const json& value, const char* name) {
    if (!value.is_number_integer() || value.get<std::int64_t>() < 1 ||
        value.get<std::int64_t>() > 1'000'000)
        throw std::invalid_argument(std::string(name) + " must be a positive integer");
    return value.get<int>();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::invalid_argument("cannot write " + path);
    out << text;
    if (!out) throw std::invalid_argument("write to " + path + " failed");
}

json parse_json(const std::string& text) {
    json parsed = json::parse(text, nullptr, false);
    if (parsed.is_discarded()) throw std::invalid_argument("malformed JSON");
    return parsed;
}

}  // namespace

InstanceFile parse_instance_file(const std::string& text) {
    const json root = parse_json(text);
    if (!root.is_object()) throw std::invalid_argument("instance: expected a JSON object");
    if (!root.contains("m") || !root.contains("n") || !root.contains("f") ||
        !root.contains("g"))
        throw std::invalid_argument("instance: requires fields m, n, f, g");

    InstanceFile file;
    file.m = parse_dim(root.at("m"), "m");
    file.n = parse_dim(root.at("n"), "n");
    if (root.contains("uniform") && !root.at("uniform").is_boolean())
        throw std::invalid_argument("instance: uniform must be a boolean");
    file.uniform = root.value("uniform", false);

    const json& f = root.at("f");
    const json& g = root.at("g");
    if (file.uniform) {
        file.f.push_back(parse_table(f, file.n + 1, "f"));
        file.g.push_back(parse_table(g, file.m + 1, "g"));
    } else {
        if (!f.is_array() || int(f.size()) != file.m)
            throw std::invalid_argument("instance: f must list one table per row");
        if (!g.is_array() || int(g.size()) != file.n)
            throw std::invalid_argument("instance: g must list one table per column");
        for (const auto& table : f) file.f.push_back(parse_table(table, file.n + 1, "f"));
        for (const auto& table : g) file.g.push_back(parse_table(table, file.m + 1, "g"));
    }
    return file;
}

InstanceFile load_instance_file(const std::string& path) {
    return parse_instance_file(read_file(path));
}

std::string emit_instance_file(const InstanceFile& file) {
    json root;
    root["m"] = file.m;
    root["n"] = file.n;
    if (file.uniform) {
        root["uniform"] = true;
        root["f"] = file.f.at(0);
        root["g"] = file.g.at(0);
    } else {
        root["f"] = file.f;
        root["g"] = file.g;
    }
    return root.dump(2) + "\n";
}

void save_instance_file(const InstanceFile& file, const std::string& path) {
    write_file(path, emit_instance_file(file));
}

Instance to_instance(const InstanceFile& file) {
    if (file.uniform) return Instance::uniform(file.m, file.n, file.f.at(0), file.g.at(0));
    return Instance(file.m, file.n, file.f, file.g);
}

InstanceFile make_instance_file(const Instance& inst) {
    InstanceFile file;
    file.m = inst.rows();
    file.n = inst.cols();
    file.uniform = false;
    file.f = inst.row_tables();
    file.g = inst.col_tables();
    return file;
}

InstanceFile make_uniform_instance_file(int m, int n,
                                        const std::vector<std::int32_t>& f,
                                        const std::vector<std::int32_t>& g) {
    Instance::uniform(m, n, f, g);  // validates the table lengths
    InstanceFile file;
    file.m = m;
    file.n = n;
    file.uniform = true;
    file.f.push_back(f);
    file.g.push_back(g);
    return file;
}

SolutionFile make_solution_file(const Instance& inst, const Solution& solution) {
    if (row_sums(solution.matrix) != solution.r.entries() ||
        col_sums(solution.matrix, inst.cols()) != solution.c.entries() ||
        objective_eval(inst, solution.r, solution.c) != solution.objective)
        throw std::logic_error("solution is not self-consistent");
    SolutionFile file;
    file.objective = solution.objective;
    file.k = solution.k;
    file.row_sums = solution.r.entries();
    file.col_sums = solution.c.entries();
    file.matrix = solution.matrix;
    file.explored_states = solution.stats.explored_states;
    file.elapsed_us = solution.stats.elapsed_us;
    return file;
}

std::string emit_solution_file(const SolutionFile& file) {
    json root;
    root["objective"] = file.objective;
    root["k"] = file.k;
    root["row_sums"] = file.row_sums;
    root["col_sums"] = file.col_sums;
    root["matrix"] = file.matrix;
    root["stats"]["explored_states"] = file.explored_states;
    root["stats"]["elapsed_us"] = file.elapsed_us;
    return root.dump(2) + "\n";
}

SolutionFile parse_solution_file(const std::string& text) {
    const json root = parse_json(text);
    if (!root.is_object()) throw std::invalid_argument("solution: expected a JSON object");
    SolutionFile file;
    try {
        file.objective = root.at("objective").get<std::int64_t>();
        file.k = root.at("k").get<int>();
        file.row_sums = root.at("row_sums").get<std::vector<int>>();
        file.col_sums = root.at("col_sums").get<std::vector<int>>();
        file.matrix = root.at("matrix").get<BinaryMatrix>();
        if (root.contains("stats")) {
            file.explored_states =
                root.at("stats").value("explored_states", std::vector<std::uint64_t>{});
            file.elapsed_us = root.at("stats").value("elapsed_us", std::int64_t{0});
        }
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("solution: ") + e.what());
    }
    return file;
}

void save_solution_file(const SolutionFile& file, const std::string& path) {
    write_file(path, emit_solution_file(file));
}

}  // namespace linesum
