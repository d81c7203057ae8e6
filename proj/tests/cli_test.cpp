// End-to-end tests driving the installed command line binary.

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "linesum/json_io.hpp"

namespace fs = std::filesystem;
using namespace linesum;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::string name = (fs::temp_directory_path() / "linesum_cli_XXXXXX").string();
        REQUIRE(mkdtemp(name.data()) != nullptr);
        path = name;
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

int run(const std::string& args) {
    const std::string cmd = std::string(LINESUM_CLI_PATH) + " " + args;
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    REQUIRE(out.good());
}

const char* kGoldenUniform = R"({
  "m": 4, "n": 4, "uniform": true,
  "f": [9, 0, 1, 0, 9],
  "g": [36, 4, 0, 0, 4]
})";

}  // namespace

TEST_CASE("gen is deterministic byte for byte") {
    TempDir dir;
    const std::string a = dir.file("a.json"), b = dir.file("b.json");
    CHECK(run("gen -m 4 -n 4 --seed 1 -o " + a + " 2>/dev/null") == 0);
    CHECK(run("gen -m 4 -n 4 --seed 1 -o " + b + " 2>/dev/null") == 0);
    CHECK(slurp(a) == slurp(b));
    CHECK(run("gen -m 4 -n 4 --seed 2 -o " + b + " 2>/dev/null") == 0);
    CHECK(slurp(a) != slurp(b));
}

TEST_CASE("gen output parses back into a valid instance") {
    TempDir dir;
    const std::string path = dir.file("i.json");
    CHECK(run("gen -m 7 -n 9 --seed 7 -o " + path + " 2>/dev/null") == 0);
    const InstanceFile file = load_instance_file(path);
    CHECK(file.m == 7);
    CHECK(file.n == 9);
    CHECK_FALSE(file.uniform);
    CHECK(to_instance(file).rows() == 7);

    CHECK(run("gen -m 3 -n 2 --seed 5 --uniform -o " + path + " 2>/dev/null") == 0);
    CHECK(load_instance_file(path).uniform);
}

TEST_CASE("gen rejects invalid parameters") {
    TempDir dir;
    CHECK(run("gen -m 0 -n 4 -o " + dir.file("x.json") + " 2>/dev/null") == 2);
    CHECK(run("gen -m 4 -n 4 --cost-range 0 -o " + dir.file("x.json") + " 2>/dev/null") == 2);
    CHECK(run("gen -m 4 -n 4 2>/dev/null") == 2);  // missing output
}

TEST_CASE("solve writes a zero-objective solution for the golden instance") {
    TempDir dir;
    const std::string in = dir.file("golden.json"), out = dir.file("sol.json");
    spit(in, kGoldenUniform);
    CHECK(run("solve -i " + in + " -o " + out + " 2>/dev/null") == 0);
    const SolutionFile solution = parse_solution_file(slurp(out));
    CHECK(solution.objective == 0);

    // stdout path: the solution lands on standard output
    const std::string redirected = dir.file("stdout.json");
    CHECK(run("solve -i " + in + " > " + redirected + " 2>/dev/null") == 0);
    CHECK(parse_solution_file(slurp(redirected)).objective == 0);

    // uniform mode explicitly
    CHECK(run("solve -i " + in + " --mode uniform -o " + out + " 2>/dev/null") == 0);
}

TEST_CASE("solve --check passes on a seeded instance") {
    TempDir dir;
    const std::string in = dir.file("i.json");
    CHECK(run("gen -m 4 -n 4 --seed 42 -o " + in + " 2>/dev/null") == 0);
    CHECK(run("solve -i " + in + " --check -o /dev/null 2>/dev/null") == 0);
}

TEST_CASE("solve surfaces input errors as exit 2") {
    TempDir dir;
    CHECK(run("solve -i " + dir.file("missing.json") + " 2>/dev/null") == 2);
    const std::string junk = dir.file("junk.json");
    spit(junk, "{ this is not json");
    CHECK(run("solve -i " + junk + " 2>/dev/null") == 2);

    // --mode uniform demands the uniform file shape
    const std::string tables = dir.file("tables.json");
    CHECK(run("gen -m 2 -n 2 --seed 3 -o " + tables + " 2>/dev/null") == 0);
    CHECK(run("solve -i " + tables + " --mode uniform 2>/dev/null") == 2);
}

TEST_CASE("check agrees with the solver on the golden instance") {
    TempDir dir;
    const std::string in = dir.file("golden.json");
    spit(in, kGoldenUniform);
    const std::string table = dir.file("table.txt");
    CHECK(run("check -i " + in + " > " + table + " 2>/dev/null") == 0);
    CHECK(slurp(table).find("agreement: yes") != std::string::npos);
}

TEST_CASE("check agrees on seeded 4x4 instances") {
    TempDir dir;
    for (int seed = 1; seed <= 5; ++seed) {
        const std::string in = dir.file("c" + std::to_string(seed) + ".json");
        CHECK(run("gen -m 4 -n 4 --seed " + std::to_string(seed) + " -o " + in +
                  " 2>/dev/null") == 0);
        CHECK(run("check -i " + in + " >/dev/null 2>/dev/null") == 0);
    }
}

TEST_CASE("check refuses instances beyond every oracle bound") {
    TempDir dir;
    const std::string in = dir.file("big.json");
    CHECK(run("gen -m 9 -n 9 --seed 1 -o " + in + " 2>/dev/null") == 0);
    CHECK(run("check -i " + in + " >/dev/null 2>/dev/null") == 2);
}

TEST_CASE("solve --check warns but succeeds beyond the oracle bounds") {
    TempDir dir;
    const std::string in = dir.file("wide.json"), err = dir.file("err.txt");
    CHECK(run("gen -m 9 -n 3 --seed 1 -o " + in + " 2>/dev/null") == 0);
    CHECK(run("solve -i " + in + " --check -o /dev/null 2> " + err) == 0);
    CHECK(slurp(err).find("check skipped") != std::string::npos);
}

TEST_CASE("gen, solve, check sweep stays green") {
    TempDir dir;
    for (int seed = 1; seed <= 50; ++seed) {
        const std::string in = dir.file("i" + std::to_string(seed) + ".json");
        CHECK(run("gen -m 3 -n 3 --seed " + std::to_string(seed) + " -o " + in +
                  " 2>/dev/null") == 0);
        CHECK(run("solve -i " + in + " --check -o /dev/null 2>/dev/null") == 0);
    }
}
