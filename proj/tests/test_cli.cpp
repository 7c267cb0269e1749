#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#ifndef DELMORSE_CLI_PATH
#error "DELMORSE_CLI_PATH must point at the built CLI binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;  // stdout only
};

RunResult run(const std::string& args) {
    const std::string out_path = "/tmp/delmorse_cli_stdout.txt";
    const std::string cmd =
        std::string(DELMORSE_CLI_PATH) + " " + args + " > " + out_path + " 2>/dev/null";
    const int raw = std::system(cmd.c_str());
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    return {WEXITSTATUS(raw), ss.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = "/tmp/delmorse_cli_" + name;
    std::ofstream out(path);
    out << content;
    return path;
}

const char* kObtuse = "dim 2\n0 0\n4 0\n2 1\n";
const char* kSquare = "dim 2\n0 0\n1 0\n1 1\n0 1\n";

}  // namespace

TEST_CASE("build delaunay at cap 4 prints the figure-one complex") {
    auto points = write_temp("obtuse.txt", kObtuse);
    auto r = run("build --type delaunay --cap 4.0 " + points);
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("complex dim=2 E=all cap=4", 0) == 0);
    CHECK(r.output.find("0,2 1.25") != std::string::npos);
    CHECK(r.output.find("0,1 ") == std::string::npos);  // AB absent at cap 4
}

TEST_CASE("build selective with explicit E") {
    auto points = write_temp("obtuse.txt", kObtuse);
    auto r = run("build --type selective --E 0,2 --cap 4.0 " + points);
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("complex dim=2 E=0,2 cap=4", 0) == 0);
}

TEST_CASE("build wrap at cap 4 keeps the two critical edges") {
    auto points = write_temp("obtuse.txt", kObtuse);
    auto r = run("build --type wrap --cap 4.0 " + points);
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("wrap dim=2", 0) == 0);
    CHECK(r.output.find("0,2 1.25") != std::string::npos);
    CHECK(r.output.find("1,2 1.25") != std::string::npos);
    CHECK(r.output.find("0,1 ") == std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
    auto points = write_temp("obtuse.txt", kObtuse);
    CHECK(run("build --type cech --E 0,1 " + points).exit_code == 2);
    CHECK(run("build --type nonsense " + points).exit_code == 2);
    CHECK(run("gradient --E 0,9 " + points).exit_code == 2);
    CHECK(run("collapse --from wrap --to cech " + points).exit_code == 2);
    CHECK(run("collapse --from cech --to cech " + points).exit_code == 2);
    CHECK(run("build /tmp/delmorse_no_such_file.txt").exit_code == 2);
}

TEST_CASE("degenerate input exits with code 3 and perturb repairs it") {
    auto points = write_temp("square.txt", kSquare);
    CHECK(run("checkgp " + points).exit_code == 3);
    CHECK(run("build --type delaunay " + points).exit_code == 3);

    auto r = run("perturb --magnitude 1e-6 --seed 1 " + points);
    CHECK(r.exit_code == 0);
    auto fixed = write_temp("square_fixed.txt", r.output);
    CHECK(run("checkgp " + fixed).exit_code == 0);
    CHECK(run("build --type delaunay " + fixed).exit_code == 0);
}

TEST_CASE("gradient output for the obtuse triangle") {
    auto points = write_temp("obtuse.txt", kObtuse);
    auto r = run("gradient --E all " + points);
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("gradient E=all", 0) == 0);
    CHECK(r.output.find("lower=0,1 upper=0,1,2 value=6.25") != std::string::npos);

    auto single = write_temp("single.txt", "dim 2\n0 0\n");
    auto r2 = run("gradient --E empty " + single);
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("critical") != std::string::npos);
}

TEST_CASE("collapse cech to wrap verifies") {
    auto points = write_temp("obtuse.txt", kObtuse);
    auto r = run("collapse --from cech --to wrap --cap inf " + points);
    CHECK(r.exit_code == 0);
    CHECK(r.output.rfind("collapse from=cech to=wrap", 0) == 0);
    CHECK(r.output.find("step 0: facet=0,1 cofacet=0,1,2") != std::string::npos);

    auto eq = write_temp("equilateral.txt", "dim 2\n0 0\n1 0\n0.5 0.866025403784\n");
    auto r2 = run("collapse --from delaunay --to wrap " + eq);
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("step") == std::string::npos);  // zero steps
}

TEST_CASE("persistence from points and from a complex file round trip") {
    auto points = write_temp("obtuse.txt", kObtuse);
    auto direct = run("persistence --type cech " + points);
    CHECK(direct.exit_code == 0);
    CHECK(direct.output.rfind("dim,birth,death\n", 0) == 0);

    auto build = run("build --type cech " + points);
    auto complex_file = write_temp("cech_complex.txt", build.output);
    auto from_file = run("persistence " + complex_file);
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.output == direct.output);

    // the wrap filtration round-trips through its file as well
    auto wrap_direct = run("persistence --type wrap " + points);
    auto wrap_build = run("build --type wrap " + points);
    auto wrap_file = write_temp("wrap_complex.txt", wrap_build.output);
    auto wrap_from_file = run("persistence " + wrap_file);
    CHECK(wrap_from_file.exit_code == 0);
    CHECK(wrap_from_file.output == wrap_direct.output);
}

TEST_CASE("compare reports EQUAL across the four filtrations") {
    auto points = write_temp("obtuse.txt", kObtuse);
    auto r = run("compare " + points);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "EQUAL\n");
}

TEST_CASE("zigzag subcommand") {
    auto x = write_temp("zx.txt", "dim 2\n0 0\n2 0\n");
    auto y = write_temp("zy.txt", "dim 2\n1 1.1\n");
    auto r = run("zigzag --cap 2.0 " + x + " " + y);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("DIAGRAM OK") != std::string::npos);
}

TEST_CASE("byte-identical reruns") {
    auto points = write_temp("obtuse.txt", kObtuse);
    for (const std::string cmd :
         {std::string("build --type cech --cap inf "), std::string("gradient --E all "),
          std::string("persistence --type delaunay "),
          std::string("collapse --from cech --to wrap ")}) {
        auto a = run(cmd + points);
        auto b = run(cmd + points);
        CHECK(a.exit_code == b.exit_code);
        CHECK(a.output == b.output);
    }
    auto p1 = run("perturb --magnitude 1e-6 --seed 9 " + points);
    auto p2 = run("perturb --magnitude 1e-6 --seed 9 " + points);
    CHECK(p1.output == p2.output);
}
