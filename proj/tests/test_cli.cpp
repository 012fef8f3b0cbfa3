#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

const std::string kCli = UTSCAT_CLI_PATH;

int run(const std::string& cmd) {
    const int status = std::system(cmd.c_str());
    REQUIRE(status != -1);
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string temp_dir(const std::string& tag) {
    std::string tmpl = "/tmp/utscat_cli_" + tag + "_XXXXXX";
    char* made = mkdtemp(tmpl.data());
    REQUIRE(made != nullptr);
    return tmpl;
}

void write_config(const std::string& path, const std::string& out_dir) {
    std::ofstream out(path);
    out << R"({
  "vertices": [[1, 1], [-1, 1], [-1, -1], [1, -1]],
  "beta": 1.0,
  "data": {"example": 1},
  "out_dir": ")" << out_dir
        << R"("
})";
}

} // namespace

TEST_CASE("selftest suites pass") {
    CHECK(run(kCli + " --threads 2 selftest > /dev/null") == 0);
}

TEST_CASE("verify --only validates the suite name") {
    CHECK(run(kCli + " verify-examples --only no-such-suite 2> /dev/null") == 2);
    CHECK(run(kCli + " --threads 2 verify-examples --only specfun > /dev/null") == 0);
}

TEST_CASE("solve writes the artifact set and is deterministic") {
    const std::string dir_a = temp_dir("a"), dir_b = temp_dir("b");
    const std::string cfg = dir_a + "/run.json";
    write_config(cfg, dir_a);
    REQUIRE(run(kCli + " --threads 4 solve " + cfg + " > /dev/null") == 0);
    REQUIRE(run(kCli + " --threads 2 solve " + cfg + " --out " + dir_b + " > /dev/null") == 0);

    for (const char* name : {"report.json", "f0.csv", "neumann_side_0.csv", "neumann_side_1.csv",
                             "neumann_side_2.csv", "neumann_side_3.csv"}) {
        const std::string a = slurp(dir_a + "/" + name);
        CHECK(!a.empty());
        if (std::string(name).ends_with(".csv"))
            CHECK(a == slurp(dir_b + "/" + name)); // bit-identical across runs/threads
    }
    const std::string report = slurp(dir_a + "/report.json");
    for (const char* key : {"residual_norm", "condition", "rank_deficient", "timings",
                            "neumann_coefficients", "amplitude_coefficients"})
        CHECK(report.find(key) != std::string::npos);
}

TEST_CASE("config errors exit with status 2") {
    const std::string dir = temp_dir("bad");
    const std::string cfg = dir + "/bad.json";
    {
        std::ofstream out(cfg);
        out << R"({"vertices": [[1, 1], [-1, 1]], "example": 1})"; // too few vertices
    }
    CHECK(run(kCli + " solve " + cfg + " 2> /dev/null") == 2);
    CHECK(run(kCli + " solve /nonexistent/path.json 2> /dev/null") == 2);
    CHECK(run(kCli + " solve 2> /dev/null") == 2);
}

TEST_CASE("quadrature tolerance override is validated") {
    CHECK(run("UT_QUAD_TOL=bogus " + kCli + " selftest 2> /dev/null") == 2);
}
