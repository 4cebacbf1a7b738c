#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

// Runs the CLI binary through the shell and captures stdout (stderr is
// dropped unless merge_stderr). The binary path comes from the build system.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(SUBSETSUMS_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t got = 0;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    REQUIRE(status != -1);
    if (WIFEXITED(status)) r.exit_code = WEXITSTATUS(status);
    return r;
}

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("count emits the frozen CSV table") {
    const RunResult r = run_cli("count --group 4 --h 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "group,h,a_index,count\n"
          "4,2,0,1\n"
          "4,2,1,2\n"
          "4,2,2,1\n"
          "4,2,3,2\n");
}

TEST_CASE("count h=0 row is the indicator of the identity") {
    const RunResult r = run_cli("count --group 5 --h 0 --method brute");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "group,h,a_index,count\n"
          "5,0,0,1\n"
          "5,0,1,0\n"
          "5,0,2,0\n"
          "5,0,3,0\n"
          "5,0,4,0\n");
}

TEST_CASE("count methods agree and method=all cross-checks") {
    const RunResult dp = run_cli("count --group 2,2,3 --h-min 0 --h-max 12 --method dp");
    const RunResult brute = run_cli("count --group 2,2,3 --h-min 0 --h-max 12 --method brute");
    const RunResult rec = run_cli("count --group 2,2,3 --h-min 0 --h-max 12 --method recurrence");
    const RunResult all = run_cli("count --group 2,2,3 --h-min 0 --h-max 12 --method all");
    CHECK(dp.exit_code == 0);
    CHECK(brute.exit_code == 0);
    CHECK(rec.exit_code == 0);
    CHECK(all.exit_code == 0);
    CHECK(dp.out == brute.out);
    CHECK(dp.out == rec.out);
    CHECK(dp.out == all.out);
}

TEST_CASE("verify reports passing groups and exits zero") {
    const RunResult r = run_cli("verify --group 8 --group 2,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"all_passed\": true") != std::string::npos);
    CHECK(r.out.find("\"group_axioms\"") != std::string::npos);
    CHECK(r.out.find("\"serialization_roundtrip\"") != std::string::npos);
    CHECK(r.out.find("\"verdict\": \"fail\"") == std::string::npos);
}

TEST_CASE("bounds single cell matches the frozen report") {
    const RunResult r = run_cli("bounds --group 4 --h 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out ==
          "group,n,h,deviation,bound_float,holds\n"
          "4,4,2,1,5.656854249492379,true\n");
}

TEST_CASE("bounds default range covers the proven window") {
    const RunResult r = run_cli("bounds --group 12");
    CHECK(r.exit_code == 0);
    std::istringstream is(r.out);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line == "group,n,h,deviation,bound_float,holds");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        CHECK(line.substr(0, 5) == "12,12");
        CHECK(line.find(",true") != std::string::npos);
    }
    CHECK(rows == 6);  // h = 2..7
}

TEST_CASE("ratio-table emits the frozen convergence row") {
    const RunResult r = run_cli("ratio-table --group 16 --h 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("group,n,h,min,max,ratio,one_minus_x\n") == 0);
    CHECK(r.out.find("16,16,8,800,810,0.9876543209876543,") != std::string::npos);
}

TEST_CASE("export-code emits the frozen two-word book") {
    const RunResult r = run_cli("export-code --group 4 --h 2 --a 1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n=4 h=2 a=1 group=4 d=4\n0011\n1100\n");
}

TEST_CASE("export-code of an empty fiber is a bare header") {
    const RunResult r = run_cli("export-code --group 2,2 --h 2 --a 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "n=4 h=2 a=0 group=2,2 d=inf\n");
}

TEST_CASE("export-code defaults --a to the total sum") {
    // total_sum(Z_4) has index 2
    const RunResult by_default = run_cli("export-code --group 4 --h 2");
    const RunResult by_index = run_cli("export-code --group 4 --h 2 --a 2");
    CHECK(by_default.exit_code == 0);
    CHECK(by_default.out == by_index.out);
    CHECK(by_default.out.find("a=2") != std::string::npos);
}

TEST_CASE("repeated runs are byte-identical") {
    const char* jobs[] = {
        "count --group 4,3 --h-min 0 --h-max 6 --format json",
        "verify --group 2,8",
        "bounds --max-order 10 --format json",
        "ratio-table --order 16",
        "export-code --group 8 --h 4 --a 2 --format json",
    };
    for (const char* job : jobs) {
        CAPTURE(job);
        const RunResult first = run_cli(job);
        const RunResult second = run_cli(job);
        CHECK(first.exit_code == 0);
        CHECK(second.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
    }
}

TEST_CASE("relative --out resolves against SUBSETSUMS_OUT_DIR") {
    namespace fs = std::filesystem;
    const fs::path dir = fs::temp_directory_path() / "subsetsums_cli_out_test";
    fs::remove_all(dir);
    fs::create_directories(dir);
    REQUIRE(setenv("SUBSETSUMS_OUT_DIR", dir.c_str(), 1) == 0);

    const RunResult direct = run_cli("count --group 4 --h 2");
    const RunResult filed = run_cli("count --group 4 --h 2 --out tables/z4.csv");
    CHECK(filed.exit_code == 0);
    CHECK(filed.out.empty());
    CHECK(read_file(dir / "tables" / "z4.csv") == direct.out);

    // absolute --out ignores the environment variable
    const fs::path abs = dir / "abs.csv";
    const RunResult abs_run = run_cli("count --group 4 --h 2 --out " + abs.string());
    CHECK(abs_run.exit_code == 0);
    CHECK(read_file(abs) == direct.out);

    REQUIRE(unsetenv("SUBSETSUMS_OUT_DIR") == 0);
    fs::remove_all(dir);
}

TEST_CASE("usage and configuration errors exit 2") {
    CHECK(run_cli("").exit_code == 2);                                   // no subcommand
    CHECK(run_cli("count --h 2").exit_code == 2);                        // missing --group
    CHECK(run_cli("count --group 4").exit_code == 2);                    // missing h request
    CHECK(run_cli("count --group 4 --h 5").exit_code == 2);              // h > n
    CHECK(run_cli("count --group 4 --h 2 --h-min 1 --h-max 2").exit_code == 2);
    CHECK(run_cli("count --group 1,4 --h 2").exit_code == 2);            // bad group
    CHECK(run_cli("count --group 4 --h 2 --format yaml").exit_code == 2);
    CHECK(run_cli("count --group 4 --h 2 --method magic").exit_code == 2);
    CHECK(run_cli("count --group 4 --group 8 --h 2").exit_code == 2);    // two groups
    CHECK(run_cli("count --group 4 --h 2 --no-such-flag").exit_code == 2);
    CHECK(run_cli("bounds --group 12 --h 1").exit_code == 2);            // outside window
    CHECK(run_cli("bounds --group 12 --h 13").exit_code == 2);           // h > n
    CHECK(run_cli("ratio-table --group 12 --h 9").exit_code == 2);       // outside window
    CHECK(run_cli("ratio-table").exit_code == 2);                        // no groups
    CHECK(run_cli("export-code --group 8 --h-min 2 --h-max 3").exit_code == 2);
    CHECK(run_cli("export-code --group 8 --h 2 --a x").exit_code == 2);
    CHECK(run_cli("export-code --group 8 --h 2 --a 9").exit_code == 2);  // index out of range

    const RunResult err = run_cli("count --group 1,4 --h 2", /*merge_stderr=*/true);
    CHECK(err.out.find("error:") != std::string::npos);
}

TEST_CASE("out-of-window h is allowed with the override flag") {
    const RunResult r = run_cli("bounds --group 12 --h 1 --allow-out-of-range");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("12,12,1,0,") != std::string::npos);  // row 1 is uniform, deviation 0
}

TEST_CASE("help exits zero") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("count --help").exit_code == 0);
}
