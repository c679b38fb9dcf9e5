// Exercises the built binary end to end via std::system.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_counter = 0;

RunResult run(const std::string& args) {
    const std::string out_file = "cli_out_" + std::to_string(run_counter) + ".txt";
    const std::string err_file = "cli_err_" + std::to_string(run_counter) + ".txt";
    ++run_counter;
    const std::string cmd =
        std::string(JACO_CLI_PATH) + " " + args + " > " + out_file + " 2> " + err_file;
    const int raw = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WEXITSTATUS(raw);
    r.out = slurp(out_file);
    r.err = slurp(err_file);
    std::remove(out_file.c_str());
    std::remove(err_file.c_str());
    return r;
}

std::int64_t line_count(const std::string& s) {
    std::int64_t n = 0;
    for (char ch : s) n += ch == '\n' ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("generate writes edge lists") {
    const RunResult r = run("generate --m 2 --c 1 --n 11 --format edges");
    CHECK(r.exit_code == 0);
    CHECK(line_count(r.out) == 39);

    const RunResult blocks = run("generate --m 0 --c 3 --n 15 --relaxed --format edges");
    CHECK(blocks.exit_code == 0);
    CHECK(line_count(blocks.out) == 21);

    const RunResult single = run("generate --m 1 --c 0 --n 1 --format edges");
    CHECK(single.exit_code == 0);
    CHECK(line_count(single.out) == 0);
}

TEST_CASE("exit codes distinguish usage and computation errors") {
    CHECK(run("generate --m 2 --c 1 --n 11 --bogus-flag 3").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("generate --m 0 --c 3 --n 15 --format edges").exit_code == 1);
    CHECK(run("generate --m 2 --c 1 --n 11 --format png").exit_code == 1);
    CHECK(run("verify --claims no-such-claim").exit_code == 1);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("analyze emits the Jaconian report") {
    const RunResult r = run("analyze --m 2 --c 1 --n 11");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"prime_jaconian\": 4") != std::string::npos);
    CHECK(r.out.find("\"delta\": 9") != std::string::npos);

    const RunResult e = run("analyze --m 1 --c 0 --n 15");
    CHECK(e.out.find("\"edge_count\": 44") != std::string::npos);

    const RunResult one = run("analyze --m 1 --c 0 --n 1");
    CHECK(one.out.find("\"delta\": 0") != std::string::npos);
}

TEST_CASE("sequence subcommand") {
    const RunResult corr = run("sequence --m 1 --c 0 --n-max 8 --variant corrected");
    CHECK(corr.exit_code == 0);
    CHECK(corr.out.find("0,\n    1,\n    1,\n    2,\n    3,\n    3,\n    4,\n    4,\n    5")
          != std::string::npos);

    const RunResult printed = run("sequence --m 2 --c 1 --n-max 4 --variant printed");
    CHECK(printed.exit_code == 0);
    CHECK(printed.out.find("1,\n    1,\n    1,\n    2\n") != std::string::npos);

    const RunResult base = run("sequence --m 1 --c 0 --n-max 1");
    CHECK(base.exit_code == 0);
    CHECK(base.out.find("\"values\": [\n    0,\n    1\n  ]") != std::string::npos);
}

TEST_CASE("verify subcommand writes a deterministic report") {
    const std::string flags =
        "verify --claims lemma-1.1d-printed,thm-3.8-main --grid-m 2 --grid-c 1 "
        "--grid-n 12";
    const RunResult r1 = run(flags + " --out report1.json");
    const RunResult r2 = run(flags + " --out report2.json");
    CHECK(r1.exit_code == 0);  // counterexamples do not fail the run
    CHECK(r2.exit_code == 0);
    CHECK(r1.out.find("counterexample") != std::string::npos);
    const std::string rep1 = slurp("report1.json");
    const std::string rep2 = slurp("report2.json");
    CHECK_FALSE(rep1.empty());
    CHECK(rep1 == rep2);
    CHECK(rep1.find("\"expected\": \"7\"") != std::string::npos);
    CHECK(rep1.find("\"actual\": \"6\"") != std::string::npos);
    std::remove("report1.json");
    std::remove("report2.json");
}

TEST_CASE("infer subcommand consumes generated edge lists") {
    CHECK(run("generate --m 2 --c 1 --n 11 --format edges --out infer_in.txt")
              .exit_code == 0);
    const RunResult r = run("infer infer_in.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"status\": \"unique\"") != std::string::npos);
    CHECK(r.out.find("\"m\": 2") != std::string::npos);
    CHECK(r.out.find("\"c\": 1") != std::string::npos);
    std::remove("infer_in.txt");

    CHECK(run("generate --m 0 --c 3 --n 15 --relaxed --format edges --out infer_k.txt")
              .exit_code == 0);
    const RunResult blocks = run("infer infer_k.txt");
    CHECK(blocks.out.find("\"status\": \"unique\"") != std::string::npos);
    CHECK(blocks.out.find("\"m\": 0") != std::string::npos);
    CHECK(blocks.out.find("\"c\": 3") != std::string::npos);
    std::remove("infer_k.txt");

    CHECK(run("generate --m 3 --c 0 --n 4 --format edges --out infer_c.txt")
              .exit_code == 0);
    const RunResult complete = run("infer infer_c.txt");
    CHECK(complete.out.find("\"status\": \"ambiguous\"") != std::string::npos);
    CHECK(complete.out.find("\"constraint\": \"m + c >= 3\"") != std::string::npos);
    std::remove("infer_c.txt");

    CHECK(run("infer no_such_file.txt").exit_code == 1);
}

TEST_CASE("json-doc round trips byte for byte through the CLI") {
    CHECK(run("generate --m 2 --c 1 --n 11 --format json-doc --out doc1.json")
              .exit_code == 0);
    // regenerating from the same parameters must reproduce the bytes
    CHECK(run("generate --m 2 --c 1 --n 11 --format json-doc --out doc2.json")
              .exit_code == 0);
    CHECK(slurp("doc1.json") == slurp("doc2.json"));
    std::remove("doc1.json");
    std::remove("doc2.json");
}
