#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct CliResult {
    int exit_code = -1;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(IMIOA_CLI_PATH) + " " + args + " 2>/dev/null";
    CliResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe))
        r.out.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/imioa-test-") + name;
}

} // namespace

TEST_CASE("cli: help exits 0, bad flags exit 2") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("solve --definitely-not-a-flag").exit_code == 2);
    CHECK(run_cli("gen nosuchkind --n 5").exit_code == 2);
    CHECK(run_cli("solve --alg local --k 1 /nonexistent.el").exit_code == 2);
}

TEST_CASE("cli: gen then solve round-trip") {
    const std::string el = temp_path("star.el");
    REQUIRE(run_cli("gen star --n 8 -o " + el).exit_code == 0);
    std::ifstream in(el);
    REQUIRE(in.good());

    const CliResult solved = run_cli("solve --alg greedy --k 1 " + el);
    CHECK(solved.exit_code == 0);
    CHECK(solved.out.find("\"objective\":8") != std::string::npos);
    CHECK(solved.out.find("\"mu\":1.0") != std::string::npos);

    const CliResult csv =
        run_cli("solve --alg greedy --k 1 --format csv " + el);
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.rfind("schema,", 0) == 0);
    std::remove(el.c_str());
}

TEST_CASE("cli: multi-seed runs emit one record per seed") {
    const std::string el = temp_path("gnp.el");
    REQUIRE(run_cli("gen gnp --n 30 --p 0.1 --seed 7 -o " + el).exit_code == 0);
    const CliResult r = run_cli("solve --alg local --k 3 --seeds 5 " + el);
    CHECK(r.exit_code == 0);
    int lines = 0;
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 5);
    std::remove(el.c_str());
}

TEST_CASE("cli: identical seed gives identical record modulo wall time") {
    const std::string el = temp_path("det.el");
    REQUIRE(run_cli("gen gnp --n 20 --p 0.2 --seed 1 -o " + el).exit_code == 0);
    auto strip_wall = [](std::string s) {
        const auto p = s.find("\"wall_ms\"");
        const auto q = s.find(',', p);
        return s.erase(p, q - p + 1);
    };
    const CliResult a = run_cli("solve --alg local --k 4 --seed 9 " + el);
    const CliResult b = run_cli("solve --alg local --k 4 --seed 9 " + el);
    CHECK(strip_wall(a.out) == strip_wall(b.out));
    std::remove(el.c_str());
}

TEST_CASE("cli: exact and budget exit code") {
    const std::string el = temp_path("exact.el");
    REQUIRE(run_cli("gen star --n 8 -o " + el).exit_code == 0);
    const CliResult r = run_cli("exact --k 1 " + el);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"opt\":8") != std::string::npos);
    CHECK(run_cli("exact --dominating " + el).out.find(":1") !=
          std::string::npos);
    std::remove(el.c_str());

    const std::string big = temp_path("big.el");
    REQUIRE(run_cli("gen gnp --n 40 --p 0.2 --seed 2 -o " + big).exit_code == 0);
    CHECK(run_cli("exact --k 20 --budget 100 " + big).exit_code == 3);
    std::remove(big.c_str());
}

TEST_CASE("cli: sdp route reports L and the closed-form ratio") {
    const std::string el = temp_path("sdp.el");
    REQUIRE(run_cli("gen gnp --n 10 --p 0.4 --seed 3 -o " + el).exit_code == 0);
    const CliResult r =
        run_cli("solve --alg sdp --alpha 0.5 --epsilon 0.001 " + el);
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"L\":959") != std::string::npos);
    CHECK(r.out.find("0.649") != std::string::npos);
    std::remove(el.c_str());
}

TEST_CASE("cli: compare and sweep-k") {
    const std::string el = temp_path("cmp.el");
    REQUIRE(run_cli("gen star --n 8 -o " + el).exit_code == 0);
    const CliResult cmp = run_cli("compare --k 1 --seeds 5 " + el);
    CHECK(cmp.exit_code == 0);
    CHECK(cmp.out.find("local,1,") != std::string::npos);
    CHECK(cmp.out.find("greedy,1,") != std::string::npos);

    const CliResult sweep =
        run_cli("sweep-k --alg local --fractions 0.125,0.25 --seeds 2 " + el);
    CHECK(sweep.exit_code == 0);
    int lines = 0;
    std::istringstream in(sweep.out);
    std::string line;
    while (std::getline(in, line))
        if (!line.empty()) ++lines;
    CHECK(lines == 4);

    CHECK(run_cli("sweep-k --alg local --fractions , " + el).exit_code == 2);
    std::remove(el.c_str());
}

TEST_CASE("cli: grid modes") {
    const CliResult info = run_cli("grid --a 5 --b 5");
    CHECK(info.exit_code == 0);
    CHECK(info.out.find("\"T\":2") != std::string::npos);
    CHECK(info.out.find("\"U_construct\":8") != std::string::npos);

    const CliResult full = run_cli("grid --a 2 --b 3 --p 3 --mode full");
    CHECK(full.exit_code == 0);
    CHECK(full.out.find("ioa=6") != std::string::npos);

    CHECK(run_cli("grid --a 3 --b 3 --p 2 --mode full").exit_code == 2);
}
