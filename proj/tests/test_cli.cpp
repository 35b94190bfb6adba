#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include <nlohmann/json.hpp>

#include "ulrich/lattice.hpp"

namespace {

struct CliResult {
    int exit_code;
    std::string stdout_text;
};

CliResult run_cli(const std::string& args) {
    std::string cmd = std::string(CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

}  // namespace

TEST_CASE("classify command") {
    auto res = run_cli("classify \"6;2,2,2,1,1,1\" --rank 3");
    CHECK(res.exit_code == 0);
    auto j = nlohmann::json::parse(res.stdout_text);
    CHECK(j["stable"] == true);
    CHECK(j["moduli_dim"] == 4);
    CHECK(j["standard"]["a"] == 6);

    // round trip: printed classes re-parse to equal classes
    for (const auto& part : j["decomposition"]) {
        auto d = ulrich::parse_divisor_class(part["text"].get<std::string>());
        CHECK(d.a == part["class"]["a"].get<int64_t>());
    }
}

TEST_CASE("exit codes") {
    CHECK(run_cli("classify \"3;2,1,0,0,0,0\" --rank 2 --expect-ulrich").exit_code == 1);
    CHECK(run_cli("classify \"2;0,0,0,0,0,0\" --rank 2 --expect-ulrich").exit_code == 0);
    CHECK(run_cli("classify garbage --rank 2").exit_code == 2);
    CHECK(run_cli("classify \"1;2;3\" --rank 2").exit_code == 2);
    CHECK(run_cli("classify \"2;0,0,0,0,0,0\"").exit_code == 2);  // missing --rank
    CHECK(run_cli("no-such-command").exit_code == 2);
    CHECK(run_cli("table --rank 2 --format xml").exit_code == 2);
    CHECK(run_cli("decompose \"3;2,1,0,0,0,0\" --rank 2").exit_code == 1);
    CHECK(run_cli("verify --suite propalg").exit_code == 0);
}

TEST_CASE("table command") {
    auto md = run_cli("table --rank 2 --format md");
    CHECK(md.exit_code == 0);
    // header, separator, six rows
    CHECK(std::count(md.stdout_text.begin(), md.stdout_text.end(), '\n') == 8);
    CHECK(md.stdout_text.find("(4;2,1,1,1,1,0)") != std::string::npos);

    auto csv = run_cli("table --rank 3 --format csv");
    CHECK(csv.exit_code == 0);
    CHECK(csv.stdout_text.rfind("D,D2,decomposition", 0) == 0);
    CHECK(std::count(csv.stdout_text.begin(), csv.stdout_text.end(), '\n') == 12);
}

TEST_CASE("catalog, orbit and standard-form commands") {
    auto lines = run_cli("catalog lines --format json");
    CHECK(lines.exit_code == 0);
    CHECK(nlohmann::json::parse(lines.stdout_text).size() == 27);
    auto cubics = run_cli("catalog cubics --format json");
    CHECK(nlohmann::json::parse(cubics.stdout_text).size() == 72);

    auto orbit = run_cli("orbit \"1;0,0,0,0,0,0\" --count-only");
    CHECK(orbit.stdout_text == "72\n");

    auto sf = run_cli("standard-form \"10;5,3,3,2,2,0\"");
    auto j = nlohmann::json::parse(sf.stdout_text);
    CHECK(j["output_text"] == "9;4,2,2,2,2,0");

    auto tf = run_cli("threefold --rank 2");
    CHECK(nlohmann::json::parse(tf.stdout_text)["moduli_dim"] == 5);
}
