#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string binary_path() {
    const char* bin = std::getenv("SEGKIT_BIN");
    REQUIRE(bin != nullptr);
    return bin;
}

std::string golden_dir() {
    const char* dir = std::getenv("SEGKIT_GOLDEN_DIR");
    REQUIRE(dir != nullptr);
    return dir;
}

RunResult run(const std::string& args, const std::string& stdin_payload = "") {
    std::string cmd;
    if (!stdin_payload.empty()) {
        std::string tmp = std::string(std::getenv("TMPDIR") ? std::getenv("TMPDIR") : "/tmp") +
                          "/segkit_cli_payload.json";
        std::ofstream(tmp) << stdin_payload;
        cmd = binary_path() + " " + args + " < " + tmp + " 2>/dev/null";
    } else {
        cmd = binary_path() + " " + args + " < /dev/null 2>/dev/null";
    }
    RunResult res;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf{};
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) res.out.append(buf.data(), got);
    int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string read_golden(const std::string& name) {
    std::ifstream in(golden_dir() + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void check_golden(const std::string& name, const std::string& args,
                  const std::string& payload = "") {
    RunResult res = run(args, payload);
    CHECK(res.exit_code == 0);
    CHECK(res.out == read_golden(name));
}

} // namespace

TEST_CASE("cli golden outputs") {
    check_golden("convert_word_to_kleshchev.json", "convert --from word --to kleshchev",
                 R"({"tops":[-1,0,1,2,2],"bottoms":[-4,-5,-2,-1,-2]})");
    check_golden("convert_kleshchev_to_drinfeld.json",
                 "convert --from kleshchev --to drinfeld --n 2",
                 R"({"multipartition":[[2,1]],"charge":[0]})");
    check_golden("convert_skew_to_multisegment.json", "convert --from skew --to multisegment",
                 R"({"outer":[2,2],"inner":[1]})");
    check_golden("convert_drinfeld_roundtrip.json",
                 "convert --from drinfeld --to multisegment --trace",
                 R"({"n":3,"roots":[[4],[2],[0]]})");
    check_golden("enumerate_standard_kleshchev.json",
                 "enumerate standard-kleshchev --f 0 --r 4");
    check_golden("enumerate_standard_words.json",
                 "enumerate standard-words --r 1 --window -1..1");
    check_golden("count_skew_shapes.json", "count skew-shapes --outer-max 4");
    check_golden("verify_jm_21.json", "verify jm --lambda 2,1 --q0 2");
}

TEST_CASE("cli determinism") {
    std::string args = "enumerate standard-kleshchev --f 1,0 --r 3";
    CHECK(run(args).out == run(args).out);
}

TEST_CASE("cli exit codes") {
    CHECK(run("--version").exit_code == 0);
    CHECK(run("enumerate multisegments --r 2").exit_code == 2); // missing window
    CHECK(run("enumerate nonsense --r 1").exit_code == 2);
    CHECK(run("verify bijections --r-max 3").exit_code == 0);
    CHECK(run("convert --from word --to kleshchev", "not json").exit_code == 2);
    CHECK(run("convert --from kleshchev --to word",
              R"({"multipartition":[[2],[1]],"charge":[0,0]})")
              .exit_code == 2); // theta precondition
    CHECK(run("verify jm --lambda 2,1 --q0 1").exit_code == 2);
}

TEST_CASE("cli conversion consistency") {
    // word -> drinfeld goes through the multisegment edge
    RunResult res = run("convert --from word --to drinfeld --n 3",
                        R"({"tops":[2],"bottoms":[0]})");
    CHECK(res.exit_code == 0);
    CHECK(res.out.find("\"provenance\"") != std::string::npos);
    CHECK(res.out.find("\"flat\"") != std::string::npos);
    CHECK(res.out.find("\"partial\"") != std::string::npos);
}
