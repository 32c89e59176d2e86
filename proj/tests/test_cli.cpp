#include "exdiv/cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

using namespace exdiv;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

nlohmann::json cases() { return nlohmann::json::parse(slurp(std::filesystem::path(EXDIV_GOLDEN_DIR) / "cases.json")); }

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Result run_binary(const std::vector<std::string>& args) {
    std::string cmd = shell_quote(EXDIV_CLI_PATH);
    for (const auto& a : args) cmd += " " + shell_quote(a);
    cmd += " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out, ""};
}

std::filesystem::path write_temp(const std::string& name, const std::string& text) {
    const auto p = std::filesystem::temp_directory_path() / name;
    std::ofstream(p) << text;
    return p;
}

}  // namespace

TEST_CASE("golden outputs in --json mode (in process)") {
    for (const auto& c : cases()) {
        const auto name = c["name"].get<std::string>();
        CAPTURE(name);
        std::vector<std::string> args{"--json"};
        for (const auto& a : c["args"]) args.push_back(a.get<std::string>());
        const auto r = run(args);
        CHECK(r.code == c["exit"].get<int>());
        CHECK(r.out == slurp(std::filesystem::path(EXDIV_GOLDEN_DIR) / (name + ".json")));
    }
}

TEST_CASE("golden outputs through the installed binary") {
    for (const auto& c : cases()) {
        const auto name = c["name"].get<std::string>();
        CAPTURE(name);
        std::vector<std::string> args{"--json"};
        for (const auto& a : c["args"]) args.push_back(a.get<std::string>());
        const auto r = run_binary(args);
        CHECK(r.code == c["exit"].get<int>());
        CHECK(r.out == slurp(std::filesystem::path(EXDIV_GOLDEN_DIR) / (name + ".json")));
    }
}

TEST_CASE("json output is stable under re-runs") {
    const std::vector<std::string> args{"--json", "blowdown", "--genus", "0", "--alpha", "2", "--ruled-areas", "1,2"};
    CHECK(run(args).out == run(args).out);
    const auto j = nlohmann::json::parse(run(args).out);
    CHECK(j["certificate"]["chosen_ruling"] == "first");
    CHECK(j["ratio"] == "4");
}

TEST_CASE("human-readable examples") {
    CHECK(run({"bundle", "sympow", "--degrees", "0,2", "-m", "2"}).out == "0,2,4 (rank 3, degree 6)\n");
    CHECK(run({"bundle", "slope", "--degrees", "1,2"}).out == "3/2\n");
    CHECK(run({"bundle", "semistable", "--degrees", "2,2"}).out == "true\n");
    CHECK(run({"bundle", "twist", "--degrees", "0,-1", "-t", "1"}).out == "0,1 (rank 2, degree 1)\n");
    CHECK(run({"cone", "--degrees", "0,2"}).out.rfind("rays: l, η\n", 0) == 0);
    CHECK(run({"cone", "--degrees", "-2,-1", "--class", "1,3/2"}).out.find("not Kähler") != std::string::npos);
    CHECK(run({"cone", "--semistable", "2,-3", "--genus", "1"}).out.find("Kähler cone = forward cone") !=
          std::string::npos);
    CHECK(run({"blowdown", "--base", "point"}).out == "AlwaysBlowdown\n");
    const auto u = run({"blowdown", "--genus", "0", "--alpha", "2", "--ruled-areas", "1,1"});
    CHECK(u.code == 1);
    CHECK(u.out.rfind("Undetermined: ρ = 2", 0) == 0);
}

TEST_CASE("exit codes") {
    CHECK(run({"ring", "--rank", "2", "--deg", "1", "--class", "1,x"}).code == 2);
    CHECK(run({"ring", "--rank", "2", "--deg", "1", "--class", "1, 2"}).code == 2);
    CHECK(run({"ring", "--rank", "0", "--deg", "1", "--class", "1,0"}).code == 2);
    CHECK(run({"ring", "--rank", "2", "--deg", "1", "--class", "1/0,1"}).code == 2);
    CHECK(run({"bundle", "sympow", "--degrees", "", "-m", "2"}).code == 2);
    CHECK(run({"bundle", "slope"}).code == 2);
    const auto ss = run({"cone", "--semistable", "2,-3", "--genus", "0"});
    CHECK(ss.code == 2);
    CHECK(ss.err.find("no such semistable bundle") != std::string::npos);
    const auto bad = run({"blowdown", "--genus", "0", "--alpha", "-1", "--class", "1,1"});
    CHECK(bad.code == 1);
    CHECK(bad.out.rfind("NotAdmissible", 0) == 0);
    CHECK(run({"blowdown", "--genus", "0", "--alpha", "2"}).code == 2);
    CHECK(run({"blowdown", "--genus", "1", "--alpha", "-1", "--class", "1,-1"}).code == 2);
    CHECK(run({"check", "ring", "--max-rank", "7"}).code == 2);
    CHECK(run({"check", "sympow", "--max-m", "9"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("check prints one report line per sweep task") {
    const auto r = run({"check", "sympow", "--max-rank", "2", "--max-m", "2"});
    CHECK(r.code == 0);
    std::istringstream in(r.out);
    std::string line;
    int checks = 0;
    while (std::getline(in, line))
        if (line.rfind("CHECK sympow ", 0) == 0) {
            ++checks;
            CHECK(line.find(" PASS ") != std::string::npos);
        }
    CHECK(checks == 4);
    CHECK(run({"check", "ring", "--max-rank", "2", "--samples", "10", "--serial"}).out ==
          run({"check", "ring", "--max-rank", "2", "--samples", "10"}).out);
}

TEST_CASE("--spec mirrors the flags") {
    const auto spec = write_temp("exdiv_spec_blowdown.json",
                                 R"({"command": "blowdown", "genus": 0, "alpha": -1, "class": "1,3/2", "json": true})");
    CHECK(run({"--spec", spec.string()}).out == slurp(std::filesystem::path(EXDIV_GOLDEN_DIR) / "blowdown_certificate.json"));

    const auto sym = write_temp("exdiv_spec_sympow.json",
                                R"({"command": "bundle", "subcommand": "sympow", "degrees": [0, 2], "m": 2})");
    CHECK(run({"--spec", sym.string()}).out == "0,2,4 (rank 3, degree 6)\n");
    CHECK(run({"--json", "--spec", sym.string()}).out ==
          slurp(std::filesystem::path(EXDIV_GOLDEN_DIR) / "bundle_sympow.json"));

    const auto ring = write_temp("exdiv_spec_ring.json", R"({"command": "ring", "rank": 2, "deg": -1,
        "convention": "sub", "class": "1,3/2", "json": true})");
    CHECK(run({"--spec", ring.string()}).out == slurp(std::filesystem::path(EXDIV_GOLDEN_DIR) / "ring_sub.json"));

    CHECK(run({"--spec", write_temp("exdiv_spec_bad.json", "{not json").string()}).code == 2);
    CHECK(run({"--spec", write_temp("exdiv_spec_nocmd.json", R"({"rank": 2})").string()}).code == 2);
    CHECK(run({"--spec", write_temp("exdiv_spec_unknown.json", R"({"command": "nope"})").string()}).code == 2);
    CHECK(run({"--spec", "/nonexistent/exdiv.json"}).code == 2);
}

TEST_CASE("args_from_spec") {
    CHECK(cli::args_from_spec(R"({"command": "check", "kind": "ring", "seed": 1})") ==
          std::vector<std::string>{"check", "ring", "--seed", "1"});
    CHECK(cli::args_from_spec(R"({"command": "bundle", "subcommand": "twist", "degrees": [0, -1], "t": 1})") ==
          std::vector<std::string>{"bundle", "twist", "--degrees", "0,-1", "-t", "1"});
}

TEST_CASE("format_curve") {
    CHECK(cli::format_curve(1, 0) == "l");
    CHECK(cli::format_curve(0, 1) == "η");
    CHECK(cli::format_curve(-2, 1) == "-2l+η");
    CHECK(cli::format_curve(3, 1) == "3l+η");
    CHECK(cli::format_curve(0, 0) == "0");
}
