#include <doctest.h>

#include "hfl/filtcx.hpp"
#include "hfl/hflcalc.hpp"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + HFL_BIN + " " + args + " 2>&1";
    Run r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p);
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

}

TEST_CASE("alexander json") {
    auto r = run("alexander corpus:hopf_plus --json");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"l\":2,\"terms\":[{\"c\":1,\"e2\":[0,0]}]}\n");
    auto t = run("alexander corpus:trefoil_right");
    CHECK(t.out == "Delta = T - 1 + T^{-1}\n");
}

TEST_CASE("pd literals and files") {
    auto r = run("signature 'PD[X[1,3,2,4],X[3,1,4,2]]' --json");
    CHECK(r.code == 0);
    CHECK(r.out == "{\"sigma\":-1}\n");
    auto path = fs::temp_directory_path() / "hfl_cli_test.pd";
    {
        std::ofstream f(path);
        f << "PD[X[1,3,2,4],X[3,1,4,2]]\n";
    }
    auto rf = run("signature " + path.string());
    CHECK(rf.out == "sigma = -1\n");
    fs::remove(path);
    CHECK(run("signature 'PD[X[1,2,3]]'").code == 1);
}

TEST_CASE("exit codes") {
    auto u = run("frobnicate");
    CHECK(u.code == 2);
    CHECK(u.out.find("unknown subcommand") != std::string::npos);
    CHECK(run("").code == 2);
    CHECK(run("alexander").code == 2);
    auto t = run("table corpus:L7n2");
    CHECK(t.code == 1);
    CHECK(t.out.find("non-alternating") != std::string::npos);
    CHECK(t.out.find("hfl fixture L7n2") != std::string::npos);
    auto j = run("table corpus:L7n2 --json");
    CHECK(j.code == 1);
    auto e = nlohmann::json::parse(j.out);
    CHECK(e["error"]["kind"] == "precondition");
    CHECK(run("table corpus:missing").code == 1);
    CHECK(run("cfl2 fixture:L7n1").code == 1);
    CHECK(run("heegaard 4 2").code == 1);
}

TEST_CASE("check suite") {
    auto r = run("check corpus:all");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    auto j = run("check corpus:all --json");
    auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["failures"] == 0);
    CHECK(parsed["checks"].size() > 100);
    // human and machine forms list the same checks
    int lines = 0;
    for (char c : r.out) lines += c == '\n';
    CHECK(lines == (int)parsed["checks"].size() + 1);
    CHECK(run("check corpus:hopf_plus").code == 0);
    CHECK(run("check fixture:L7n2").code == 0);
}

TEST_CASE("json output is byte-stable") {
    for (auto* args : {"table 'corpus:torus_2_2n(3)' --json", "cfl2 'corpus:two_bridge(8,3)' --json",
                       "ss fixture:L7n1 --json", "check corpus:all --json", "heegaard 8 3 --emit-complex"}) {
        CAPTURE(args);
        auto a = run(args), b = run(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("subcommands map onto the library") {
    auto t = nlohmann::json::parse(run("table corpus:hopf_plus --json").out);
    CHECK(hfl::table_from_json(t["table"]) == hfl::hfl_alternating(hfl::corpus("hopf_plus")).table);
    auto h = nlohmann::json::parse(run("heegaard 2 3 --emit-complex").out);
    CHECK(hfl::assoc_graded_homology(hfl::complex_from_json(h)) == hfl::table_from_json(t["table"]));
    auto c = nlohmann::json::parse(run("cfl2 corpus:hopf_plus --json").out);
    CHECK(c["summands"].size() == 2);
    auto ss = nlohmann::json::parse(run("ss fixture:L7n2 --json").out);
    CHECK(hfl::table_from_json(ss["pages"].back()).total() == 2);
    auto k = nlohmann::json::parse(run("kunneth corpus:trefoil_right corpus:hopf_plus --json").out);
    CHECK(k["equal"] == true);
    auto col = nlohmann::json::parse(run("collapse corpus:hopf_plus --json").out);
    CHECK(col["ranks"].size() == 3);
    auto corpus = nlohmann::json::parse(run("corpus --json").out);
    CHECK(corpus.size() == hfl::corpus_names().size());
    auto pd = run("corpus hopf_plus").out;
    CHECK(hfl::parse_pd(pd) == hfl::corpus("hopf_plus"));
}

TEST_CASE("fixture directory override") {
    auto dir = fs::temp_directory_path() / "hfl_fixture_override";
    fs::remove_all(dir);
    fs::create_directories(dir);
    fs::copy_file(fs::path(HFL_SOURCE_FIXTURES) / "hopf_plus.json", dir / "only_this.json");
    auto r = run("fixture --json", "HFL_CORPUS_DIR=" + dir.string());
    CHECK(r.out == "[\"only_this\"]\n");
    CHECK(run("fixture only_this", "HFL_CORPUS_DIR=" + dir.string()).code == 0);
    CHECK(run("fixture hopf_plus", "HFL_CORPUS_DIR=" + dir.string()).code == 1);
    fs::remove_all(dir);
    auto all = nlohmann::json::parse(run("fixture --json").out);
    CHECK(all.size() == 8);
}
