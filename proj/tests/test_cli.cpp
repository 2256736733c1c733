#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <string>

#ifndef DRG_CLI_PATH
#error "DRG_CLI_PATH must point at the drg binary"
#endif

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(DRG_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle) {
    return hay.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("params text output") {
    auto r = run("params \"{5,4,2;1,1,4}\"");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "order: 36"));
    CHECK(contains(r.out, "eigenvalues: 5, 2, -1, -3"));
    CHECK(contains(r.out, "multiplicities: 1, 16, 10, 9"));
    CHECK(contains(r.out, "kTable: 1, 5, 20, 10"));
    CHECK(contains(r.out, "2: [     0      0      1      0]"));  // Krein
    CHECK(contains(r.out, "176/25"));
    CHECK(contains(r.out, "[    1  32/5    -2 -27/5]"));  // Q row
    CHECK(contains(r.out, "formally self-dual: no"));

    // complete graph K_4
    auto k4 = run("params \"{3;1}\"");
    CHECK(k4.code == 0);
    CHECK(contains(k4.out, "order: 4"));

    // irrational eigenvalues of the pentagon
    auto pent = run("params \"{2,1;1,1}\"");
    CHECK(pent.code == 0);
    CHECK(contains(pent.out, "x^2 + x - 1"));
    CHECK(contains(pent.out, "multiplicities: 1, 2, 2"));

    // malformed text is a usage error; an infeasible-but-parseable array
    // reports the violated condition with exit code 2
    auto bad = run("params \"{4,x;1,1}\"");
    CHECK(bad.code == 1);
    auto infeas = run("params \"{4,5;1,1}\"");
    CHECK(infeas.code == 2);
}

TEST_CASE("params json output") {
    auto r = run("params \"{3,2;1,1}\" --format json");
    CHECK(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["kTable"] == nlohmann::json({1, 3, 6}));
    CHECK(j["order"] == 10);
    CHECK(j["eigenvalues"] == nlohmann::json({3, 1, -2}));

    auto syl = run("params \"{5,4,2;1,1,4}\" --format json");
    auto js = nlohmann::json::parse(syl.out);
    CHECK(js["Q"][1] == nlohmann::json({1, "32/5", -2, "-27/5"}));
    CHECK(js["kreinParameters"][1][1][1] == "44/5");
}

TEST_CASE("input grammars") {
    auto srg3 = run("params \"srg(6,2,2)\"");
    CHECK(srg3.code == 0);
    CHECK(contains(srg3.out, "array: {6, 3; 1, 2}"));

    auto srg4 = run("params \"srg(16,6,2,2)\"");
    CHECK(srg4.code == 0);
    CHECK(contains(srg4.out, "order: 16"));

    auto mismatch = run("params \"srg(17,6,2,2)\"");
    CHECK(mismatch.code == 1);

    auto cls = run("params \"classical(3,1,0,2)\"");
    CHECK(cls.code == 0);
    CHECK(contains(cls.out, "array: {6, 4, 2; 1, 2, 3}"));
    CHECK(contains(cls.out, "order: 27"));

    auto junk = run("params \"frobnicate(1)\"");
    CHECK(junk.code == 1);
}

TEST_CASE("check command") {
    auto bad = run("check \"srg(266,220,210)\"");
    CHECK(bad.code == 2);
    CHECK(contains(bad.out, "complement"));
    CHECK(contains(bad.out, "GavrilyukMakhnev05"));
    CHECK(contains(bad.out, "InfeasibleError:"));

    auto syl = run("check \"{5,4,2;1,1,4}\"");
    CHECK(syl.code == 0);
    CHECK(contains(syl.out, "feasible"));

    auto sporadic = run("check \"{135,128,16;1,16,120}\"");
    CHECK(sporadic.code == 2);
    CHECK(contains(sporadic.out, "sporadic: fail"));

    // the infeasibility of srg(266,220,210) lives in a derived graph
    auto norec = run("check \"srg(266,220,210)\" --no-recurse");
    CHECK(norec.code == 0);

    // skipping every failing check flips the verdict
    auto noskip = run("check \"{4,1;1,1}\"");
    CHECK(noskip.code == 2);
    auto skip = run("check \"{4,1;1,1}\" --skip combinatorial,absoluteBound");
    CHECK(skip.code == 0);

    auto j = nlohmann::json::parse(
        run("check \"srg(266,220,210)\" --format json").out);
    CHECK(j["feasible"] == false);
    CHECK(contains(j["firstFailure"].get<std::string>(), "complement"));
}

TEST_CASE("triples command") {
    auto r = run("triples \"{5,4,2;1,1,4}\" 1 1 2");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "1: [0 0 1 0]\n"
                          "   [0 0 0 0]\n"
                          "   [1 0 3 0]\n"
                          "   [0 0 0 0]"));
    CHECK(contains(r.out, "3: [0 0 0 0]\n"
                          "   [0 0 0 0]\n"
                          "   [0 0 6 2]\n"
                          "   [0 0 2 0]"));

    auto pinned = run("triples \"{5,4,2;1,1,4}\" 1 3 3 --pin 3,3,3=a");
    CHECK(pinned.code == 0);
    CHECK(contains(pinned.out, "-1/2*a + 4"));
    CHECK(contains(pinned.out, "parameters: a"));

    auto fixed = run("triples \"{5,4,2;1,1,4}\" 1 2 3 --pin 2,2,1=1");
    CHECK(fixed.code == 0);

    auto enumr = run("triples \"{5,4,2;1,1,4}\" 1 1 2 --enumerate");
    CHECK(enumr.code == 0);
    CHECK(contains(enumr.out, "feasible points: 1"));

    auto contra = run("triples \"{234,165,12;1,30,198}\" 3 3 3 --enumerate");
    CHECK(contra.code == 2);
    CHECK(contains(contra.out, "no feasible points"));

    // Sylvester is triangle-free: (1,1,1) is inadmissible
    auto inadm = run("triples \"{5,4,2;1,1,4}\" 1 1 1");
    CHECK(inadm.code == 1);
}

TEST_CASE("prove command") {
    auto g1360 = run("prove g1360");
    CHECK(g1360.code == 2);
    CHECK(contains(g1360.out, "(71 - 27*alpha)/8"));
    CHECK(contains(g1360.out, "verdict: nonexistent"));

    auto g1600 = run("prove g1600");
    CHECK(g1600.code == 2);
    CHECK(contains(g1600.out, "-17 - 4*alpha"));

    auto bip5 = run("prove bip5");
    CHECK(bip5.code == 2);
    CHECK(contains(bip5.out, "265"));
    CHECK(contains(bip5.out, "243"));

    auto fam = run("prove \"family(1,4)\"");
    CHECK(fam.code == 2);
    CHECK(contains(fam.out, "verdict: nonexistent"));

    auto j = nlohmann::json::parse(run("prove g1360 --format json").out);
    CHECK(j["verdict"] == "nonexistent");
    CHECK(j["name"] == "g1360");

    auto unknown = run("prove frobnicate");
    CHECK(unknown.code == 1);
}

TEST_CASE("scan command") {
    auto r = run("scan --family fameven --r 1..4 --t 1..4");
    CHECK(r.code == 0);
    CHECK(contains(r.out, "16 instances: 16 nonexistent, 0 inconclusive"));

    auto one = run("scan --family fameven --r 1 --t 4");
    CHECK(one.code == 0);
    CHECK(contains(one.out, "family(1,4)"));
    CHECK(contains(one.out, "1 instances: 1 nonexistent"));

    auto junk = run("scan --family nosuch");
    CHECK(junk.code == 1);
}

TEST_CASE("partition command") {
    auto fig = run("partition \"{55,54,50,35,10;1,5,20,45,55}\" 2");
    CHECK(fig.code == 0);
    CHECK(contains(fig.out, "label=\"243\""));
    CHECK(contains(fig.out, "label=\"1260\""));

    auto syl = run("partition \"{5,4,2;1,1,4}\"");
    CHECK(syl.code == 0);
    for (const char* size : {"\"1\"", "\"5\"", "\"20\"", "\"10\""})
        CHECK(contains(syl.out, std::string("[label=") + size + "]"));

    auto pet0 = run("partition \"{3,2;1,1}\" 0");
    CHECK(pet0.code == 0);
    CHECK(contains(pet0.out, "c1_1 [label=\"3\"]"));
    CHECK(contains(pet0.out, "c2_2 [label=\"6\"]"));

    auto bad = run("partition \"{3,2;1,1}\" 9");
    CHECK(bad.code == 1);
}
