#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "curvezeta/corpus.hpp"

using namespace curvezeta;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(CURVEZETA_BIN) + " " + args + " 2>&1";
    std::FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    return {WEXITSTATUS(status), out};
}

std::string fig(const std::string& name) { return corpus_dir() + "/" + name + ".rg"; }

} // namespace

TEST_CASE("zeta and check output") {
    RunResult z = run("zeta --graph " + fig("fig1"));
    CHECK(z.code == 0);
    CHECK(z.out.find("Z = 1/(2*(s + 1))") != std::string::npos);

    RunResult c = run("check --graph " + fig("fig3"));
    CHECK(c.code == 0);
    CHECK(c.out.find("FAILS at s0 = -1/5") != std::string::npos);

    RunResult m = run("monodromy --graph " + fig("fig27"));
    CHECK(m.out.find("Phi_14 * Phi_28 / Phi_1") != std::string::npos);
}

TEST_CASE("machine-readable output") {
    RunResult z = run("--json zeta --graph " + fig("fig1"));
    CHECK(z.code == 0);
    nlohmann::json j = nlohmann::json::parse(z.out);
    CHECK(j["zeta"]["den"].size() == 2);
    CHECK(j["poles"][0]["value"] == "-1");
    CHECK(j["poles"][0]["order"] == 1);

    RunResult c = run("--json check --graph " + fig("fig10"));
    nlohmann::json jc = nlohmann::json::parse(c.out);
    CHECK(jc["holds"] == "no");
    CHECK(jc["failing_pole"] == "-7/5");
}

TEST_CASE("resolve exit codes") {
    RunResult ok = run("resolve --curve \"x^3-y^2\" --form polar --seed 7");
    CHECK(ok.code == 0);
    CHECK(ok.out.find("(N, nu) = (6, 8)") != std::string::npos);

    RunResult bad = run("resolve --curve \"x^3-y^2+1\" --form standard");
    CHECK(bad.code == 3);

    RunResult syn = run("resolve --curve \"x^3 -\" --form standard");
    CHECK(syn.code == 3);
}

TEST_CASE("builders and graph tools") {
    RunResult q = run("build-quasi 5 3");
    CHECK(q.code == 0);
    CHECK(q.out.find("N=15 nu=18") != std::string::npos);

    RunResult cable = run("build-cable 3 2 7 2");
    CHECK(cable.code == 0);
    CHECK(cable.out.find("graph cable") != std::string::npos);

    RunResult v = run("graph validate --graph " + fig("figB4"));
    CHECK(v.code == 0);

    RunResult d = run("graph dot --graph " + fig("fig1"));
    CHECK(d.out.find("doublecircle") != std::string::npos);
}

TEST_CASE("corpus command") {
    RunResult r = run("corpus --filter fig1-cusp");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS  fig1-cusp-polar") != std::string::npos);
    CHECK(r.out.find("1 passed, 0 failed") != std::string::npos);
}

TEST_CASE("corpus detects perturbed expectations") {
    // corrupt one figure in a copy of the corpus; the runner must name it
    std::string tmp = "perturbed_corpus";
    std::string setup = "rm -rf " + tmp + " && cp -r " + corpus_dir() + " " + tmp +
                        " && sed -i 's/vertex E4 kind=exc N=8 nu=7/vertex E4 kind=exc N=8 nu=8/' " +
                        tmp + "/fig2.rg";
    REQUIRE(std::system(setup.c_str()) == 0);
    std::string cmd = "CURVEZETA_CORPUS=" + tmp + " " + std::string(CURVEZETA_BIN) +
                      " corpus --filter fig2 2>&1";
    std::FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) out.append(buf.data(), n);
    int status = pclose(p);
    CHECK(WEXITSTATUS(status) == 1);
    CHECK(out.find("FAIL  fig2-a1-quartic") != std::string::npos);
    int rc = std::system(("rm -rf " + tmp).c_str());
    (void)rc;
}

TEST_CASE("deadbranch command") {
    RunResult r = run("deadbranch --graph " + fig("figB5"));
    CHECK(r.code == 0);
    CHECK(r.out.find("alpha_1 = 1") != std::string::npos);

    RunResult s = run("deadbranch-sweep --max-ab 14");
    CHECK(s.code == 0);
    CHECK(s.out.find("0 failures") != std::string::npos);
}
