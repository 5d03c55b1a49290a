#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "jkl/cli.hpp"

using namespace jkl;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run(std::vector<std::string> args, const std::string& stdin_text = "") {
    std::ostringstream out, err;
    std::istringstream in(stdin_text);
    int code = cli_run(std::move(args), out, err, in);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("tau command") {
    auto r = run({"tau", "--n", "3", "g[1,2]"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"module\":\"wedge2(H)⊗dual(H)\",\"coords\":{\"(1^2)⊗2*\":1}}\n");

    auto t = run({"tau", "--n", "3", "--format", "text", "g[1,2]"});
    CHECK(t.out == "(1^2)⊗2*\n");

    auto bad = run({"tau", "--n", "3", "T[1,2]"});
    CHECK(bad.code == 1);
    CHECK(bad.err.find("not an IA automorphism") != std::string::npos);
}

TEST_CASE("tau2 command") {
    auto r = run({"tau2", "--n", "3", "[g[1,2],g[2,1]]"});
    CHECK(r.code == 0);
    CHECK(r.out.find("[(1^2)⊗1]⊗1*") != std::string::npos);
    auto small = run({"tau2", "--degree", "2", "[g[1,2],g[2,1]]"});
    CHECK(small.code == 1);
}

TEST_CASE("decompose command") {
    auto r = run({"decompose", "--n", "3", "wedge2(tensor(wedge2(H),dual(H)))"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    REQUIRE(j.is_array());
    CHECK(j.size() == 2);

    CHECK(run({"decompose", "--n", "9", "H"}).code == 1);
    CHECK(run({"decompose", "--n", "3", "wat(H)"}).code == 1);
}

TEST_CASE("weyl-dim command") {
    auto r = run({"weyl-dim", "--format", "text", "phi[1,0,0]"});
    CHECK(r.code == 0);
    CHECK(r.out == "3\n");
    auto r2 = run({"weyl-dim", "--n", "4", "lambda[2,1,0,-1]"});
    CHECK(Json::parse(r2.out)["dimension"] == 64);
    CHECK(run({"weyl-dim", "lambda[0,1]"}).code == 1);
}

TEST_CASE("cycle and map pipeline") {
    auto cyc = run({"cycle", "--n", "4", "g[1,2]*g[1,4]", "g[2,4]"});
    REQUIRE(cyc.code == 0);
    auto fed = run({"map", "--n", "4", "f"}, cyc.out);
    REQUIRE(fed.code == 0);
    auto g1 = run({"map", "--n", "4", "g1"}, fed.out);
    REQUIRE(g1.code == 0);
    CHECK(g1.out == "{\"module\":\"wedge2(H)\",\"coords\":{\"(1^2)\":2}}\n");

    auto wrong = run({"map", "--n", "4", "g1"}, cyc.out);
    CHECK(wrong.code == 1);
    CHECK(wrong.err.find("does not match") != std::string::npos);
}

TEST_CASE("verify command") {
    auto r = run({"verify", "--claim", "lemma-decomp-n3", "--format", "json"});
    CHECK(r.code == 0);
    Json j = Json::parse(r.out);
    CHECK(j["summary"]["pass"] == 1);
    CHECK(j["claims"][0]["id"] == "lemma-decomp-n3");
    CHECK(j["claims"][0]["status"] == "pass");

    auto w4 = run({"verify", "--claim", "lemma-wedge2-n4", "--format", "json"});
    CHECK(w4.code == 0);
    Json jw = Json::parse(w4.out);
    CHECK(jw["claims"][0]["status"] == "pass");
    CHECK(jw["claims"][0]["expected"].size() == 5);  // five labels at n=4

    auto txt = run({"verify", "--claim", "theorem-jf-n3", "--format", "text"});
    CHECK(txt.code == 0);
    CHECK(txt.out.find("[PASS] theorem-jf-n3") != std::string::npos);

    CHECK(run({"verify", "--claim", "nosuch"}).code == 1);
}

TEST_CASE("verify respects JKL_THREADS and stays deterministic") {
    auto serial = run({"verify", "--n", "3", "--format", "json"});
    REQUIRE(serial.code == 0);
    setenv("JKL_THREADS", "2", 1);
    auto parallel = run({"verify", "--n", "3", "--format", "json"});
    unsetenv("JKL_THREADS");
    REQUIRE(parallel.code == 0);
    Json a = Json::parse(serial.out), b = Json::parse(parallel.out);
    // identical up to timings
    for (auto* j : {&a, &b})
        for (auto& c : (*j)["claims"]) c.erase("runtime_ms");
    CHECK(a.dump() == b.dump());
}

TEST_CASE("verify writes a report file") {
    std::string path = "/tmp/jkl_report_test.json";
    auto r = run({"verify", "--claim", "theorem-jf-n3", "--out", path, "--format", "text"});
    CHECK(r.code == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    Json j;
    f >> j;
    CHECK(j["summary"]["pass"] == 1);
}

TEST_CASE("rank command") {
    auto r = run({"rank", "--n", "3", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("formula=18") != std::string::npos);
    CHECK(run({"rank", "--n", "7"}).code == 1);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    CHECK(run({"tau"}).code == 2);  // missing word
}

TEST_CASE("n out of range is a domain error") {
    CHECK(run({"tau", "--n", "13", "g[1,2]"}).code == 1);
    CHECK(run({"tau", "--n", "1", "g[1,2]"}).code == 1);
}

TEST_CASE("printed vectors round trip byte-identically") {
    auto r = run({"tau2", "--n", "3", "[g[1,2],g[2,1]]"});
    Json j = Json::parse(r.out);
    JohnsonCtx ctx(3);
    ModuleElement v = element_from_json(j, ctx.Tau2);
    CHECK(element_to_json(v).dump() + "\n" == r.out);
}
