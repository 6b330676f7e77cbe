#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "oracles.hpp"

using namespace cotree;

namespace {

struct Result {
    int code;
    std::string out, err;
};

std::string data(const std::string& f) { return std::string(COTREE_DATA_DIR) + "/" + f; }

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    int code = run_command(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int want_code = 0) {
    args.insert(args.begin(), {"--format", "json"});
    auto r = run(args);
    EXPECT_EQ(r.code, want_code) << r.err;
    return Json::parse(r.out);
}

std::string temp_file(const std::string& name, const std::string& body) {
    auto path = std::filesystem::temp_directory_path() / ("cotree_test_" + name);
    std::ofstream(path) << body;
    return path.string();
}

}  // namespace

TEST(Cli, GodelDummettValidOnThreeChain) {
    auto r = run({"formula", "valid", "--algebra", data("3chain.json"), "(p->q)|(q->p)"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("valid"), std::string::npos);
}

TEST(Cli, RefutationCarriesCertificate) {
    auto j = run_json({"formula", "valid", "--algebra", data("3chain.json"), "p|!p"}, kExitRefuted);
    EXPECT_EQ(j["schema"], kSchema);
    EXPECT_FALSE(j["valid"].get<bool>());
    EXPECT_EQ(j["countervaluation"]["p"]["index"], 1);
    // re-check the certificate by evaluation
    auto a = algebra_from_json(read_json_file(data("3chain.json")));
    EXPECT_NE(eval(a, parse("p|!p"), {{"p", 1}}), a.top());
}

TEST(Cli, HodkinsonAntichain) {
    auto r = run({"morph", "antichain", data("T0.json"), data("T1.json")});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_NE(r.out.find("incomparable"), std::string::npos);
    auto j = run_json({"morph", "antichain", data("T0.json"), data("T1.json"), data("T2.json")});
    EXPECT_TRUE(j["antichain"].get<bool>());
}

TEST(Cli, VerifyJankov) {
    auto j = run_json({"verify", "jankov", "--max-source", "4", "--max-target", "5"});
    EXPECT_EQ(j["kind"], "report");
    EXPECT_EQ(j["suite"], "jankov");
    EXPECT_TRUE(j["discrepancies"].empty());
    EXPECT_GT(j["instances"].get<int>(), 0);
    EXPECT_FALSE(j.contains("wall_ms"));
}

TEST(Cli, ExitCodesForUsageErrors) {
    EXPECT_EQ(run({"verify", "nosuchsuite"}).code, kExitUsage);
    EXPECT_EQ(run({}).code, kExitUsage);
    EXPECT_EQ(run({"frobnicate"}).code, kExitUsage);
    EXPECT_EQ(run({"poset", "show", data("missing.json")}).code, kExitUsage);
    auto bad = run({"formula", "parse", "p -> q <- r"});
    EXPECT_EQ(bad.code, kExitUsage);
    EXPECT_NE(bad.err.find("7"), std::string::npos);
    EXPECT_EQ(run({"--help"}).code, kExitOk);
}

TEST(Cli, MalformedInputs) {
    auto garbage = temp_file("garbage.json", "{not json");
    EXPECT_EQ(run({"poset", "show", garbage}).code, kExitUsage);
    auto wrong_schema = temp_file("schema.json", R"({"schema":"other/9","kind":"poset","elements":["a"],"covers":[]})");
    EXPECT_EQ(run({"poset", "show", wrong_schema}).code, kExitUsage);
    auto cyclic = temp_file("cyclic.json",
                            R"({"schema":"cotree-lab/1","kind":"poset","elements":["a","b"],"covers":[["a","b"],["b","a"]]})");
    EXPECT_EQ(run({"poset", "show", cyclic}).code, kExitUsage);
    auto not_distributive = temp_file(
        "m3.json", R"({"schema":"cotree-lab/1","kind":"algebra","elements":["0","a","b","c","1"],
        "leq":[[1,1,1,1,1],[0,1,0,0,1],[0,0,1,0,1],[0,0,0,1,1],[0,0,0,0,1]]})");
    EXPECT_EQ(run({"algebra", "si-check", not_distributive}).code, kExitUsage);
}

TEST(Cli, DeterministicJsonPerSeed) {
    for (auto* suite : {"stable", "inconsistency", "filtration"}) {
        std::vector<std::string> args{"--format", "json", "verify", suite, "--samples", "10", "--seed", "7"};
        auto a = run(args), b = run(args);
        EXPECT_EQ(a.out, b.out) << suite;
        EXPECT_EQ(a.code, kExitOk) << suite;
    }
}

TEST(Cli, TimingFlagAddsWallTime) {
    auto j = run_json({"--timing", "verify", "si"});
    EXPECT_TRUE(j.contains("wall_ms"));
}

TEST(Cli, PosetJsonRoundTrip) {
    for (auto& p : {make_comb(3), make_hodkinson(1), make_cofork(2)}) {
        auto j = poset_to_json(p);
        auto q = poset_from_json(Json::parse(j.dump()));
        EXPECT_TRUE(q == p);
    }
    auto made = run_json({"poset", "make", "comb", "3"});
    EXPECT_TRUE(poset_from_json(made) == make_comb(3));
}

TEST(Cli, AlgebraJsonRoundTrip) {
    for (auto& p : enumerate_posets(4)) {
        auto a = upset_algebra(p).alg;
        auto b = algebra_from_json(Json::parse(algebra_to_json(a).dump()));
        ASSERT_EQ(a.size(), b.size());
        for (Elem x = 0; x < a.size(); ++x)
            for (Elem y = 0; y < a.size(); ++y) {
                EXPECT_EQ(a.leq(x, y), b.leq(x, y));
                EXPECT_EQ(a.imp(x, y), b.imp(x, y));
                EXPECT_EQ(a.coimp(x, y), b.coimp(x, y));
            }
    }
    // leq-only file gets its operations derived
    auto four = algebra_from_json(read_json_file(data("4bool.json")));
    EXPECT_EQ(four.size(), 4u);
    EXPECT_TRUE(algebras_isomorphic(four, upset_algebra(make_antichain(2)).alg));
}

TEST(Cli, SurjectionCertificateChecks) {
    auto j = run_json({"morph", "find-surjection", data("comb3.json"), data("comb2.json")});
    auto p = poset_from_json(read_json_file(data("comb3.json")));
    auto q = poset_from_json(read_json_file(data("comb2.json")));
    auto idx = j["map"]["indices"].get<std::vector<std::size_t>>();
    EXPECT_TRUE(oracle::bi_p(p, q, idx));
    EXPECT_TRUE(oracle::onto(q, idx));
    auto none = run({"morph", "find-surjection", data("T1.json"), data("T0.json")});
    EXPECT_EQ(none.code, kExitRefuted);
}

TEST(Cli, BisimCheck) {
    auto ok = run({"bisim", "check", data("chain2.json"), "--partition", R"([["c1","c2"]])"});
    EXPECT_EQ(ok.code, kExitOk);
    auto bad = run({"bisim", "check", data("comb2.json"), "--partition", R"([["x1","x2"],["x1'"],["x2'"]])"});
    EXPECT_EQ(bad.code, kExitRefuted);
}

TEST(Cli, CharformAndPatterns) {
    auto j = run_json({"charform", "jankov", "--algebra", data("3chain.json")});
    auto f = parse(j["formula"].get<std::string>());
    auto a = algebra_from_json(read_json_file(data("3chain.json")));
    EXPECT_EQ(f, jankov(a));
    auto pats = run_json({"charform", "patterns", "p|!p", "--size-cap", "3"});
    EXPECT_EQ(pats["patterns"].size(), 5u);
    auto check = run({"charform", "check", "jankov", "--source", data("3chain.json"), "--target", data("T0.json")});
    EXPECT_EQ(check.code, kExitOk);
}

TEST(Cli, EnumerateCounts) {
    auto j = run_json({"poset", "enumerate", "cotrees", "--max", "5"});
    EXPECT_EQ(j["counts"], Json::parse("[1,1,2,4,9]"));
}
