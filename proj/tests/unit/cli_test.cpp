#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "json.hpp"
#include "supercodim/report.hpp"
#include "supercodim_cli/cli.hpp"

using supercodim::cli::run;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run(args, out, err);
    return {status, out.str(), err.str()};
}

std::string source(const std::string& relative) { return std::string(SUPERCODIM_SOURCE_DIR) + "/" + relative; }

}  // namespace

TEST(Cli, CodimAbelianIsZero) {
    auto r = call({"codim", "--algebra", "builtin:abelian:2:1", "--n", "3"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("c_3^gr = 0"), std::string::npos) << r.out;

    auto m = call({"codim", "--algebra", "builtin:abelian:2:1", "--n", "3", "--format", "machine"});
    auto doc = nlohmann::json::parse(m.out);
    ASSERT_EQ(doc["rows"].size(), 1u);
    EXPECT_EQ(doc["rows"][0]["total"], "0");
    for (const auto& p : doc["rows"][0]["partials"]) EXPECT_EQ(p["codimension"], "0");
    EXPECT_EQ(doc["rows"][0]["partials"].size(), 4u);
}

TEST(Cli, ExponentOsp12HasUpperBoundLine) {
    auto r = call({"exponent", "--algebra", "builtin:osp12", "--n-max", "4"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("every root is at most d = 5"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("seed 1"), std::string::npos);
    auto m = call({"exponent", "--algebra", "builtin:osp12", "--n-max", "4", "--format", "machine", "--seed", "77"});
    auto report = supercodim::exponent_report_from_machine(m.out);
    EXPECT_EQ(report.seed, 77u);
    EXPECT_EQ(report.rows.back().codimension, 61);
    EXPECT_EQ(supercodim::to_machine(report), m.out);
}

TEST(Cli, LemmasPass) {
    auto r = call({"lemmas", "--lemma", "2", "--max-weight", "25", "--max-height", "6"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("all checks passed"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("3832 cases"), std::string::npos) << r.out;

    auto all = call({"lemmas", "--stirling-n-max", "40"});
    EXPECT_EQ(all.status, 0);
    EXPECT_NE(all.out.find("lemma 1: 1785 cases"), std::string::npos) << all.out;
    EXPECT_NE(all.out.find("stirling: 780 cases"), std::string::npos) << all.out;
}

TEST(Cli, MachineOutputIsByteIdenticalAcrossRunsAndWorkers) {
    for (const auto& verb : {"codim", "cocharacter"}) {
        auto a = call({verb, "--algebra", "builtin:osp12", "--n-max", "4", "--format", "machine"});
        auto b = call({verb, "--algebra", "builtin:osp12", "--n-max", "4", "--format", "machine"});
        auto c = call({verb, "--algebra", "builtin:osp12", "--n-max", "4", "--format", "machine", "--workers", "4"});
        EXPECT_EQ(a.status, 0);
        EXPECT_EQ(a.out, b.out);
        EXPECT_EQ(a.out, c.out);
        EXPECT_EQ(supercodim::to_machine(supercodim::codimension_table_from_machine(a.out)), a.out);
    }
    auto x = call({"amplify", "--algebra", "builtin:osp12", "--format", "machine"});
    auto y = call({"amplify", "--algebra", "builtin:osp12", "--format", "machine", "--workers", "3"});
    EXPECT_EQ(x.out, y.out);
    auto l1 = call({"lemmas", "--format", "machine", "--stirling-n-max", "30"});
    auto l4 = call({"lemmas", "--format", "machine", "--stirling-n-max", "30", "--workers", "4"});
    EXPECT_EQ(l1.out, l4.out);
}

TEST(Cli, CocharacterReportsCharacterCheck) {
    auto r = call({"cocharacter", "--algebra", "builtin:sl2", "--n", "3", "--k", "3"});
    EXPECT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("(2,1) x ()  m = 1"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("holds"), std::string::npos);
    EXPECT_EQ(r.out.find("     0     3"), std::string::npos) << r.out;
}

TEST(Cli, AmplifyOsp12) {
    auto r = call({"amplify", "--algebra", "builtin:osp12", "--q-max", "2", "--format", "machine"});
    EXPECT_EQ(r.status, 0) << r.err;
    auto doc = nlohmann::json::parse(r.out);
    EXPECT_EQ(doc["kind"], "amplification");
    EXPECT_EQ(doc["seed"], 1);
    EXPECT_TRUE(doc["complete"].get<bool>());
    EXPECT_FALSE(doc["integrity_alarm"].get<bool>());
    EXPECT_EQ(doc["degrees"].size(), 3u);
    EXPECT_LE(doc["witness"]["connectors"].size(), 4u);

    auto heis = call({"amplify", "--algebra", "builtin:heisenberg", "--poly", "[x1,x2]"});
    EXPECT_EQ(heis.status, 0);
    EXPECT_NE(heis.out.find("not simple"), std::string::npos);
}

TEST(Cli, ValidateFiles) {
    auto good = call({"validate", "--algebra", source("algebras/osp12.yaml")});
    EXPECT_EQ(good.status, 0);
    EXPECT_NE(good.out.find("valid"), std::string::npos);
    auto bad = call({"validate", "--algebra", source("algebras/bad_grading.yaml"), "--format", "machine"});
    EXPECT_EQ(bad.status, 1);
    auto doc = nlohmann::json::parse(bad.out);
    EXPECT_FALSE(doc["valid"].get<bool>());
    EXPECT_EQ(doc["violations"][0]["kind"], "grading");
}

TEST(Cli, Builtins) {
    auto r = call({"builtins"});
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("builtin:osp12"), std::string::npos);
    EXPECT_NE(r.out.find("builtin:sl2"), std::string::npos);
}

TEST(Cli, ExitStatusOne) {
    EXPECT_EQ(call({}).status, 1);
    EXPECT_EQ(call({"frobnicate"}).status, 1);
    EXPECT_EQ(call({"codim", "--algebra", "builtin:osp12", "--n", "2", "--bogus"}).status, 1);
    EXPECT_EQ(call({"codim", "--algebra", "builtin:osp12"}).status, 1);
    EXPECT_EQ(call({"codim", "--algebra", "builtin:nope", "--n", "2"}).status, 1);
    EXPECT_EQ(call({"codim", "--algebra", "/no/such/file.yaml", "--n", "2"}).status, 1);
    EXPECT_EQ(call({"codim", "--algebra", "builtin:osp12", "--n", "2", "--format", "xml"}).status, 1);
    EXPECT_EQ(call({"amplify", "--algebra", "builtin:osp12", "--poly", "[x1,"}).status, 1);
    EXPECT_EQ(call({"amplify", "--algebra", "builtin:abelian:2:2"}).status, 1);
    EXPECT_EQ(call({"lemmas", "--lemma", "1", "--weights", "50"}).status, 1);
    EXPECT_EQ(call({"lemmas", "--lemma", "3"}).status, 1);

    auto guard = call({"codim", "--algebra", "builtin:osp12", "--n", "4", "--max-entries", "10"});
    EXPECT_EQ(guard.status, 1);
    EXPECT_NE(guard.err.find("--max-entries"), std::string::npos);
}

TEST(Cli, HelpIsSuccess) { EXPECT_EQ(call({"--help"}).status, 0); }

TEST(Cli, EnvironmentCeiling) {
    ::setenv("SUPERCODIM_MAX_ENTRIES", "10", 1);
    auto r = call({"codim", "--algebra", "builtin:osp12", "--n", "3"});
    ::unsetenv("SUPERCODIM_MAX_ENTRIES");
    EXPECT_EQ(r.status, 1);
    EXPECT_EQ(call({"codim", "--algebra", "builtin:osp12", "--n", "3"}).status, 0);
}
